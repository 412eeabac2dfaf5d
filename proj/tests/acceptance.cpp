// Copyright 2026 The lindblad-fidelity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance gate: one PASS/FAIL line per criterion, followed by the rows
// that make it up. Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "lf/verification.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  std::function<std::vector<lf::ClaimRow>()> run;
};

}  // namespace

int main() {
  const lf::VerifyOptions options{};
  const std::vector<Criterion> criteria = {
      {1, "closed-form deltaF table", [] { return lf::check_delta_f_table(); }},
      {2, "first-order prediction, quadratic residual",
       [&] { return lf::check_first_order_prediction(options); }},
      {3, "gate independence of the deficit",
       [&] { return lf::check_gate_independence(options); }},
      {4, "second-order pi-rotation coefficients",
       [] { return lf::check_second_order_rotations(); }},
      {5, "correlated equals uncorrelated at first order",
       [&] { return lf::check_correlated_equals_uncorrelated(options); }},
      {6, "coherence rates and dark states", [] { return lf::check_coherence_rates(); }},
      {7, "Haar moments of Pauli coordinates",
       [&] { return lf::check_haar_moments(options); }},
      {8, "exact fidelity vs Monte Carlo",
       [&] { return lf::check_oracle_equivalence(options); }},
      {9, "engine invariants and perturbative scaling",
       [&] { return lf::check_engine_invariants(options); }},
  };

  int failures = 0;
  std::vector<std::string> details;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<lf::ClaimRow> rows;
    std::string error;
    try {
      rows = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = error.empty() && !rows.empty();
    for (const auto& r : rows) pass = pass && r.pass;
    if (!pass) ++failures;
    std::printf("[%s] criterion %d: %s (%zu checks, %.1fs)%s%s\n", pass ? "PASS" : "FAIL",
                c.id, c.title, rows.size(), secs, error.empty() ? "" : " error: ",
                error.c_str());
    for (const auto& r : rows) {
      char line[512];
      std::snprintf(line, sizeof line, "  %s c%d %s | expected %s | got %s | tol %s",
                    r.pass ? "ok  " : "FAIL", r.criterion, r.claim.c_str(), r.expected.c_str(),
                    r.computed.c_str(), r.tolerance.c_str());
      details.emplace_back(line);
    }
  }
  std::printf("\n%d of %zu criteria passed\n\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  for (const auto& d : details) std::printf("%s\n", d.c_str());
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
