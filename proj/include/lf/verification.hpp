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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lf {

/// One reproduced claim: what was expected, what came out, and whether it is
/// inside the stated tolerance.
struct ClaimRow {
  int criterion = 0;
  std::string claim;
  std::string expected;
  std::string computed;
  std::string tolerance;
  bool pass = false;
};

struct VerifyOptions {
  /// Reduces Monte Carlo sample counts tenfold.
  bool fast = false;
  std::uint64_t seed = 20211;
};

/// Closed-form fidelity-reduction table (exact values of deltaF).
std::vector<ClaimRow> check_delta_f_table();
/// First-order prediction vs. exact simulation for Haar-random gates, with
/// quadratic residual scaling.
std::vector<ClaimRow> check_first_order_prediction(const VerifyOptions& options);
/// Spread of simulated deficits across Haar-random gates.
std::vector<ClaimRow> check_gate_independence(const VerifyOptions& options);
/// tau^2 coefficients of constant-amplitude pi rotations about x and z.
std::vector<ClaimRow> check_second_order_rotations();
/// Collective vs. uncorrelated relaxation and dephasing at first order.
std::vector<ClaimRow> check_correlated_equals_uncorrelated(const VerifyOptions& options);
/// Coherence decay rates, dark states and two-photon invisibility.
std::vector<ClaimRow> check_coherence_rates();
/// Haar moments of Pauli coordinates.
std::vector<ClaimRow> check_haar_moments(const VerifyOptions& options);
/// Exact fidelity vs. Monte Carlo over a grid covering every channel kind.
std::vector<ClaimRow> check_oracle_equivalence(const VerifyOptions& options);
/// Density-matrix invariants and perturbative-correction scaling.
std::vector<ClaimRow> check_engine_invariants(const VerifyOptions& options);

/// All of the above, in criterion order.
std::vector<ClaimRow> verify_claims(const VerifyOptions& options);

/// Two-sided normal quantile z with P(|Z| > z) = alpha.
double two_sided_normal_quantile(double alpha);

/// z threshold that keeps the family-wise false-alarm rate of `comparisons`
/// independent tests equal to that of a single 3-sigma test.
double family_wise_three_sigma(std::size_t comparisons);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace lf
