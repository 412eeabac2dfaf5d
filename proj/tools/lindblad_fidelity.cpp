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

// Command-line front end: run scenario configs, reproduce the reference
// claims, and evaluate fidelity-reduction factors for single channels.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "lf/noise.hpp"
#include "lf/pauli.hpp"
#include "lf/scenario.hpp"
#include "lf/theory.hpp"
#include "lf/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailedClaims = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

nlohmann::json read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lf::ValidationError("config: cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw lf::ValidationError("config: invalid JSON (" + std::string(e.what()) + ")");
  }
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw lf::ValidationError("cannot write '" + path + "'");
  out << body;
}

int run_command(const std::string& config_path, const std::string& out_path,
                const std::string& csv_path, std::optional<std::uint64_t> seed) {
  lf::RunOptions options;
  options.seed_override = seed;
  const lf::FidelityReport report = lf::run_config(read_config(config_path), options);
  const std::string body = lf::to_json(report).dump(2) + "\n";
  if (!csv_path.empty()) write_file(csv_path, lf::to_csv(report));
  if (out_path.empty()) {
    std::cout << body;
  } else {
    write_file(out_path, body);
    std::cout << lf::format_table(report);
  }
  return kExitOk;
}

int verify_command(bool fast, std::optional<std::uint64_t> seed) {
  lf::VerifyOptions options;
  options.fast = fast;
  options.seed = seed ? *seed : lf::fallback_seed();
  const std::vector<lf::ClaimRow> rows = lf::verify_claims(options);
  std::size_t failed = 0;
  std::cout << std::left << std::setw(4) << "#" << std::setw(78) << "claim" << std::setw(34)
            << "reference" << std::setw(44) << "computed" << std::setw(28) << "tolerance"
            << "status\n";
  for (const lf::ClaimRow& r : rows) {
    std::cout << std::left << std::setw(4) << r.criterion << std::setw(78) << r.claim
              << std::setw(34) << r.expected << std::setw(44) << r.computed << std::setw(28)
              << r.tolerance << (r.pass ? "PASS" : "FAIL") << '\n';
    failed += !r.pass;
  }
  if (failed) {
    std::cout << "\n" << failed << " of " << rows.size() << " claims FAILED:\n";
    for (const lf::ClaimRow& r : rows) {
      if (!r.pass) std::cout << "  [" << r.criterion << "] " << r.claim << '\n';
    }
    return kExitFailedClaims;
  }
  std::cout << "\nall " << rows.size() << " claims reproduced\n";
  return kExitOk;
}

int delta_f_command(const std::string& channel, int qubit, int num_qubits) {
  const std::size_t d = lf::dim_for_qubits(num_qubits);
  const double dd = static_cast<double>(d);
  if (qubit < 0 || qubit >= num_qubits) {
    throw lf::ValidationError("--qubit: index " + std::to_string(qubit) +
                              " out of range for --n " + std::to_string(num_qubits));
  }
  lf::Operator jump;
  std::string reference;
  double reference_value = 0.0;
  if (channel == "sigma-minus") {
    jump = lf::embed(lf::pauli::sigma_minus(), qubit, num_qubits);
    reference = "-d/(2(d+1))";
    reference_value = -dd / (2.0 * (dd + 1.0));
  } else if (channel == "sigma-z") {
    jump = lf::embed(lf::pauli::sigma_z(), qubit, num_qubits);
    reference = "-d/(d+1)";
    reference_value = -dd / (dd + 1.0);
  } else if (channel == "identity") {
    jump = lf::Operator::Identity(d, d);
    reference = "0";
  } else if (channel == "collective-dephasing") {
    jump = lf::collective_dephasing(num_qubits, 1.0).jump;
    reference = "-N d/(d+1)";
    reference_value = -num_qubits * dd / (dd + 1.0);
  } else if (channel == "collective-relaxation") {
    jump = lf::collective_relaxation(num_qubits, 1.0).jump;
    reference = "-N d/(2(d+1))";
    reference_value = -num_qubits * dd / (2.0 * (dd + 1.0));
  } else if (channel == "two-photon") {
    jump = lf::two_photon(num_qubits, 1.0).jump;
    reference = "-1/5";
    reference_value = -0.2;
  } else {
    throw lf::ValidationError("--channel: unknown channel '" + channel +
                              "' (expected sigma-minus, sigma-z, identity, "
                              "collective-dephasing, collective-relaxation, two-photon)");
  }
  const double value = lf::delta_f_general(jump, num_qubits).value;
  std::cout << std::setprecision(15) << "deltaF(" << channel << ", n=" << num_qubits
            << ") = " << value << '\n'
            << "closed form " << reference << " = " << reference_value << '\n';
  if (channel == "sigma-z" || channel == "collective-dephasing") {
    std::cout << "note: the master-equation coefficient for this channel is Gamma_phi/2\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First-order gate-fidelity reduction under weak Markovian dissipation"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  app.add_option("--seed", seed, "Seed override for all random sampling (fallback: LF_SEED)");

  auto* run = app.add_subcommand("run", "Run the scenarios of a JSON config");
  std::string config_path, out_path, csv_path;
  run->add_option("--config", config_path, "Scenario config (JSON)")->required();
  run->add_option("--out", out_path, "Report output path (JSON); stdout when omitted");
  run->add_option("--csv", csv_path, "Optional CSV summary path");

  auto* verify = app.add_subcommand("verify", "Reproduce every reference claim");
  bool fast = false;
  verify->add_flag("--fast", fast, "Use ten times fewer Monte Carlo samples");

  auto* delta_f = app.add_subcommand("delta-f", "Fidelity-reduction factor of one channel");
  std::string channel;
  int qubit = 0;
  int num_qubits = 1;
  delta_f->add_option("--channel", channel,
                      "sigma-minus | sigma-z | identity | collective-dephasing | "
                      "collective-relaxation | two-photon")
      ->required();
  delta_f->add_option("--qubit", qubit, "Target qubit for single-qubit channels");
  delta_f->add_option("--n", num_qubits, "Number of qubits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*run) return run_command(config_path, out_path, csv_path, seed);
    if (*verify) return verify_command(fast, seed);
    if (*delta_f) return delta_f_command(channel, qubit, num_qubits);
  } catch (const lf::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const lf::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const lf::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}
