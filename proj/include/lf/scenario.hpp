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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "lf/lindblad.hpp"
#include "lf/noise.hpp"

namespace lf {

inline constexpr const char* kSchemaId = "lindblad-fidelity/v1";
inline constexpr std::uint64_t kDefaultSeed = 20211;
inline constexpr std::size_t kDefaultSamples = 10000;

enum class Evaluation { kPredict, kSimulate, kBoth };

struct ChannelSpec {
  std::string kind;
  std::vector<int> qubits;  // empty for collective and two-photon channels
  double rate = 0.0;
};

struct PauliTerm {
  std::string pauli;
  double coeff = 0.0;
};

struct SegmentSpec {
  double duration = 0.0;
  std::vector<PauliTerm> hamiltonian;
};

struct GateSpec {
  std::string name;  // named gate, "haar-random", or "schedule"
  std::vector<int> qubits;
  std::uint64_t seed = 0;
  std::vector<SegmentSpec> segments;
};

struct ScenarioConfig {
  std::string name;
  int num_qubits = 1;
  GateSpec gate;
  std::vector<ChannelSpec> noise;
  double tau = 0.0;
  Evaluation evaluation = Evaluation::kBoth;
  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
};

struct RunOptions {
  std::optional<std::uint64_t> seed_override;
  /// Multiplies every scenario's Monte Carlo sample count (used by --fast).
  double sample_scale = 1.0;
};

/// Seed used when neither the command line nor the config provides one:
/// LF_SEED from the environment, else kDefaultSeed. Throws ValidationError
/// if LF_SEED is set but not an unsigned integer.
std::uint64_t fallback_seed();

/// Parses and validates a config document. Accepts either a single scenario
/// object or {"scenarios": [...]} with shared defaults at the top level.
/// Errors name the offending field, e.g. "scenarios[0].noise[1].kind".
std::vector<ScenarioConfig> parse_config(const nlohmann::json& config,
                                         const RunOptions& options = {});

GateSchedule build_schedule(const ScenarioConfig& scenario);
NoiseModel build_noise_model(const ScenarioConfig& scenario);

struct MonteCarloResult {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

struct ScenarioResult {
  std::size_t index = 0;
  std::string name;
  int num_qubits = 1;
  double tau = 0.0;
  std::string gate;
  std::uint64_t seed = 0;
  double gamma_tau = 0.0;      // tau * sum of nominal rates
  double max_gamma_tau = 0.0;  // tau * largest nominal rate
  bool expansion_warning = false;
  std::optional<double> predicted_first_order;
  std::optional<double> predicted_second_order;
  std::optional<double> simulated_exact;
  std::optional<MonteCarloResult> simulated_monte_carlo;
  std::optional<double> residual;
  std::optional<double> residual_over_gammatau_sq;
  struct Term {
    std::string label;
    double rate = 0.0;
    double delta_f = 0.0;
    double contribution = 0.0;
  };
  std::vector<Term> terms;
};

ScenarioResult run_scenario(const ScenarioConfig& scenario, std::size_t index = 0);

struct FidelityReport {
  std::vector<ScenarioResult> scenarios;
  std::string config_hash;
  std::string version;
  double wall_time_seconds = 0.0;
};

/// Runs every scenario and assembles the report in scenario order. Monte
/// Carlo sampling inside each scenario runs on split random streams in
/// parallel.
FidelityReport run_config(const nlohmann::json& config, const RunOptions& options = {});

nlohmann::json to_json(const FidelityReport& report);
std::string to_csv(const FidelityReport& report);
std::string format_table(const FidelityReport& report);

/// Checks a report document against the published v1 report schema.
/// Returns one message per violation; empty means valid.
std::vector<std::string> validate_report(const nlohmann::json& report);

/// 64-bit FNV-1a of the canonical JSON serialization, as 16 hex digits.
std::string config_hash(const nlohmann::json& config);

}  // namespace lf
