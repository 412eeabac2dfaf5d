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
#include <random>

#include "lf/lindblad.hpp"
#include "lf/noise.hpp"
#include "lf/types.hpp"

namespace lf {

/// Source of Haar-random pure states and unitaries in dimension d.
///
/// States are normalized vectors of i.i.d. standard complex Gaussians, which
/// is the unitarily invariant measure. `stream` derives independent
/// generators from one seed so that chunked or parallel loops stay
/// reproducible regardless of how the chunks are scheduled.
class HaarSampler {
 public:
  HaarSampler(std::uint64_t seed, std::size_t dim);

  static HaarSampler stream(std::uint64_t seed, std::size_t dim, std::uint64_t index);

  std::uint64_t seed() const { return seed_; }
  std::size_t dim() const { return dim_; }

  StateVector state();
  Operator unitary();

 private:
  HaarSampler(std::uint64_t seed, std::size_t dim, std::seed_seq& seq);
  cplx gaussian();

  std::uint64_t seed_;
  std::size_t dim_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

inline StateVector haar_state(HaarSampler& sampler) { return sampler.state(); }

struct FidelityEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Sample moments of the Pauli coordinates n_i = <psi| f_i |psi> over the
/// d^2 - 1 traceless basis strings (index 0 of pauli_basis is skipped).
struct PauliMoments {
  std::size_t dim = 0;
  std::size_t samples = 0;
  Eigen::VectorXd mean;             // <n_i>
  Eigen::VectorXd mean_std_error;
  Eigen::MatrixXd second;           // <n_i n_j>
  Eigen::MatrixXd second_std_error;
};

/// Samples per independent random stream in chunked estimators.
inline constexpr std::size_t kSamplesPerStream = 2048;

PauliMoments pauli_moments(std::uint64_t seed, int num_qubits, std::size_t samples);

/// Literal Haar average of <psi| U^dag E(|psi><psi|) U |psi> over sampled psi.
FidelityEstimate avg_fidelity_monte_carlo(const GateSchedule& schedule,
                                          const NoiseModel& model,
                                          std::uint64_t seed, std::size_t samples);

/// Deterministic average gate fidelity (d F_e + 1) / (d + 1) where F_e is the
/// entanglement fidelity of the simulated channel composed with U^dag.
double avg_fidelity_exact(const GateSchedule& schedule, const NoiseModel& model);

/// Same relation evaluated for an explicit superoperator and target unitary.
double avg_fidelity_exact(const Propagator& channel, const Operator& target);

}  // namespace lf
