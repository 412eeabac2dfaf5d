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

#include <span>
#include <string>
#include <vector>

#include "lf/types.hpp"

namespace lf {

enum class ChannelKind {
  kRelaxation,
  kDephasing,
  kCollectiveRelaxation,
  kCollectiveDephasing,
  kTwoPhoton,
  kCustom,
};

std::string to_string(ChannelKind kind);

/// One dissipative process: a jump operator and the coefficient multiplying
/// its dissipator in the master equation.
///
/// `rate` is always the master-equation coefficient. `nominal_rate` is the
/// rate a user quotes for the process; the two differ for dephasing, where
/// coherences decay at the nominal rate while the dissipator of sigma_z
/// carries half of it.
struct NoiseChannel {
  Operator jump;
  double rate = 0.0;
  double nominal_rate = 0.0;
  ChannelKind kind = ChannelKind::kCustom;
  std::string label;

  std::size_t dim() const { return static_cast<std::size_t>(jump.rows()); }
};

/// Arbitrary jump operator with master-equation coefficient `rate`.
NoiseChannel custom_channel(Operator jump, double rate, std::string label);

NoiseChannel relaxation(int num_qubits, int qubit, double gamma1);
/// Stored coefficient is gamma_phi / 2.
NoiseChannel dephasing(int num_qubits, int qubit, double gamma_phi);
/// Equal-weight sum of sigma_z over all qubits; stored coefficient gamma_phi_c / 2.
NoiseChannel collective_dephasing(int num_qubits, double gamma_phi_c);
/// Equal-weight sum of sigma_minus over all qubits; stored coefficient gamma1_c.
NoiseChannel collective_relaxation(int num_qubits, double gamma1_c);
/// sigma_minus x sigma_minus; only defined for two qubits.
NoiseChannel two_photon(int num_qubits, double gamma_2p);

class NoiseModel {
 public:
  explicit NoiseModel(int num_qubits);

  /// Appends a channel. Zero-rate channels are dropped.
  NoiseModel& add(NoiseChannel channel);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return std::size_t{1} << num_qubits_; }
  const std::vector<NoiseChannel>& channels() const { return channels_; }
  bool empty() const { return channels_.empty(); }

  /// Channels of both models, in order. Qubit counts must agree.
  NoiseModel merged(const NoiseModel& other) const;

  /// Same jump operators with every coefficient multiplied by `factor`.
  NoiseModel scaled(double factor) const;

  /// Sum of nominal rates; the natural "Gamma" when quoting Gamma*tau.
  double total_nominal_rate() const;

 private:
  int num_qubits_;
  std::vector<NoiseChannel> channels_;
};

/// Relaxation and dephasing on every qubit with per-qubit rates.
NoiseModel standard_uncorrelated(int num_qubits, std::span<const double> gamma1,
                                 std::span<const double> gamma_phi);

}  // namespace lf
