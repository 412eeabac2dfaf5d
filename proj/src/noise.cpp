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

#include "lf/noise.hpp"

#include <cmath>
#include <sstream>

#include "lf/pauli.hpp"

namespace lf {

namespace {

void check_rate(double rate, const char* what) {
  if (!(rate >= 0.0) || !std::isfinite(rate)) {
    std::ostringstream msg;
    msg << what << " rate must be finite and non-negative, got " << rate;
    throw ValidationError(msg.str());
  }
}

}  // namespace

std::string to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::kRelaxation: return "relaxation";
    case ChannelKind::kDephasing: return "dephasing";
    case ChannelKind::kCollectiveRelaxation: return "collective_relaxation";
    case ChannelKind::kCollectiveDephasing: return "collective_dephasing";
    case ChannelKind::kTwoPhoton: return "two_photon";
    case ChannelKind::kCustom: return "custom";
  }
  return "custom";
}

NoiseChannel custom_channel(Operator jump, double rate, std::string label) {
  check_rate(rate, "custom");
  if (jump.rows() != jump.cols()) throw ValidationError("jump operator must be square");
  return {std::move(jump), rate, rate, ChannelKind::kCustom, std::move(label)};
}

NoiseChannel relaxation(int num_qubits, int qubit, double gamma1) {
  check_rate(gamma1, "relaxation");
  return {embed(pauli::sigma_minus(), qubit, num_qubits), gamma1, gamma1,
          ChannelKind::kRelaxation,
          "relaxation[q" + std::to_string(qubit) + "] coefficient=Gamma1"};
}

NoiseChannel dephasing(int num_qubits, int qubit, double gamma_phi) {
  check_rate(gamma_phi, "dephasing");
  return {embed(pauli::sigma_z(), qubit, num_qubits), gamma_phi / 2.0, gamma_phi,
          ChannelKind::kDephasing,
          "dephasing[q" + std::to_string(qubit) +
              "] coefficient=Gamma_phi/2"};
}

NoiseChannel collective_dephasing(int num_qubits, double gamma_phi_c) {
  check_rate(gamma_phi_c, "collective dephasing");
  const std::size_t d = dim_for_qubits(num_qubits);
  Operator jump = Operator::Zero(d, d);
  for (int q = 0; q < num_qubits; ++q) jump += embed(pauli::sigma_z(), q, num_qubits);
  return {std::move(jump), gamma_phi_c / 2.0, gamma_phi_c,
          ChannelKind::kCollectiveDephasing,
          "collective_dephasing coefficient=Gamma_phi_c/2"};
}

NoiseChannel collective_relaxation(int num_qubits, double gamma1_c) {
  check_rate(gamma1_c, "collective relaxation");
  const std::size_t d = dim_for_qubits(num_qubits);
  Operator jump = Operator::Zero(d, d);
  for (int q = 0; q < num_qubits; ++q) jump += embed(pauli::sigma_minus(), q, num_qubits);
  return {std::move(jump), gamma1_c, gamma1_c, ChannelKind::kCollectiveRelaxation,
          "collective_relaxation coefficient=Gamma1_c"};
}

NoiseChannel two_photon(int num_qubits, double gamma_2p) {
  if (num_qubits != 2) {
    throw ValidationError("two-photon relaxation is only defined for 2 qubits, got " +
                          std::to_string(num_qubits));
  }
  check_rate(gamma_2p, "two-photon");
  return {kron(pauli::sigma_minus(), pauli::sigma_minus()), gamma_2p, gamma_2p,
          ChannelKind::kTwoPhoton,
          "two_photon coefficient=Gamma_2p"};
}

NoiseModel::NoiseModel(int num_qubits) : num_qubits_(num_qubits) {
  dim_for_qubits(num_qubits);
}

NoiseModel& NoiseModel::add(NoiseChannel channel) {
  if (channel.dim() != dim() || channel.jump.cols() != channel.jump.rows()) {
    throw ValidationError("channel '" + channel.label + "' has dimension " +
                          std::to_string(channel.dim()) + ", model expects " +
                          std::to_string(dim()));
  }
  check_rate(channel.rate, channel.label.c_str());
  if (channel.rate == 0.0) return *this;
  channels_.push_back(std::move(channel));
  return *this;
}

NoiseModel NoiseModel::merged(const NoiseModel& other) const {
  if (other.num_qubits_ != num_qubits_) {
    throw ValidationError("cannot merge noise models of different qubit counts");
  }
  NoiseModel out = *this;
  for (const auto& ch : other.channels_) out.channels_.push_back(ch);
  return out;
}

NoiseModel NoiseModel::scaled(double factor) const {
  check_rate(factor, "scale");
  NoiseModel out(num_qubits_);
  for (NoiseChannel ch : channels_) {
    ch.rate *= factor;
    ch.nominal_rate *= factor;
    out.add(std::move(ch));
  }
  return out;
}

double NoiseModel::total_nominal_rate() const {
  double total = 0.0;
  for (const auto& ch : channels_) total += ch.nominal_rate;
  return total;
}

NoiseModel standard_uncorrelated(int num_qubits, std::span<const double> gamma1,
                                 std::span<const double> gamma_phi) {
  if (gamma1.size() != static_cast<std::size_t>(num_qubits) ||
      gamma_phi.size() != static_cast<std::size_t>(num_qubits)) {
    throw ValidationError("per-qubit rate lists must have length " +
                          std::to_string(num_qubits));
  }
  NoiseModel model(num_qubits);
  for (int q = 0; q < num_qubits; ++q) {
    model.add(relaxation(num_qubits, q, gamma1[q]));
    model.add(dephasing(num_qubits, q, gamma_phi[q]));
  }
  return model;
}

}  // namespace lf
