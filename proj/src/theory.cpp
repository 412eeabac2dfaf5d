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

#include "lf/theory.hpp"

#include <algorithm>
#include <cmath>

#include "lf/pauli.hpp"

namespace lf {

namespace {

void check_jump(const Operator& jump, int num_qubits) {
  const std::size_t d = dim_for_qubits(num_qubits);
  if (jump.rows() != jump.cols() || static_cast<std::size_t>(jump.rows()) != d) {
    throw ValidationError("jump operator is " + std::to_string(jump.rows()) + "x" +
                          std::to_string(jump.cols()) + ", expected " +
                          std::to_string(d) + "x" + std::to_string(d));
  }
}

void check_tau(double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw ValidationError("gate duration must be finite and non-negative");
  }
}

void check_rates(std::span<const double> rates) {
  for (double r : rates) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw ValidationError("rates must be finite and non-negative");
    }
  }
}

void flag_expansion(FidelityPrediction& p, double max_gamma_tau) {
  p.max_gamma_tau = max_gamma_tau;
  p.expansion_warning = max_gamma_tau > kExpansionWarningThreshold;
}

}  // namespace

DeltaF delta_f_general(const Operator& jump, int num_qubits) {
  check_jump(jump, num_qubits);
  const double d = static_cast<double>(jump.rows());
  const double norm_sq = jump.squaredNorm();  // Tr[L^dag L]
  double pair_sum = 0.0;
  for (const PauliString& p : pauli_basis(num_qubits)) {
    if (p.is_identity()) continue;
    pair_sum += trace_conjugated_pair(jump, p).real();
  }
  const double value =
      (1.0 - d) / (d * d) * norm_sq + pair_sum / (d * d * (d + 1.0));
  return {value, "", num_qubits};
}

DeltaF delta_f_rearranged(const Operator& jump, int num_qubits) {
  check_jump(jump, num_qubits);
  const double d = static_cast<double>(jump.rows());
  const Operator jump_dag = jump.adjoint();
  const double norm_sq = trace_product({jump_dag, jump}).real();
  double pair_sum = 0.0;
  for (const PauliString& p : pauli_basis(num_qubits)) {
    const Operator f = materialize(p);
    pair_sum += trace_product({jump, f, jump_dag, f}).real();
  }
  const double value = -norm_sq / (d + 1.0) + pair_sum / (d * d * (d + 1.0));
  return {value, "", num_qubits};
}

DeltaF delta_f_single_qubit(const Operator& jump) {
  check_jump(jump, 1);
  const Operator jump_dag = jump.adjoint();
  double pair_sum = 0.0;
  for (const Operator& s : {pauli::sigma_x(), pauli::sigma_y(), pauli::sigma_z()}) {
    pair_sum += trace_product({jump_dag, s, jump, s}).real();
  }
  const double value =
      -0.25 * trace_product({jump_dag, jump}).real() + pair_sum / 12.0;
  return {value, "", 1};
}

FidelityPrediction predict_first_order(const NoiseModel& model, double tau) {
  check_tau(tau);
  FidelityPrediction out;
  double max_gamma_tau = 0.0;
  for (const NoiseChannel& ch : model.channels()) {
    const double df = delta_f_general(ch.jump, model.num_qubits()).value;
    const double contribution = ch.rate * tau * df;
    out.terms.push_back({ch.label, ch.rate, df, contribution});
    out.fbar += contribution;
    max_gamma_tau = std::max(max_gamma_tau, ch.nominal_rate * tau);
  }
  flag_expansion(out, max_gamma_tau);
  return out;
}

FidelityPrediction predict_uncorrelated(int num_qubits,
                                        std::span<const double> gamma1,
                                        std::span<const double> gamma_phi,
                                        double tau) {
  check_tau(tau);
  const double d = static_cast<double>(dim_for_qubits(num_qubits));
  if (gamma1.size() != static_cast<std::size_t>(num_qubits) ||
      gamma_phi.size() != static_cast<std::size_t>(num_qubits)) {
    throw ValidationError("per-qubit rate lists must have length " +
                          std::to_string(num_qubits));
  }
  check_rates(gamma1);
  check_rates(gamma_phi);
  const double factor = -d / (2.0 * (d + 1.0));
  FidelityPrediction out;
  double max_gamma_tau = 0.0;
  for (int q = 0; q < num_qubits; ++q) {
    const std::string qubit = "[q" + std::to_string(q) + "]";
    for (auto [name, rate] : {std::pair{"relaxation", gamma1[q]},
                              std::pair{"dephasing", gamma_phi[q]}}) {
      if (rate == 0.0) continue;
      const double contribution = factor * rate * tau;
      out.terms.push_back({std::string(name) + qubit, rate, factor, contribution});
      out.fbar += contribution;
      max_gamma_tau = std::max(max_gamma_tau, rate * tau);
    }
  }
  flag_expansion(out, max_gamma_tau);
  return out;
}

FidelityPrediction predict_correlated(int num_qubits, double gamma1_c,
                                      double gamma_phi_c, double tau) {
  check_tau(tau);
  const double d = static_cast<double>(dim_for_qubits(num_qubits));
  const double rates[] = {gamma1_c, gamma_phi_c};
  check_rates(rates);
  const double factor = -num_qubits * d / (2.0 * (d + 1.0));
  FidelityPrediction out;
  if (gamma1_c > 0.0) {
    out.terms.push_back({"collective_relaxation", gamma1_c, factor,
                         factor * gamma1_c * tau});
  }
  if (gamma_phi_c > 0.0) {
    out.terms.push_back({"collective_dephasing", gamma_phi_c, factor,
                         factor * gamma_phi_c * tau});
  }
  out.fbar = 1.0 + factor * tau * (gamma1_c + gamma_phi_c);
  flag_expansion(out, std::max(gamma1_c, gamma_phi_c) * tau);
  return out;
}

SecondOrderCoefficients pi_rotation_coefficients(RotationAxis axis, double gamma1,
                                                 double gamma_phi) {
  SecondOrderCoefficients c;
  c.linear = (gamma1 + gamma_phi) / 3.0;
  if (axis == RotationAxis::kX) {
    c.quadratic = (11.0 / 12.0 * gamma1 * gamma1 + 5.0 / 3.0 * gamma1 * gamma_phi +
                   gamma_phi * gamma_phi) / 8.0;
  } else {
    c.quadratic = (gamma1 * gamma1 +
                   4.0 / 3.0 * (gamma1 * gamma_phi + gamma_phi * gamma_phi)) / 8.0;
  }
  return c;
}

FidelityPrediction second_order_pi_rotation(RotationAxis axis, double gamma1,
                                            double gamma_phi, double tau) {
  check_tau(tau);
  const double rates[] = {gamma1, gamma_phi};
  check_rates(rates);
  const SecondOrderCoefficients c = pi_rotation_coefficients(axis, gamma1, gamma_phi);
  FidelityPrediction out;
  out.order = PredictionOrder::kSecond;
  out.fbar = 1.0 - c.linear * tau + c.quadratic * tau * tau;
  flag_expansion(out, std::max(gamma1, gamma_phi) * tau);
  return out;
}

}  // namespace lf
