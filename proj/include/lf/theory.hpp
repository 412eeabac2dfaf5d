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

#include "lf/noise.hpp"
#include "lf/types.hpp"

namespace lf {

/// Per-unit-(Gamma tau) fidelity reduction of one jump operator.
struct DeltaF {
  double value = 0.0;
  std::string channel_label;
  int num_qubits = 0;
};

enum class PredictionOrder { kFirst, kSecond };

struct ChannelTerm {
  std::string label;
  double rate = 0.0;          // master-equation coefficient
  double delta_f = 0.0;
  double contribution = 0.0;  // rate * tau * delta_f
};

struct FidelityPrediction {
  double fbar = 1.0;
  PredictionOrder order = PredictionOrder::kFirst;
  std::vector<ChannelTerm> terms;
  /// Largest nominal rate times tau; the expansion parameter.
  double max_gamma_tau = 0.0;
  bool expansion_warning = false;
};

/// Gamma*tau above which first-order predictions are flagged.
inline constexpr double kExpansionWarningThreshold = 0.1;

/// General N-qubit formula summing Tr[L^dag f_i L f_i] over the traceless
/// Pauli strings f_i:
///   (1-d)/d^2 Tr[L^dag L] + 1/(d^2 (d+1)) sum_{i>=1} Tr[L^dag f_i L f_i].
DeltaF delta_f_general(const Operator& jump, int num_qubits);

/// Same quantity with the sum extended over the identity element and the
/// Tr[L^dag L] prefactor rebalanced to -1/(d+1). Evaluated with dense
/// products so it shares no code path with delta_f_general.
DeltaF delta_f_rearranged(const Operator& jump, int num_qubits);

/// Single-qubit form: -1/4 Tr[L^dag L] + 1/12 sum_j Tr[L^dag s_j L s_j].
DeltaF delta_f_single_qubit(const Operator& jump);

/// F = 1 + tau * sum_k rate_k * deltaF(L_k).
FidelityPrediction predict_first_order(const NoiseModel& model, double tau);

/// 1 - d/(2(d+1)) tau sum_k (gamma1_k + gamma_phi_k).
FidelityPrediction predict_uncorrelated(int num_qubits,
                                        std::span<const double> gamma1,
                                        std::span<const double> gamma_phi,
                                        double tau);

/// 1 - N d/(2(d+1)) tau (gamma1_c + gamma_phi_c).
FidelityPrediction predict_correlated(int num_qubits, double gamma1_c,
                                      double gamma_phi_c, double tau);

enum class RotationAxis { kX, kZ };

/// Coefficients of F = 1 - a tau + b tau^2 for a single-qubit pi rotation.
struct SecondOrderCoefficients {
  double linear = 0.0;     // a
  double quadratic = 0.0;  // b
};

SecondOrderCoefficients pi_rotation_coefficients(RotationAxis axis, double gamma1,
                                                 double gamma_phi);

/// Fidelity of a constant-amplitude pi rotation to second order in the
/// relaxation and dephasing rates.
FidelityPrediction second_order_pi_rotation(RotationAxis axis, double gamma1,
                                            double gamma_phi, double tau);

}  // namespace lf
