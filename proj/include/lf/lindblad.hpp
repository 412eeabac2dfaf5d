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

#include <string>
#include <vector>

#include "lf/noise.hpp"
#include "lf/types.hpp"

namespace lf {

/// Tolerances for the density-matrix invariants checked after propagation.
inline constexpr double kTraceTolerance = 1e-9;
inline constexpr double kHermiticityTolerance = 1e-9;
inline constexpr double kPositivityTolerance = -1e-8;
inline constexpr double kHamiltonianHermiticityTolerance = 1e-12;

/// Constant Hamiltonian applied for `duration` (hbar = 1).
struct Segment {
  Operator hamiltonian;
  double duration = 0.0;
};

/// Piecewise-constant control schedule. An empty schedule (or one with zero
/// total duration) is the identity gate.
class GateSchedule {
 public:
  explicit GateSchedule(int num_qubits, std::vector<Segment> segments = {});

  /// H = 0 for `duration`: idling in the presence of noise.
  static GateSchedule idle(int num_qubits, double duration);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return std::size_t{1} << num_qubits_; }
  const std::vector<Segment>& segments() const { return segments_; }
  double duration() const;

  GateSchedule& append(Segment segment);

 private:
  int num_qubits_;
  std::vector<Segment> segments_;
};

struct DensityDiagnostics {
  double trace_error = 0.0;        // |Tr rho - 1|
  double hermiticity_error = 0.0;  // max |rho - rho^dag|
  double min_eigenvalue = 0.0;

  bool ok() const {
    return trace_error <= kTraceTolerance &&
           hermiticity_error <= kHermiticityTolerance &&
           min_eigenvalue >= kPositivityTolerance;
  }
  std::string describe() const;
};

class DensityMatrix {
 public:
  /// Validates trace, hermiticity and positivity; throws ValidationError.
  explicit DensityMatrix(Operator rho);

  static DensityMatrix pure(const StateVector& psi);

  const Operator& matrix() const { return rho_; }
  std::size_t dim() const { return static_cast<std::size_t>(rho_.rows()); }
  cplx operator()(std::size_t r, std::size_t c) const { return rho_(r, c); }

  static DensityDiagnostics diagnose(const Operator& rho);

 private:
  struct Unchecked {};
  DensityMatrix(Operator rho, Unchecked) : rho_(std::move(rho)) {}
  friend class Propagator;

  Operator rho_;
};

/// Column-stacking vectorization: vec(A X B) = (B^T kron A) vec(X).
StateVector vectorize(const Operator& m);
Operator unvectorize(const StateVector& v);

/// Generator of the master equation in the column-stacked representation:
///   -i (I x H - H^T x I)
///   + sum_k rate_k (conj(L) x L - 1/2 I x L^dag L - 1/2 (L^dag L)^T x I).
Eigen::MatrixXcd build_liouvillian(const Operator& hamiltonian, const NoiseModel& model);

/// Superoperator of the full schedule acting on vec(rho).
class Propagator {
 public:
  Propagator(Eigen::MatrixXcd superoperator, std::size_t dim);

  const Eigen::MatrixXcd& superoperator() const { return superop_; }
  std::size_t dim() const { return dim_; }

  Operator apply(const Operator& rho) const;

  /// Applies the map and checks the output invariants; throws NumericalError.
  DensityMatrix apply(const DensityMatrix& rho) const;

  /// max_j |sum_i S_(ii',j) - delta| : deviation of Tr o S from Tr.
  double trace_preservation_error() const;

 private:
  Eigen::MatrixXcd superop_;
  std::size_t dim_;
};

Propagator build_propagator(const GateSchedule& schedule, const NoiseModel& model);

/// rho(tau) under the master equation; throws NumericalError on invariant
/// violations of the output state.
DensityMatrix propagate(const DensityMatrix& rho0, const GateSchedule& schedule,
                        const NoiseModel& model);

/// Time-ordered product of exp(-i H_s t_s). Throws ValidationError for
/// non-Hermitian segments.
Operator ideal_unitary(const GateSchedule& schedule);

/// First-order correction to rho(tau) from one channel for initial state psi:
///   rate * int_0^tau U(t,tau) D[L](|psi(t)><psi(t)|) U(t,tau)^dag dt,
/// evaluated by composite Simpson quadrature within each segment.
Operator first_order_correction(const StateVector& psi, const GateSchedule& schedule,
                                const NoiseChannel& channel, int steps);

/// L rho L^dag - 1/2 {L^dag L, rho}
Operator dissipator(const Operator& jump, const Operator& rho);

}  // namespace lf
