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

#include "lf/lindblad.hpp"

#include <cmath>
#include <sstream>

#include "lf/expm.hpp"
#include "lf/pauli.hpp"

namespace lf {

namespace {

constexpr cplx kI{0.0, 1.0};

void check_hamiltonian(const Operator& h, std::size_t d) {
  if (static_cast<std::size_t>(h.rows()) != d || h.rows() != h.cols()) {
    throw ValidationError("Hamiltonian dimension does not match schedule");
  }
  const double err = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (err > kHamiltonianHermiticityTolerance) {
    std::ostringstream msg;
    msg << "segment Hamiltonian is not Hermitian (max |H - H^dag| = " << err << ")";
    throw ValidationError(msg.str());
  }
}

}  // namespace

GateSchedule::GateSchedule(int num_qubits, std::vector<Segment> segments)
    : num_qubits_(num_qubits) {
  dim_for_qubits(num_qubits);
  for (Segment& s : segments) append(std::move(s));
}

GateSchedule GateSchedule::idle(int num_qubits, double duration) {
  const std::size_t d = dim_for_qubits(num_qubits);
  return GateSchedule(num_qubits, {Segment{Operator::Zero(d, d), duration}});
}

double GateSchedule::duration() const {
  double total = 0.0;
  for (const Segment& s : segments_) total += s.duration;
  return total;
}

GateSchedule& GateSchedule::append(Segment segment) {
  if (!(segment.duration >= 0.0) || !std::isfinite(segment.duration)) {
    throw ValidationError("segment duration must be finite and non-negative");
  }
  check_hamiltonian(segment.hamiltonian, dim());
  segments_.push_back(std::move(segment));
  return *this;
}

std::string DensityDiagnostics::describe() const {
  std::ostringstream out;
  out << "trace error " << trace_error << " (tol " << kTraceTolerance
      << "), hermiticity error " << hermiticity_error << " (tol "
      << kHermiticityTolerance << "), min eigenvalue " << min_eigenvalue
      << " (tol " << kPositivityTolerance << ")";
  return out.str();
}

DensityMatrix::DensityMatrix(Operator rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
    throw ValidationError("density matrix must be square and non-empty");
  }
  const DensityDiagnostics diag = diagnose(rho_);
  if (!diag.ok()) throw ValidationError("invalid density matrix: " + diag.describe());
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-10) {
    throw ValidationError("pure state is not normalized");
  }
  return DensityMatrix(psi * psi.adjoint());
}

DensityDiagnostics DensityMatrix::diagnose(const Operator& rho) {
  DensityDiagnostics diag;
  diag.trace_error = std::abs(rho.trace() - 1.0);
  diag.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  const Operator herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> solver(herm, Eigen::EigenvaluesOnly);
  diag.min_eigenvalue = solver.eigenvalues().minCoeff();
  return diag;
}

StateVector vectorize(const Operator& m) {
  return Eigen::Map<const StateVector>(m.data(), m.size());
}

Operator unvectorize(const StateVector& v) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(v.size())));
  if (d * d != v.size()) throw ValidationError("vector length is not a square");
  return Eigen::Map<const Operator>(v.data(), d, d);
}

Operator dissipator(const Operator& jump, const Operator& rho) {
  const Operator jdj = jump.adjoint() * jump;
  return jump * rho * jump.adjoint() - 0.5 * (jdj * rho + rho * jdj);
}

Eigen::MatrixXcd build_liouvillian(const Operator& hamiltonian, const NoiseModel& model) {
  const auto d = static_cast<Eigen::Index>(model.dim());
  if (hamiltonian.rows() != d || hamiltonian.cols() != d) {
    throw ValidationError("Hamiltonian dimension does not match noise model");
  }
  const Operator ident = Operator::Identity(d, d);
  Eigen::MatrixXcd gen = -kI * (kron(ident, hamiltonian) -
                                kron(hamiltonian.transpose(), ident));
  for (const NoiseChannel& ch : model.channels()) {
    const Operator jdj = ch.jump.adjoint() * ch.jump;
    gen += ch.rate * (kron(ch.jump.conjugate(), ch.jump) - 0.5 * kron(ident, jdj) -
                      0.5 * kron(jdj.transpose(), ident));
  }
  return gen;
}

Propagator::Propagator(Eigen::MatrixXcd superoperator, std::size_t dim)
    : superop_(std::move(superoperator)), dim_(dim) {
  if (static_cast<std::size_t>(superop_.rows()) != dim * dim ||
      superop_.rows() != superop_.cols()) {
    throw ValidationError("superoperator shape does not match dimension");
  }
}

Operator Propagator::apply(const Operator& rho) const {
  if (static_cast<std::size_t>(rho.rows()) != dim_ || rho.rows() != rho.cols()) {
    throw ValidationError("density matrix dimension does not match propagator");
  }
  return unvectorize(superop_ * vectorize(rho));
}

DensityMatrix Propagator::apply(const DensityMatrix& rho) const {
  Operator out = apply(rho.matrix());
  const DensityDiagnostics diag = DensityMatrix::diagnose(out);
  if (!diag.ok()) {
    throw NumericalError("propagated state violates invariants: " + diag.describe());
  }
  return DensityMatrix(std::move(out), DensityMatrix::Unchecked{});
}

double Propagator::trace_preservation_error() const {
  // Tr rho = w^T vec(rho) with w = vec(I); trace preservation means w^T S = w^T.
  const StateVector w = vectorize(Operator::Identity(dim_, dim_));
  const StateVector row = (w.transpose() * superop_).transpose();
  return (row - w).cwiseAbs().maxCoeff();
}

Propagator build_propagator(const GateSchedule& schedule, const NoiseModel& model) {
  if (schedule.num_qubits() != model.num_qubits()) {
    throw ValidationError("schedule and noise model act on different qubit counts");
  }
  const std::size_t d = model.dim();
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(d * d, d * d);
  for (const Segment& s : schedule.segments()) {
    if (s.duration == 0.0) continue;
    total = expm(build_liouvillian(s.hamiltonian, model) * s.duration) * total;
  }
  return Propagator(std::move(total), d);
}

DensityMatrix propagate(const DensityMatrix& rho0, const GateSchedule& schedule,
                        const NoiseModel& model) {
  if (rho0.dim() != model.dim()) {
    throw ValidationError("initial state dimension does not match noise model");
  }
  return build_propagator(schedule, model).apply(rho0);
}

Operator ideal_unitary(const GateSchedule& schedule) {
  const std::size_t d = schedule.dim();
  Operator u = Operator::Identity(d, d);
  for (const Segment& s : schedule.segments()) {
    if (s.duration == 0.0) continue;
    u = expm(-kI * s.duration * s.hamiltonian) * u;
  }
  const double err = (u.adjoint() * u - Operator::Identity(d, d)).cwiseAbs().maxCoeff();
  if (err > 1e-10) {
    std::ostringstream msg;
    msg << "ideal evolution is not unitary (max |U^dag U - I| = " << err << ")";
    throw NumericalError(msg.str());
  }
  return u;
}

Operator first_order_correction(const StateVector& psi, const GateSchedule& schedule,
                                const NoiseChannel& channel, int steps) {
  const std::size_t d = schedule.dim();
  if (static_cast<std::size_t>(psi.size()) != d) {
    throw ValidationError("state dimension does not match schedule");
  }
  if (std::abs(psi.norm() - 1.0) > 1e-10) {
    throw ValidationError("initial state is not normalized");
  }
  if (channel.dim() != d) throw ValidationError("channel dimension does not match schedule");
  if (steps < 16) throw ValidationError("first-order quadrature needs at least 16 steps");

  const double tau = schedule.duration();
  Operator integral = Operator::Zero(d, d);
  if (channel.rate == 0.0 || tau == 0.0) return integral;

  // Integrate W(t)^dag D[L](rho0(t)) W(t) with W(t) = U(0,t); the conjugation
  // by U(0,tau) that turns this into U(t,tau)[...]U(t,tau)^dag happens last.
  Operator w_start = Operator::Identity(d, d);
  for (const Segment& s : schedule.segments()) {
    if (s.duration == 0.0) continue;
    int n = static_cast<int>(std::ceil(steps * s.duration / tau));
    n = std::max(n, 2);
    if (n % 2) ++n;
    const double h = s.duration / n;
    const Operator step = expm(-kI * h * s.hamiltonian);
    Operator w = w_start;
    Operator segment_sum = Operator::Zero(d, d);
    for (int j = 0; j <= n; ++j) {
      const StateVector psi_t = w * psi;
      const Operator integrand =
          w.adjoint() * dissipator(channel.jump, psi_t * psi_t.adjoint()) * w;
      const double weight = (j == 0 || j == n) ? 1.0 : (j % 2 ? 4.0 : 2.0);
      segment_sum += weight * integrand;
      if (j < n) w = step * w;
    }
    integral += (h / 3.0) * segment_sum;
    w_start = expm(-kI * s.duration * s.hamiltonian) * w_start;
  }
  return channel.rate * (w_start * integral * w_start.adjoint());
}

}  // namespace lf
