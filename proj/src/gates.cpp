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

#include "lf/gates.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "lf/fidelity.hpp"
#include "lf/pauli.hpp"

namespace lf {

namespace {

using std::numbers::pi;

// Generators with exp(-i G) = textbook gate, so that H = G / tau.
Operator generator(std::string_view name) {
  const Operator id = pauli::identity();
  if (name == "identity") return Operator::Zero(2, 2);
  if (name == "x90") return (pi / 4.0) * pauli::sigma_x();
  if (name == "x180") return (pi / 2.0) * (id - pauli::sigma_x());
  if (name == "z180") return (pi / 2.0) * (id - pauli::sigma_z());
  if (name == "h") {
    const Operator axis = (pauli::sigma_x() + pauli::sigma_z()) / std::numbers::sqrt2;
    return (pi / 2.0) * (id - axis);
  }
  // |11><11| and |1><1| x (I - X)/2 are projectors P with exp(-i pi P) = I - 2P.
  if (name == "cz") {
    Operator p = Operator::Zero(4, 4);
    p(3, 3) = 1.0;
    return pi * p;
  }
  if (name == "cnot") {
    Operator excited = Operator::Zero(2, 2);
    excited(1, 1) = 1.0;
    return pi * kron(excited, 0.5 * (id - pauli::sigma_x()));
  }
  throw ValidationError("unknown gate name '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& named_gate_names() {
  static const std::vector<std::string> names = {"identity", "x90", "x180", "z180",
                                                 "h",        "cz",  "cnot"};
  return names;
}

int named_gate_arity(std::string_view name) {
  return generator(name).rows() == 4 ? 2 : 1;
}

Operator textbook_gate(std::string_view name) {
  if (name == "identity") return pauli::identity();
  if (name == "x90") {
    return (pauli::identity() - cplx(0.0, 1.0) * pauli::sigma_x()) / std::numbers::sqrt2;
  }
  if (name == "x180") return pauli::sigma_x();
  if (name == "z180") return pauli::sigma_z();
  if (name == "h") return (pauli::sigma_x() + pauli::sigma_z()) / std::numbers::sqrt2;
  if (name == "cz") {
    Operator m = Operator::Identity(4, 4);
    m(3, 3) = -1.0;
    return m;
  }
  if (name == "cnot") {
    Operator m = Operator::Zero(4, 4);
    m(0, 0) = m(1, 1) = 1.0;
    m(2, 3) = m(3, 2) = 1.0;
    return m;
  }
  throw ValidationError("unknown gate name '" + std::string(name) + "'");
}

GateSchedule named_gate(std::string_view name, int num_qubits,
                        std::span<const int> targets, double tau) {
  const Operator gen = generator(name);
  const int arity = gen.rows() == 4 ? 2 : 1;
  if (static_cast<int>(targets.size()) != arity) {
    throw ValidationError("gate '" + std::string(name) + "' acts on " +
                          std::to_string(arity) + " qubit(s), got " +
                          std::to_string(targets.size()) + " target(s)");
  }
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw ValidationError("gate duration must be finite and non-negative");
  }
  GateSchedule schedule(num_qubits);
  if (tau == 0.0) return schedule;
  schedule.append({embed(gen, targets, num_qubits) / tau, tau});
  return schedule;
}

GateSchedule constant_rotation(RotationAxis axis, double angle, int num_qubits,
                               int target, double tau) {
  if (!(tau > 0.0)) throw ValidationError("rotation duration must be positive");
  const Operator sigma = axis == RotationAxis::kX ? pauli::sigma_x() : pauli::sigma_z();
  return GateSchedule(num_qubits,
                      {Segment{embed(sigma, target, num_qubits) * (angle / (2.0 * tau)), tau}});
}

Operator hamiltonian_for_unitary(const Operator& u, double tau) {
  if (!(tau > 0.0)) throw ValidationError("duration must be positive");
  // A unitary is normal, so its complex Schur form is diagonal.
  Eigen::ComplexSchur<Operator> schur(u);
  const Operator& t = schur.matrixT();
  const Operator& z = schur.matrixU();
  Eigen::VectorXcd phases(t.rows());
  for (Eigen::Index i = 0; i < t.rows(); ++i) phases[i] = -std::arg(t(i, i)) / tau;
  Operator h = z * phases.asDiagonal() * z.adjoint();
  return 0.5 * (h + h.adjoint());
}

GateSchedule haar_random_gate(int num_qubits, double tau, std::uint64_t seed) {
  const std::size_t d = dim_for_qubits(num_qubits);
  GateSchedule schedule(num_qubits);
  if (tau == 0.0) return schedule;
  HaarSampler sampler(seed, d);
  schedule.append({hamiltonian_for_unitary(sampler.unitary(), tau), tau});
  return schedule;
}

}  // namespace lf
