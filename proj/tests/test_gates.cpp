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
#include <random>
#include <vector>

#include "gtest/gtest.h"

#include "lf/fidelity.hpp"
#include "lf/pauli.hpp"
#include "oracles.hpp"

using namespace lf;

namespace {

double max_abs(const Operator& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(named_gate, realizes_textbook_unitary) {
  for (const std::string& name : named_gate_names()) {
    const int arity = named_gate_arity(name);
    std::vector<int> targets;
    for (int q = 0; q < arity; ++q) targets.push_back(q);
    const Operator u = ideal_unitary(named_gate(name, arity, targets, 0.7));
    EXPECT_LT(max_abs(u - textbook_gate(name)), 1e-10) << name;
  }
}

TEST(named_gate, textbook_matrices) {
  const double r = 1.0 / std::numbers::sqrt2;
  Operator h(2, 2);
  h << r, r, r, -r;
  EXPECT_LT(max_abs(textbook_gate("h") - h), 1e-15);
  Operator x90(2, 2);
  x90 << r, cplx(0, -r), cplx(0, -r), r;
  EXPECT_LT(max_abs(textbook_gate("x90") - x90), 1e-15);
}

TEST(named_gate, embedding_and_control_order) {
  // cnot with control on qubit 2 and target on qubit 0 of three.
  const int targets[] = {2, 0};
  const Operator u = ideal_unitary(named_gate("cnot", 3, targets, 1.0));
  for (int in = 0; in < 8; ++in) {
    const int control = in & 1;
    const int out = control ? (in ^ 4) : in;
    EXPECT_NEAR(std::abs(u(out, in)), 1.0, 1e-10) << in;
  }
  const int one[] = {1};
  const Operator x = ideal_unitary(named_gate("x180", 2, one, 1.0));
  EXPECT_LT(max_abs(x - oracle::kron(Operator::Identity(2, 2), pauli::sigma_x())), 1e-10);
}

TEST(named_gate, errors) {
  const int q0[] = {0};
  const int q01[] = {0, 1};
  const int q00[] = {0, 0};
  EXPECT_THROW(named_gate("t2star", 1, q0, 1.0), ValidationError);
  EXPECT_THROW(named_gate("cz", 2, q0, 1.0), ValidationError);
  EXPECT_THROW(named_gate("cz", 2, q00, 1.0), ValidationError);
  EXPECT_THROW(named_gate("x180", 1, q01, 1.0), ValidationError);
  const int q5[] = {5};
  EXPECT_THROW(named_gate("x180", 2, q5, 1.0), ValidationError);
  EXPECT_THROW(named_gate("x180", 1, q0, -1.0), ValidationError);
}

TEST(named_gate, zero_duration_is_identity) {
  const int q0[] = {0};
  const GateSchedule s = named_gate("x180", 1, q0, 0.0);
  EXPECT_EQ(s.duration(), 0.0);
  EXPECT_LT(max_abs(ideal_unitary(s) - Operator::Identity(2, 2)), 1e-15);
}

TEST(constant_rotation, pi_rotation) {
  const Operator ux = ideal_unitary(constant_rotation(RotationAxis::kX, std::numbers::pi, 1, 0, 2.0));
  EXPECT_LT(max_abs(ux - cplx(0, -1) * pauli::sigma_x()), 1e-12);
  const Operator uz = ideal_unitary(constant_rotation(RotationAxis::kZ, std::numbers::pi, 1, 0, 2.0));
  EXPECT_LT(max_abs(uz - cplx(0, -1) * pauli::sigma_z()), 1e-12);
}

TEST(haar_random_gate, realizes_sampled_unitary) {
  for (int n = 1; n <= 3; ++n) {
    const GateSchedule s = haar_random_gate(n, 0.5, 77);
    const Operator u = ideal_unitary(s);
    const std::size_t d = s.dim();
    EXPECT_LT(max_abs(u.adjoint() * u - Operator::Identity(d, d)), 1e-12);
    HaarSampler sampler(77, d);
    EXPECT_LT(max_abs(u - sampler.unitary()), 1e-10) << "N=" << n;
    // Reproducible.
    EXPECT_LT(max_abs(ideal_unitary(haar_random_gate(n, 0.5, 77)) - u), 1e-15);
  }
}

TEST(hamiltonian_for_unitary, round_trip) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 5; ++trial) {
    const Operator h0 = oracle::random_hermitian(4, rng);
    const Operator u = ideal_unitary(GateSchedule(2, {{h0, 1.0}}));
    const Operator h = hamiltonian_for_unitary(u, 2.0);
    EXPECT_LT(max_abs(h - h.adjoint()), 1e-14);
    EXPECT_LT(max_abs(ideal_unitary(GateSchedule(2, {{h, 2.0}})) - u), 1e-10);
  }
}

TEST(schedule, two_segments_equal_merged) {
  std::mt19937_64 rng(2);
  const Operator h = oracle::random_hermitian(2, rng);
  NoiseModel model(1);
  model.add(relaxation(1, 0, 0.1));
  model.add(dephasing(1, 0, 0.2));
  const double whole = avg_fidelity_exact(GateSchedule(1, {{h, 1.0}}), model);
  const double split = avg_fidelity_exact(GateSchedule(1, {{h, 0.25}, {h, 0.75}}), model);
  EXPECT_NEAR(whole, split, 1e-12);
}
