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

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"

#include "lf/pauli.hpp"
#include "oracles.hpp"

using namespace lf;

namespace {

const Operator kI2 = Operator::Identity(2, 2);

}  // namespace

TEST(delta_f, reference_values) {
  EXPECT_NEAR(delta_f_general(Operator::Identity(4, 4), 2).value, 0.0, 1e-12);
  EXPECT_NEAR(delta_f_general(pauli::sigma_z(), 1).value, -2.0 / 3.0, 1e-12);
  EXPECT_NEAR(delta_f_general(oracle::kron(pauli::sigma_minus(), pauli::sigma_minus()), 2).value,
              -0.2, 1e-12);
  EXPECT_NEAR(delta_f_general(oracle::kron(pauli::sigma_z(), kI2) +
                                  oracle::kron(kI2, pauli::sigma_z()), 2).value,
              -1.6, 1e-12);
  EXPECT_NEAR(delta_f_general(oracle::kron(pauli::sigma_minus(), kI2) +
                                  oracle::kron(kI2, pauli::sigma_minus()), 2).value,
              -0.8, 1e-12);
}

TEST(delta_f, single_qubit_form) {
  EXPECT_NEAR(delta_f_single_qubit(pauli::sigma_minus()).value, -1.0 / 3.0, 1e-12);
  EXPECT_NEAR(delta_f_single_qubit(pauli::sigma_z()).value, -2.0 / 3.0, 1e-12);
  EXPECT_NEAR(delta_f_single_qubit(kI2).value, 0.0, 1e-12);
  EXPECT_THROW(delta_f_single_qubit(Operator::Identity(4, 4)), ValidationError);
}

TEST(delta_f, forms_agree_with_weingarten_oracle) {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 3; ++n) {
    const std::size_t d = std::size_t{1} << n;
    for (int trial = 0; trial < 50; ++trial) {
      const Operator l = oracle::random_matrix(d, rng);
      const double expected = oracle::delta_f_weingarten(l);
      const double scale = std::max(1.0, std::abs(expected));
      EXPECT_NEAR(delta_f_general(l, n).value, expected, 1e-10 * scale);
      EXPECT_NEAR(delta_f_rearranged(l, n).value, expected, 1e-10 * scale);
      if (n == 1) EXPECT_NEAR(delta_f_single_qubit(l).value, expected, 1e-10 * scale);
    }
  }
}

TEST(delta_f, embedded_channel_table) {
  for (int n = 1; n <= 4; ++n) {
    const double d = std::ldexp(1.0, n);
    for (int q = 0; q < n; ++q) {
      EXPECT_NEAR(delta_f_general(embed(pauli::sigma_z(), q, n), n).value, -d / (d + 1), 1e-10);
      EXPECT_NEAR(delta_f_general(embed(pauli::sigma_minus(), q, n), n).value,
                  -d / (2 * (d + 1)), 1e-10);
    }
  }
}

TEST(delta_f, non_positive_and_phase_invariant) {
  std::mt19937_64 rng(11);
  const Operator l = oracle::random_matrix(4, rng);
  const double v = delta_f_general(l, 2).value;
  EXPECT_LE(v, 1e-12);
  EXPECT_NEAR(delta_f_general(cplx(0.6, 0.8) * l, 2).value, v, 1e-12);
  // Adding a multiple of the identity does not change the dissipator.
  EXPECT_NEAR(delta_f_general(l + cplx(1.5, -0.3) * Operator::Identity(4, 4), 2).value, v, 1e-10);
}

TEST(delta_f, rejects_bad_dimensions) {
  EXPECT_THROW(delta_f_general(Operator::Identity(3, 3), 1), ValidationError);
  EXPECT_THROW(delta_f_general(Operator::Identity(2, 2), 2), ValidationError);
  EXPECT_THROW(delta_f_general(Operator::Identity(2, 2), 0), CapacityError);
}

TEST(predict_first_order, examples) {
  const double g = 0.01, tau = 0.7;
  NoiseModel model(1);
  model.add(relaxation(1, 0, g));
  model.add(dephasing(1, 0, g));
  const FidelityPrediction p = predict_first_order(model, tau);
  EXPECT_NEAR(p.fbar, 1.0 - 2.0 / 3.0 * g * tau, 1e-14);
  ASSERT_EQ(p.terms.size(), 2u);
  EXPECT_NEAR(p.terms[0].contribution + p.terms[1].contribution, p.fbar - 1.0, 1e-15);
  EXPECT_FALSE(p.expansion_warning);

  EXPECT_DOUBLE_EQ(predict_first_order(NoiseModel(3), 1.0).fbar, 1.0);

  NoiseModel tp(2);
  tp.add(two_photon(2, g));
  EXPECT_NEAR(predict_first_order(tp, tau).fbar, 1.0 - g * tau / 5.0, 1e-14);
}

TEST(predict_first_order, additive_over_channels) {
  NoiseModel a(2), b(2);
  a.add(relaxation(2, 0, 0.02));
  a.add(collective_dephasing(2, 0.01));
  b.add(two_photon(2, 0.03));
  const double fa = predict_first_order(a, 1.0).fbar;
  const double fb = predict_first_order(b, 1.0).fbar;
  const double fab = predict_first_order(a.merged(b), 1.0).fbar;
  EXPECT_NEAR(1.0 - fab, (1.0 - fa) + (1.0 - fb), 1e-14);
}

TEST(predict_first_order, warning_and_no_clamping) {
  NoiseModel model(1);
  model.add(relaxation(1, 0, 0.5));
  const FidelityPrediction p = predict_first_order(model, 1.0);
  EXPECT_TRUE(p.expansion_warning);
  EXPECT_DOUBLE_EQ(p.max_gamma_tau, 0.5);

  const FidelityPrediction big = predict_first_order(model, 10.0);
  EXPECT_LT(big.fbar, 0.0);  // outside the regime, reported as is
  EXPECT_THROW(predict_first_order(model, -1.0), ValidationError);
}

TEST(predict_uncorrelated, examples) {
  const double g = 0.003;
  const double g1[] = {g};
  const double z1[] = {0.0};
  EXPECT_NEAR(predict_uncorrelated(1, g1, z1, 1.0).fbar, 1.0 - g / 3.0, 1e-14);

  const std::vector<double> all(2, g);
  EXPECT_NEAR(predict_uncorrelated(2, all, all, 1.0).fbar, 1.0 - 1.6 * g, 1e-14);

  const std::vector<double> zeros(3, 0.0);
  EXPECT_DOUBLE_EQ(predict_uncorrelated(3, zeros, zeros, 1.0).fbar, 1.0);
}

TEST(predict_correlated, examples_and_equivalence) {
  const double g = 0.004;
  EXPECT_NEAR(predict_correlated(2, 0.0, g, 1.0).fbar, 1.0 - 0.8 * g, 1e-14);

  const double g1[] = {0.01};
  const double gp[] = {0.02};
  EXPECT_NEAR(predict_correlated(1, 0.01, 0.02, 1.3).fbar,
              predict_uncorrelated(1, g1, gp, 1.3).fbar, 1e-14);

  for (int n = 1; n <= 4; ++n) {
    const std::vector<double> r1(n, 0.01), rp(n, 0.03);
    EXPECT_NEAR(predict_correlated(n, 0.01, 0.03, 1.0).fbar,
                predict_uncorrelated(n, r1, rp, 1.0).fbar, 1e-12)
        << "N=" << n;
  }
}

TEST(second_order_pi_rotation, examples) {
  const double g = 0.02, tau = 1.0;
  EXPECT_NEAR(second_order_pi_rotation(RotationAxis::kX, g, 0.0, tau).fbar,
              1.0 - g / 3.0 + 11.0 / 96.0 * g * g, 1e-15);
  EXPECT_NEAR(second_order_pi_rotation(RotationAxis::kZ, g, 0.0, tau).fbar,
              1.0 - g / 3.0 + g * g / 8.0, 1e-15);
  EXPECT_DOUBLE_EQ(second_order_pi_rotation(RotationAxis::kX, 0.0, 0.0, tau).fbar, 1.0);
  EXPECT_DOUBLE_EQ(second_order_pi_rotation(RotationAxis::kZ, 0.0, 0.0, tau).fbar, 1.0);
}

TEST(second_order_pi_rotation, axes_differ_only_at_second_order) {
  const auto x = pi_rotation_coefficients(RotationAxis::kX, 0.3, 0.7);
  const auto z = pi_rotation_coefficients(RotationAxis::kZ, 0.3, 0.7);
  EXPECT_DOUBLE_EQ(x.linear, z.linear);
  // b_z - b_x = (1/96) Gamma1^2 - (1/24) Gamma1 Gamma_phi + (1/24) Gamma_phi^2
  const double expected = (0.09 / 96.0) - 0.21 / 24.0 + 0.49 / 24.0;
  EXPECT_NEAR(z.quadratic - x.quadratic, expected, 1e-15);
}
