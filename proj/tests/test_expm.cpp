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

#include "lf/expm.hpp"

#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "gtest/gtest.h"

#include "oracles.hpp"

using namespace lf;

namespace {

double rel_err(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).norm() / std::max(1.0, b.norm());
}

}  // namespace

TEST(expm, zero_and_empty) {
  EXPECT_TRUE(expm(Eigen::MatrixXcd::Zero(3, 3)).isApprox(Eigen::MatrixXcd::Identity(3, 3)));
  EXPECT_EQ(expm(Eigen::MatrixXcd(0, 0)).size(), 0);
  EXPECT_THROW(expm(Eigen::MatrixXcd::Zero(2, 3)), ValidationError);
}

TEST(expm, hermitian_generator_matches_eigendecomposition) {
  std::mt19937_64 rng(1);
  const cplx i(0.0, 1.0);
  for (std::size_t d : {2u, 4u, 8u}) {
    for (double t : {1e-4, 0.05, 0.7, 3.0, 40.0}) {
      const Eigen::MatrixXcd h = oracle::random_hermitian(d, rng);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
      Eigen::VectorXcd phases(d);
      for (std::size_t k = 0; k < d; ++k) phases[k] = std::exp(-i * t * eig.eigenvalues()[k]);
      const Eigen::MatrixXcd expected =
          eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
      EXPECT_LT(rel_err(expm(-i * t * h), expected), 1e-12) << "d=" << d << " t=" << t;
    }
  }
}

TEST(expm, non_normal_matches_reference_across_pade_degrees) {
  std::mt19937_64 rng(2);
  // Scales chosen so the 1-norm lands in each approximant's range and beyond.
  for (double scale : {1e-3, 3e-2, 0.15, 0.4, 1.0, 5.0, 30.0}) {
    const Eigen::MatrixXcd a = scale * oracle::random_matrix(6, rng) / 6.0;
    const Eigen::MatrixXcd reference = a.exp();
    EXPECT_LT(rel_err(expm(a), reference), 1e-11) << "scale=" << scale;
  }
}

TEST(expm, inverse_and_additivity) {
  std::mt19937_64 rng(4);
  const Eigen::MatrixXcd a = oracle::random_matrix(5, rng);
  EXPECT_LT(rel_err(expm(a) * expm(-a), Eigen::MatrixXcd::Identity(5, 5)), 1e-11);
  EXPECT_LT(rel_err(expm(a) , expm(0.5 * a) * expm(0.5 * a)), 1e-11);
}

TEST(expm, liouvillian_like_decay) {
  // Upper-triangular Jordan-type block: exp([[-g, 1],[0,-g]]) = e^{-g}[[1,1],[0,1]].
  Eigen::MatrixXcd a(2, 2);
  const double g = 2.5;
  a << -g, 1.0, 0.0, -g;
  Eigen::MatrixXcd expected(2, 2);
  expected << 1.0, 1.0, 0.0, 1.0;
  expected *= std::exp(-g);
  EXPECT_LT((expm(a) - expected).cwiseAbs().maxCoeff(), 1e-15);
}
