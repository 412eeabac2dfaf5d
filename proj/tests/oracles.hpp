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

// Independent reference computations used only by the tests. Nothing here
// calls into the superoperator, expm, or Pauli-basis code it checks.

#pragma once

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace lf::oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

struct Jump {
  Mat op;
  double coefficient;
};

/// d rho/dt = -i[H, rho] + sum_k c_k (L rho L^dag - 1/2 {L^dag L, rho}),
/// written directly on the matrix.
inline Mat lindblad_rhs(const Mat& h, const std::vector<Jump>& jumps, const Mat& rho) {
  const std::complex<double> i(0.0, 1.0);
  Mat out = -i * (h * rho - rho * h);
  for (const Jump& j : jumps) {
    const Mat ldl = j.op.adjoint() * j.op;
    out += j.coefficient * (j.op * rho * j.op.adjoint() - 0.5 * (ldl * rho + rho * ldl));
  }
  return out;
}

/// Classical fourth-order Runge-Kutta with a fixed step count.
inline Mat rk4_propagate(const Mat& h, const std::vector<Jump>& jumps, Mat rho,
                         double duration, int steps) {
  const double dt = duration / steps;
  for (int s = 0; s < steps; ++s) {
    const Mat k1 = lindblad_rhs(h, jumps, rho);
    const Mat k2 = lindblad_rhs(h, jumps, rho + 0.5 * dt * k1);
    const Mat k3 = lindblad_rhs(h, jumps, rho + 0.5 * dt * k2);
    const Mat k4 = lindblad_rhs(h, jumps, rho + dt * k3);
    rho += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return rho;
}

/// Haar average of |<psi|L|psi>|^2 - <psi|L^dag L|psi> from the second-moment
/// (Weingarten) identity  int |<psi|L|psi>|^2 = (|Tr L|^2 + Tr L^dag L) / (d (d+1)).
inline double delta_f_weingarten(const Mat& l) {
  const double d = static_cast<double>(l.rows());
  const double norm_sq = (l.adjoint() * l).trace().real();
  const double tr_sq = std::norm(l.trace());
  return (tr_sq + norm_sq) / (d * (d + 1.0)) - norm_sq / d;
}

/// Entrywise Kronecker product written with explicit index arithmetic.
inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) {
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
    }
  }
  return out;
}

inline Mat random_matrix(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Mat m(d, d);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = {normal(rng), normal(rng)};
  }
  return m;
}

inline Mat random_hermitian(std::size_t d, std::mt19937_64& rng) {
  const Mat m = random_matrix(d, rng);
  return 0.5 * (m + m.adjoint());
}

inline Vec random_state(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vec v(d);
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = {normal(rng), normal(rng)};
  return v / v.norm();
}

}  // namespace lf::oracle
