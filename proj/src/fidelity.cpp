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

#include "lf/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>
#include <vector>

#include "lf/pauli.hpp"

namespace lf {

namespace {

/// Runs fn(stream_index, count) for consecutive chunks of `total` samples in
/// parallel and returns the per-chunk results in chunk order.
template <typename Fn>
auto run_chunks(std::size_t total, Fn fn) {
  using Result = decltype(fn(std::size_t{0}, std::size_t{0}));
  const std::size_t chunks = (total + kSamplesPerStream - 1) / kSamplesPerStream;
  const std::size_t workers =
      std::max<std::size_t>(1, std::thread::hardware_concurrency());
  std::vector<Result> results(chunks);
  for (std::size_t first = 0; first < chunks; first += workers) {
    const std::size_t last = std::min(chunks, first + workers);
    std::vector<std::future<Result>> batch;
    for (std::size_t c = first; c < last; ++c) {
      const std::size_t count = std::min(kSamplesPerStream, total - c * kSamplesPerStream);
      batch.push_back(std::async(std::launch::async, fn, c, count));
    }
    for (std::size_t c = first; c < last; ++c) results[c] = batch[c - first].get();
  }
  return results;
}

double std_error(double sum, double sum_sq, double n) {
  if (n < 2) return 0.0;
  const double mean = sum / n;
  const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
  return std::sqrt(var / n);
}

}  // namespace

HaarSampler::HaarSampler(std::uint64_t seed, std::size_t dim)
    : seed_(seed), dim_(dim), engine_(seed) {
  if (dim < 2) throw ValidationError("Haar sampling needs dimension >= 2");
}

HaarSampler::HaarSampler(std::uint64_t seed, std::size_t dim, std::seed_seq& seq)
    : seed_(seed), dim_(dim), engine_(seq) {
  if (dim < 2) throw ValidationError("Haar sampling needs dimension >= 2");
}

HaarSampler HaarSampler::stream(std::uint64_t seed, std::size_t dim, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32), 0x6c66u};
  return HaarSampler(seed, dim, seq);
}

cplx HaarSampler::gaussian() {
  const double re = normal_(engine_);
  const double im = normal_(engine_);
  return {re, im};
}

StateVector HaarSampler::state() {
  StateVector psi(dim_);
  for (std::size_t i = 0; i < dim_; ++i) psi[i] = gaussian();
  psi /= psi.norm();
  return psi;
}

Operator HaarSampler::unitary() {
  Operator g(dim_, dim_);
  for (std::size_t c = 0; c < dim_; ++c) {
    for (std::size_t r = 0; r < dim_; ++r) g(r, c) = gaussian();
  }
  Eigen::HouseholderQR<Operator> qr(g);
  Operator q = qr.householderQ() * Operator::Identity(dim_, dim_);
  const Operator r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the column phases so the distribution is exactly Haar.
  for (std::size_t c = 0; c < dim_; ++c) {
    const cplx diag = r(c, c);
    q.col(c) *= diag / std::abs(diag);
  }
  return q;
}

PauliMoments pauli_moments(std::uint64_t seed, int num_qubits, std::size_t samples) {
  const std::size_t d = dim_for_qubits(num_qubits);
  std::vector<PauliString> basis = pauli_basis(num_qubits);
  basis.erase(basis.begin());
  const auto m = static_cast<Eigen::Index>(basis.size());

  struct Sums {
    Eigen::VectorXd s1, s1_sq;
    Eigen::MatrixXd s2, s2_sq;
  };
  auto chunk = [&](std::size_t index, std::size_t count) {
    Sums s{Eigen::VectorXd::Zero(m), Eigen::VectorXd::Zero(m),
           Eigen::MatrixXd::Zero(m, m), Eigen::MatrixXd::Zero(m, m)};
    HaarSampler sampler = HaarSampler::stream(seed, d, index);
    Eigen::VectorXd n(m);
    for (std::size_t k = 0; k < count; ++k) {
      const StateVector psi = sampler.state();
      for (Eigen::Index i = 0; i < m; ++i) n[i] = basis[i].expectation(psi);
      s.s1 += n;
      s.s1_sq += n.cwiseAbs2();
      const Eigen::MatrixXd outer = n * n.transpose();
      s.s2 += outer;
      s.s2_sq += outer.cwiseAbs2();
    }
    return s;
  };
  const std::vector<Sums> parts = run_chunks(samples, chunk);

  Sums total{Eigen::VectorXd::Zero(m), Eigen::VectorXd::Zero(m),
             Eigen::MatrixXd::Zero(m, m), Eigen::MatrixXd::Zero(m, m)};
  for (const Sums& p : parts) {
    total.s1 += p.s1;
    total.s1_sq += p.s1_sq;
    total.s2 += p.s2;
    total.s2_sq += p.s2_sq;
  }
  const double n = static_cast<double>(samples);
  PauliMoments out;
  out.dim = d;
  out.samples = samples;
  out.mean = total.s1 / n;
  out.second = total.s2 / n;
  out.mean_std_error.resize(m);
  out.second_std_error.resize(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    out.mean_std_error[i] = std_error(total.s1[i], total.s1_sq[i], n);
    for (Eigen::Index j = 0; j < m; ++j) {
      out.second_std_error(i, j) = std_error(total.s2(i, j), total.s2_sq(i, j), n);
    }
  }
  return out;
}

FidelityEstimate avg_fidelity_monte_carlo(const GateSchedule& schedule,
                                          const NoiseModel& model,
                                          std::uint64_t seed, std::size_t samples) {
  if (samples == 0) throw ValidationError("Monte Carlo fidelity needs samples > 0");
  const Propagator channel = build_propagator(schedule, model);
  const Operator target = ideal_unitary(schedule);
  const std::size_t d = model.dim();

  struct Sums {
    double sum = 0.0;
    double sum_sq = 0.0;
  };
  auto chunk = [&](std::size_t index, std::size_t count) {
    Sums s;
    HaarSampler sampler = HaarSampler::stream(seed, d, index);
    for (std::size_t k = 0; k < count; ++k) {
      const StateVector psi = sampler.state();
      const DensityMatrix out = channel.apply(DensityMatrix::pure(psi));
      const Operator rotated_back = target.adjoint() * out.matrix() * target;
      const double f = (psi.adjoint() * rotated_back * psi)(0, 0).real();
      s.sum += f;
      s.sum_sq += f * f;
    }
    return s;
  };
  Sums total;
  for (const Sums& p : run_chunks(samples, chunk)) {
    total.sum += p.sum;
    total.sum_sq += p.sum_sq;
  }
  const double n = static_cast<double>(samples);
  return {total.sum / n, std_error(total.sum, total.sum_sq, n), samples};
}

double avg_fidelity_exact(const Propagator& channel, const Operator& target) {
  const std::size_t d = channel.dim();
  if (static_cast<std::size_t>(target.rows()) != d || target.rows() != target.cols()) {
    throw ValidationError("target unitary dimension does not match channel");
  }
  // Superoperator of rho -> U rho U^dag is conj(U) x U; Tr[S_U^dag S] / d^2
  // is the entanglement fidelity of U^dag o E.
  const Eigen::MatrixXcd ideal = kron(target.conjugate(), target);
  const double dd = static_cast<double>(d);
  const double entanglement =
      (ideal.conjugate().cwiseProduct(channel.superoperator())).sum().real() / (dd * dd);
  return (dd * entanglement + 1.0) / (dd + 1.0);
}

double avg_fidelity_exact(const GateSchedule& schedule, const NoiseModel& model) {
  return avg_fidelity_exact(build_propagator(schedule, model), ideal_unitary(schedule));
}

}  // namespace lf
