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

#include "lf/pauli.hpp"

#include <algorithm>
#include <bit>

namespace lf {

namespace {

cplx i_power(int n) {
  switch (n & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

const Operator& single_qubit(Pauli p) {
  static const Operator table[4] = {pauli::identity(), pauli::sigma_x(),
                                    pauli::sigma_y(), pauli::sigma_z()};
  return table[static_cast<int>(p)];
}

}  // namespace

PauliString::PauliString(std::vector<Pauli> labels) : labels_(std::move(labels)) {
  const int n = num_qubits();
  if (n < 1 || n > kMaxQubits) {
    throw CapacityError("Pauli string length " + std::to_string(n) +
                        " outside supported range");
  }
  for (int q = 0; q < n; ++q) {
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    switch (labels_[q]) {
      case Pauli::I: break;
      case Pauli::X: flip_mask_ |= bit; break;
      case Pauli::Y:
        flip_mask_ |= bit;
        z_mask_ |= bit;
        ++y_count_;
        break;
      case Pauli::Z: z_mask_ |= bit; break;
    }
  }
}

PauliString PauliString::from_str(std::string_view text) {
  std::vector<Pauli> labels;
  labels.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'I': case '_': labels.push_back(Pauli::I); break;
      case 'X': labels.push_back(Pauli::X); break;
      case 'Y': labels.push_back(Pauli::Y); break;
      case 'Z': labels.push_back(Pauli::Z); break;
      default:
        throw ValidationError(std::string("invalid Pauli label '") + c + "'");
    }
  }
  return PauliString(std::move(labels));
}

bool PauliString::is_identity() const {
  return flip_mask_ == 0 && z_mask_ == 0;
}

std::string PauliString::str() const {
  std::string out;
  out.reserve(labels_.size());
  for (Pauli p : labels_) out.push_back("IXYZ"[static_cast<int>(p)]);
  return out;
}

cplx PauliString::phase(std::size_t k) const {
  const int sign_flips = std::popcount(k & z_mask_);
  return i_power(y_count_ + 2 * sign_flips);
}

double PauliString::expectation(const StateVector& psi) const {
  if (static_cast<std::size_t>(psi.size()) != dim()) {
    throw ValidationError("state dimension does not match Pauli string");
  }
  cplx acc = 0.0;
  for (std::size_t k = 0; k < dim(); ++k) {
    acc += std::conj(psi[k ^ flip_mask_]) * phase(k) * psi[k];
  }
  return acc.real();
}

std::vector<PauliString> pauli_basis(int num_qubits) {
  const std::size_t d = dim_for_qubits(num_qubits);
  const std::size_t count = d * d;
  std::vector<PauliString> basis;
  basis.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::vector<Pauli> labels(num_qubits);
    std::size_t rest = idx;
    for (int q = num_qubits - 1; q >= 0; --q) {
      labels[q] = static_cast<Pauli>(rest & 3);
      rest >>= 2;
    }
    basis.emplace_back(std::move(labels));
  }
  return basis;
}

Operator materialize(const PauliString& p) {
  Operator out = single_qubit(p[0]);
  for (int q = 1; q < p.num_qubits(); ++q) out = kron(out, single_qubit(p[q]));
  return out;
}

namespace pauli {

Operator identity() { return Operator::Identity(2, 2); }

Operator sigma_x() {
  Operator m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Operator sigma_y() {
  Operator m(2, 2);
  m << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
  return m;
}

Operator sigma_z() {
  Operator m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Operator sigma_minus() {
  Operator m(2, 2);
  m << 0.0, 1.0, 0.0, 0.0;
  return m;
}

Operator sigma_plus() { return sigma_minus().adjoint(); }

}  // namespace pauli

Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Operator embed(const Operator& op, int target, int num_qubits) {
  const int targets[] = {target};
  return embed(op, std::span<const int>(targets), num_qubits);
}

Operator embed(const Operator& op, std::span<const int> targets, int num_qubits) {
  const std::size_t d = dim_for_qubits(num_qubits);
  const int k = static_cast<int>(targets.size());
  if (k == 0 || op.rows() != op.cols() ||
      static_cast<std::size_t>(op.rows()) != (std::size_t{1} << k)) {
    throw ValidationError("embedded operator must be 2^k x 2^k for k targets");
  }
  std::size_t target_mask = 0;
  for (int t : targets) {
    if (t < 0 || t >= num_qubits) {
      throw ValidationError("target qubit " + std::to_string(t) +
                            " out of range for " + std::to_string(num_qubits) +
                            " qubits");
    }
    const std::size_t bit = std::size_t{1} << (num_qubits - 1 - t);
    if (target_mask & bit) throw ValidationError("duplicate target qubit");
    target_mask |= bit;
  }
  // Index of the targeted sub-register, with targets[0] most significant.
  auto sub_index = [&](std::size_t full) {
    std::size_t s = 0;
    for (int t : targets) s = (s << 1) | ((full >> (num_qubits - 1 - t)) & 1);
    return s;
  };
  Operator out = Operator::Zero(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      if ((r & ~target_mask) != (c & ~target_mask)) continue;
      out(r, c) = op(sub_index(r), sub_index(c));
    }
  }
  return out;
}

cplx trace_product(std::span<const Operator> ops) {
  if (ops.empty()) throw ValidationError("trace of empty product");
  const Eigen::Index d = ops.front().rows();
  for (const Operator& op : ops) {
    if (op.rows() != d || op.cols() != d) {
      throw ValidationError("dimension mismatch in trace product");
    }
  }
  Operator acc = ops.front();
  for (std::size_t i = 1; i < ops.size(); ++i) acc = acc * ops[i];
  return acc.trace();
}

cplx trace_product(std::initializer_list<Operator> ops) {
  return trace_product(std::span<const Operator>(ops.begin(), ops.size()));
}

cplx trace_conjugated_pair(const Operator& a, const PauliString& p) {
  const std::size_t d = p.dim();
  if (static_cast<std::size_t>(a.rows()) != d || a.rows() != a.cols()) {
    throw ValidationError("operator dimension does not match Pauli string");
  }
  const std::size_t x = p.flip_mask();
  cplx acc = 0.0;
  for (std::size_t col = 0; col < d; ++col) {
    const cplx right = p.phase(col);
    for (std::size_t row = 0; row < d; ++row) {
      const cplx left = p.phase(row ^ x);
      acc += std::conj(a(row, col)) * left * a(row ^ x, col ^ x) * right;
    }
  }
  return acc;
}

}  // namespace lf
