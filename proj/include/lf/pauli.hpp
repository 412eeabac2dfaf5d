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
#include <string_view>
#include <vector>

#include "lf/types.hpp"

namespace lf {

enum class Pauli : unsigned char { I = 0, X = 1, Y = 2, Z = 3 };

/// Tensor product of single-qubit Paulis. Qubit 0 is the leftmost factor of
/// the Kronecker product, i.e. the most significant bit of a basis index.
class PauliString {
 public:
  explicit PauliString(std::vector<Pauli> labels);

  /// Parses "IXYZ"-style labels. Throws ValidationError on other characters.
  static PauliString from_str(std::string_view text);

  int num_qubits() const { return static_cast<int>(labels_.size()); }
  std::size_t dim() const { return std::size_t{1} << labels_.size(); }
  const std::vector<Pauli>& labels() const { return labels_; }
  Pauli operator[](int qubit) const { return labels_[qubit]; }

  bool is_identity() const;
  std::string str() const;

  /// Bit mask of basis-index bits flipped by this string (X and Y factors).
  std::size_t flip_mask() const { return flip_mask_; }

  /// Phase picked up by basis state |k>: P|k> = phase(k) |k ^ flip_mask()>.
  cplx phase(std::size_t k) const;

  /// <psi| P |psi>, computed without materializing P.
  double expectation(const StateVector& psi) const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::vector<Pauli> labels_;
  std::size_t flip_mask_ = 0;
  std::size_t z_mask_ = 0;  // bits carrying Z or Y factors
  int y_count_ = 0;
};

/// All 4^N Pauli strings in lexicographic (I, X, Y, Z) order, all-I first.
/// Throws CapacityError unless 1 <= N <= kMaxQubits.
std::vector<PauliString> pauli_basis(int num_qubits);

/// Dense matrix of a Pauli string.
Operator materialize(const PauliString& p);

namespace pauli {
Operator identity();
Operator sigma_x();
Operator sigma_y();
Operator sigma_z();
/// |0><1|, lowering with |1> the excited state.
Operator sigma_minus();
/// |1><0|
Operator sigma_plus();
}  // namespace pauli

Operator kron(const Operator& a, const Operator& b);

/// I x ... x op x ... x I with the 2x2 `op` acting on `target`.
Operator embed(const Operator& op, int target, int num_qubits);

/// Places a 2^k x 2^k operator on the listed target qubits (in that order).
Operator embed(const Operator& op, std::span<const int> targets, int num_qubits);

/// Tr[A B C ...]. Throws ValidationError when dimensions differ or `ops` is empty.
cplx trace_product(std::span<const Operator> ops);
cplx trace_product(std::initializer_list<Operator> ops);

/// Tr[A^dag P A P] using the monomial structure of P; O(d^2).
cplx trace_conjugated_pair(const Operator& a, const PauliString& p);

}  // namespace lf
