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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace lf {

using cplx = std::complex<double>;

/// Dense d x d complex matrix. Gates, jump operators, observables and
/// Hamiltonians all share this representation.
using Operator = Eigen::MatrixXcd;

/// Column vector of length d (pure states) or d^2 (vectorized density matrices).
using StateVector = Eigen::VectorXcd;

/// Supported qubit counts for dense operators are 1..kMaxQubits.
inline constexpr int kMaxQubits = 6;

/// Input failed a precondition (bad index, negative rate, mismatched sizes).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds the dense-operator resource guard.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A computed quantity violated a numerical invariant.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::size_t dim_for_qubits(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw CapacityError("qubit count " + std::to_string(num_qubits) +
                        " outside supported range [1, " +
                        std::to_string(kMaxQubits) + "]");
  }
  return std::size_t{1} << num_qubits;
}

}  // namespace lf
