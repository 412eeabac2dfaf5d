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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lf/lindblad.hpp"
#include "lf/theory.hpp"

namespace lf {

/// Names accepted by named_gate: identity, x90, x180, z180, h, cz, cnot.
const std::vector<std::string>& named_gate_names();

/// Number of qubits a named gate acts on (1 or 2); throws ValidationError
/// for unknown names.
int named_gate_arity(std::string_view name);

/// Textbook matrix of a named gate on its own qubits: x90 = exp(-i pi X / 4),
/// x180 = X, z180 = Z, h = Hadamard, cz, cnot (control first).
Operator textbook_gate(std::string_view name);

/// Constant-amplitude schedule of duration tau whose ideal unitary equals
/// textbook_gate(name) on `targets` and identity elsewhere.
GateSchedule named_gate(std::string_view name, int num_qubits,
                        std::span<const int> targets, double tau);

/// Constant-amplitude rotation by `angle` about x or z on one qubit:
/// H = angle / (2 tau) * sigma.
GateSchedule constant_rotation(RotationAxis axis, double angle, int num_qubits,
                               int target, double tau);

/// Single-segment schedule implementing a Haar-random unitary in time tau,
/// H = i log(U) / tau with the principal branch.
GateSchedule haar_random_gate(int num_qubits, double tau, std::uint64_t seed);

/// Hermitian H with exp(-i H tau) = u; u must be unitary.
Operator hamiltonian_for_unitary(const Operator& u, double tau);

}  // namespace lf
