// Copyright 2026 The hoareopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Small dense unitaries. Position 0 is the most significant bit of the
// matrix index; a controlled gate lists its controls before its targets.

#pragma once

#include <set>
#include <vector>

#include <Eigen/Dense>

#include "hoareopt/circuit.hpp"

namespace hoareopt {

using Matrix = Eigen::MatrixXcd;

constexpr std::size_t kMaxControlSetQubits = 10;

Matrix gate_unitary(GateKind g);
/// `g` with `k` leading control positions.
Matrix controlled_unitary(GateKind g, std::size_t k);

/// Positions 0..k-1 of a gate with k controls.
std::set<int> declared_control_set(const Instruction& ins);

/// True iff `candidate` exposes the block form (1 - P) (x) 1 + P (x) U' with
/// P the all-ones projector on `candidate`, leaves at least one other
/// position, and no strict superset has the same property.
bool verify_control_set(const Matrix& u, const std::set<int>& candidate);

/// Matrix of a gate instruction on `support` (support[0] is the MSB).
Matrix instruction_unitary(const Instruction& ins, const std::vector<QubitId>& support);

/// Product of gate instructions applied left to right, on their joint support.
Matrix sequence_unitary(const std::vector<Instruction>& seq, const std::vector<QubitId>& support);

/// Union of the qubits of `seq` in first-appearance order.
std::vector<QubitId> joint_support(const std::vector<Instruction>& seq);

/// Exact commutation of two gate instructions. Supports larger than
/// `max_qubits` are reported as non-commuting.
bool commute(const Instruction& a, const Instruction& b, std::size_t max_qubits = 3);

bool is_identity(const Matrix& m, double tol = 1e-10);
bool equal_up_to_phase(const Matrix& a, const Matrix& b, double tol = 1e-10);

}  // namespace hoareopt
