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

// Hoare metadata per gate and decomposition to {CNOT, X, H, S, T, Tdg}.
// Matrices live in unitary.hpp so that this header stays free of Eigen.

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hoareopt/circuit.hpp"
#include "hoareopt/condition.hpp"

namespace hoareopt {

struct GateSpec {
    GateKind kind;
    int arity;
    bool self_inverse;
    bool diagonal;  // phase gates: identity on basis-state support
    bool havoc;     // no classical relation even when uncontrolled
    GateKind inverse;
};

const GateSpec& gate_spec(GateKind g);

/// Relation between target values before (`pre`) and after (`post`) the
/// uncontrolled gate. nullopt means Havoc.
std::optional<Condition> postconditions(GateKind g, const std::vector<Condition>& pre,
                                        const std::vector<Condition>& post);

/// A condition on the targets under which the uncontrolled gate fixes the
/// state. Literal false when no such condition exists.
Condition trivial_if(GateKind g, const std::vector<Condition>& targets);

/// True for the gates of the decomposition target set.
bool in_clifford_t(const Instruction& ins);

/// Rewrites one gate instruction over {CNOT, X, H, S, T, Tdg}. Work qubits
/// come from `ancilla_alloc` and are bracketed by Alloc/Dealloc.
std::vector<Instruction> decompose(const Instruction& ins, const std::function<QubitId()>& ancilla_alloc);

/// Decomposes every gate; ancillas get fresh ids named `_a<N>`.
Circuit decompose_circuit(const Circuit& c);

/// True if `a` followed by `b` is the identity: same controls (as a set),
/// same targets (as a set for Swap) and inverse base gates.
bool is_inverse_pair(const Instruction& a, const Instruction& b);

}  // namespace hoareopt
