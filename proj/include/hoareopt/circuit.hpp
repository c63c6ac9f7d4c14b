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

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hoareopt/condition.hpp"
#include "hoareopt/gate_kind.hpp"
#include "hoareopt/types.hpp"

namespace hoareopt {

enum class OpKind : std::uint8_t { Alloc, Dealloc, Measure, Gate, Assert };

struct Instruction {
    OpKind op = OpKind::Gate;
    GateKind gate = GateKind::X;  // Gate only
    std::vector<QubitId> controls;
    std::vector<QubitId> targets;  // the single qubit for Alloc/Dealloc/Measure
    Condition cond;                // Assert only; atoms are Var{qubit, 0}

    static Instruction alloc(QubitId q) { return {OpKind::Alloc, GateKind::X, {}, {q}, {}}; }
    static Instruction dealloc(QubitId q) { return {OpKind::Dealloc, GateKind::X, {}, {q}, {}}; }
    static Instruction measure(QubitId q) { return {OpKind::Measure, GateKind::X, {}, {q}, {}}; }
    static Instruction make_gate(GateKind g, std::vector<QubitId> controls, std::vector<QubitId> targets) {
        return {OpKind::Gate, g, std::move(controls), std::move(targets), {}};
    }
    static Instruction make_assert(Condition c) { return {OpKind::Assert, GateKind::X, {}, {}, std::move(c)}; }

    bool is_gate() const { return op == OpKind::Gate; }
    /// Qubits read or written: controls then targets, or the atoms of an Assert.
    std::vector<QubitId> qubits() const;
    bool touches(QubitId q) const;

    bool operator==(const Instruction& o) const;
};

/// Ordered instruction list plus a qubit table. Inputs are live from the
/// start; every other qubit becomes live at its Alloc.
class Circuit {
  public:
    /// Declares a qubit live from the start. Only valid before any instruction.
    QubitId add_input(std::string name);
    /// Declares a new qubit id and appends its Alloc.
    QubitId alloc(std::string name);
    /// Declares a new qubit id without emitting anything.
    QubitId declare(std::string name);

    void push_back(Instruction ins) { instructions_.push_back(std::move(ins)); }
    void dealloc(QubitId q) { push_back(Instruction::dealloc(q)); }
    void measure(QubitId q) { push_back(Instruction::measure(q)); }
    void gate(GateKind g, std::vector<QubitId> controls, std::vector<QubitId> targets) {
        push_back(Instruction::make_gate(g, std::move(controls), std::move(targets)));
    }
    void x(QubitId t) { gate(GateKind::X, {}, {t}); }
    void h(QubitId t) { gate(GateKind::H, {}, {t}); }
    void cx(QubitId c, QubitId t) { gate(GateKind::X, {c}, {t}); }
    void ccx(QubitId c1, QubitId c2, QubitId t) { gate(GateKind::X, {c1, c2}, {t}); }
    void mcx(std::vector<QubitId> controls, QubitId t) { gate(GateKind::X, std::move(controls), {t}); }
    void swap(QubitId a, QubitId b) { gate(GateKind::Swap, {}, {a, b}); }
    void cswap(QubitId c, QubitId a, QubitId b) { gate(GateKind::Swap, {c}, {a, b}); }
    void add_assert(Condition c) { push_back(Instruction::make_assert(std::move(c))); }

    const std::vector<Instruction>& instructions() const { return instructions_; }
    std::vector<Instruction>& instructions() { return instructions_; }
    const std::vector<QubitId>& inputs() const { return inputs_; }
    std::size_t num_qubit_ids() const { return names_.size(); }
    const std::string& name(QubitId q) const { return names_.at(q); }
    bool is_input(QubitId q) const;

    /// Same qubit table and inputs, different instructions.
    Circuit with_instructions(std::vector<Instruction> ins) const;

    /// Qubits live after the last instruction, in id order.
    std::vector<QubitId> outputs() const;

    /// Resolves a name to the most recently declared qubit carrying it.
    std::optional<QubitId> find(std::string_view name) const;

    /// Structural equality modulo relabeling of qubit ids by first appearance.
    bool operator==(const Circuit& o) const;

  private:
    std::vector<std::string> names_;
    std::vector<QubitId> inputs_;
    std::vector<Instruction> instructions_;
};

struct Violation {
    std::size_t index;  // instruction index; SIZE_MAX for circuit-level rules
    std::string rule;   // overlap, use-after-dealloc, undeclared, double-alloc, arity, ...
    std::string detail;
};

std::vector<Violation> validate(const Circuit& c);
/// Throws InvalidCircuit naming the first violation.
void require_valid(const Circuit& c);

int width(const Circuit& c);
int dag_depth(const Circuit& c);
/// Count per text mnemonic (h, cx, ccx, mcx, swap, cswap, t, tdg, ...).
std::map<std::string, int> gate_counts(const Circuit& c);
std::size_t gate_count(const Circuit& c);

/// Line format: see README. Throws ParseError with the line number.
Circuit parse_circuit(std::string_view text);
std::string serialize(const Circuit& c);
std::string to_string(const Instruction& ins, const Circuit& c);

}  // namespace hoareopt
