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

#include "hoareopt/circuit.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace hoareopt {

std::string_view base_name(GateKind g) {
    switch (g) {
        case GateKind::X: return "x";
        case GateKind::Z: return "z";
        case GateKind::H: return "h";
        case GateKind::S: return "s";
        case GateKind::T: return "t";
        case GateKind::Tdg: return "tdg";
        case GateKind::Swap: return "swap";
    }
    return "?";
}

std::optional<GateKind> gate_from_base_name(std::string_view name) {
    for (GateKind g : kAllGates) {
        if (base_name(g) == name) return g;
    }
    return std::nullopt;
}

int gate_arity(GateKind g) { return g == GateKind::Swap ? 2 : 1; }

std::string mnemonic(GateKind g, std::size_t num_controls) {
    if (g == GateKind::X) {
        if (num_controls == 0) return "x";
        if (num_controls == 1) return "cx";
        if (num_controls == 2) return "ccx";
        return "mcx";
    }
    if (g == GateKind::Swap) {
        if (num_controls == 0) return "swap";
        if (num_controls == 1) return "cswap";
        return "mcswap";
    }
    return (num_controls == 0 ? "" : "mc") + std::string(base_name(g));
}

std::vector<QubitId> Instruction::qubits() const {
    if (op == OpKind::Assert) {
        // vars_of is ordered by qubit first, so duplicates are adjacent.
        std::vector<QubitId> out;
        for (Var v : vars_of(cond)) {
            if (out.empty() || out.back() != v.qubit) out.push_back(v.qubit);
        }
        return out;
    }
    std::vector<QubitId> out = controls;
    out.insert(out.end(), targets.begin(), targets.end());
    return out;
}

bool Instruction::touches(QubitId q) const {
    if (op == OpKind::Assert) {
        for (Var v : vars_of(cond)) {
            if (v.qubit == q) return true;
        }
        return false;
    }
    return std::find(controls.begin(), controls.end(), q) != controls.end() ||
           std::find(targets.begin(), targets.end(), q) != targets.end();
}

bool Instruction::operator==(const Instruction& o) const {
    if (op != o.op || controls != o.controls || targets != o.targets) return false;
    if (op == OpKind::Gate && gate != o.gate) return false;
    if (op == OpKind::Assert && !(cond == o.cond)) return false;
    return true;
}

QubitId Circuit::declare(std::string name) {
    names_.push_back(std::move(name));
    return QubitId(names_.size() - 1);
}

QubitId Circuit::add_input(std::string name) {
    if (!instructions_.empty()) throw InvalidCircuit("inputs must be declared before any instruction");
    QubitId q = declare(std::move(name));
    inputs_.push_back(q);
    return q;
}

QubitId Circuit::alloc(std::string name) {
    QubitId q = declare(std::move(name));
    push_back(Instruction::alloc(q));
    return q;
}

bool Circuit::is_input(QubitId q) const {
    return std::find(inputs_.begin(), inputs_.end(), q) != inputs_.end();
}

Circuit Circuit::with_instructions(std::vector<Instruction> ins) const {
    Circuit c;
    c.names_ = names_;
    c.inputs_ = inputs_;
    c.instructions_ = std::move(ins);
    return c;
}

std::vector<QubitId> Circuit::outputs() const {
    std::set<QubitId> live(inputs_.begin(), inputs_.end());
    for (const auto& ins : instructions_) {
        if (ins.op == OpKind::Alloc) live.insert(ins.targets[0]);
        if (ins.op == OpKind::Dealloc) live.erase(ins.targets[0]);
    }
    return {live.begin(), live.end()};
}

std::optional<QubitId> Circuit::find(std::string_view name) const {
    for (std::size_t i = names_.size(); i > 0; --i) {
        if (names_[i - 1] == name) return QubitId(i - 1);
    }
    return std::nullopt;
}

namespace {

struct Canonical {
    std::vector<std::string> names;
    std::size_t num_inputs = 0;
    std::vector<Instruction> instructions;
};

Canonical canonicalize(const Circuit& c) {
    std::unordered_map<QubitId, QubitId> relabel;
    Canonical out;
    auto map = [&](QubitId q) {
        auto it = relabel.find(q);
        if (it != relabel.end()) return it->second;
        QubitId id = QubitId(relabel.size());
        relabel.emplace(q, id);
        out.names.push_back(q < c.num_qubit_ids() ? c.name(q) : std::string());
        return id;
    };
    for (QubitId q : c.inputs()) map(q);
    out.num_inputs = c.inputs().size();
    for (const auto& ins : c.instructions()) {
        Instruction r = ins;
        for (auto& q : r.controls) q = map(q);
        for (auto& q : r.targets) q = map(q);
        if (r.op == OpKind::Assert) {
            r.cond = substitute(ins.cond, [&](Var v) { return Condition::atom(Var{map(v.qubit), v.version}); });
        }
        out.instructions.push_back(std::move(r));
    }
    return out;
}

}  // namespace

bool Circuit::operator==(const Circuit& o) const {
    Canonical a = canonicalize(*this), b = canonicalize(o);
    return a.num_inputs == b.num_inputs && a.names == b.names && a.instructions == b.instructions;
}

std::vector<Violation> validate(const Circuit& c) {
    enum class Life : std::uint8_t { Unborn, Live, Dead };
    std::vector<Violation> out;
    std::vector<Life> life(c.num_qubit_ids(), Life::Unborn);
    for (QubitId q : c.inputs()) {
        if (q >= life.size()) {
            out.push_back({SIZE_MAX, "undeclared", "input q" + std::to_string(q)});
            continue;
        }
        life[q] = Life::Live;
    }
    auto use = [&](std::size_t i, QubitId q) {
        if (q >= life.size()) {
            out.push_back({i, "undeclared", "q" + std::to_string(q)});
            return false;
        }
        if (life[q] == Life::Unborn) {
            out.push_back({i, "use-before-alloc", c.name(q)});
            return false;
        }
        if (life[q] == Life::Dead) {
            out.push_back({i, "use-after-dealloc", c.name(q)});
            return false;
        }
        return true;
    };
    const auto& ins = c.instructions();
    for (std::size_t i = 0; i < ins.size(); ++i) {
        const Instruction& in = ins[i];
        switch (in.op) {
            case OpKind::Alloc:
            case OpKind::Dealloc:
            case OpKind::Measure: {
                if (in.targets.size() != 1 || !in.controls.empty()) {
                    out.push_back({i, "arity", "lifecycle instruction takes exactly one qubit"});
                    break;
                }
                QubitId q = in.targets[0];
                if (q >= life.size()) {
                    out.push_back({i, "undeclared", "q" + std::to_string(q)});
                    break;
                }
                if (in.op == OpKind::Alloc) {
                    if (life[q] != Life::Unborn) {
                        out.push_back({i, "double-alloc", c.name(q)});
                    } else {
                        life[q] = Life::Live;
                    }
                } else if (use(i, q) && in.op == OpKind::Dealloc) {
                    life[q] = Life::Dead;
                }
                break;
            }
            case OpKind::Gate: {
                if (in.targets.size() != std::size_t(gate_arity(in.gate))) {
                    out.push_back({i, "arity", mnemonic(in.gate, in.controls.size())});
                }
                std::vector<QubitId> qs = in.qubits();
                std::vector<QubitId> sorted = qs;
                std::sort(sorted.begin(), sorted.end());
                if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                    out.push_back({i, "overlap", "a qubit appears twice"});
                }
                for (QubitId q : qs) use(i, q);
                break;
            }
            case OpKind::Assert:
                if (!in.controls.empty() || !in.targets.empty()) {
                    out.push_back({i, "arity", "assert takes no qubit operands"});
                }
                for (Var v : vars_of(in.cond)) use(i, v.qubit);
                break;
        }
    }
    return out;
}

void require_valid(const Circuit& c) {
    auto v = validate(c);
    if (!v.empty()) {
        std::string where = v[0].index == SIZE_MAX ? "circuit" : "instruction " + std::to_string(v[0].index);
        throw InvalidCircuit("invalid circuit: " + v[0].rule + " at " + where + " (" + v[0].detail + ")");
    }
}

int width(const Circuit& c) {
    require_valid(c);
    int live = int(c.inputs().size());
    int peak = live;
    for (const auto& ins : c.instructions()) {
        if (ins.op == OpKind::Alloc) peak = std::max(peak, ++live);
        if (ins.op == OpKind::Dealloc) --live;
    }
    return peak;
}

int dag_depth(const Circuit& c) {
    require_valid(c);
    const auto& ins = c.instructions();
    // Nodes are gate instructions; an edge joins consecutive gates on a qubit.
    std::vector<std::vector<std::size_t>> preds(ins.size());
    std::unordered_map<QubitId, std::size_t> last;
    for (std::size_t i = 0; i < ins.size(); ++i) {
        if (!ins[i].is_gate()) continue;
        for (QubitId q : ins[i].qubits()) {
            auto it = last.find(q);
            if (it != last.end()) preds[i].push_back(it->second);
            last[q] = i;
        }
    }
    std::vector<int> longest(ins.size(), 0);
    int best = 0;
    for (std::size_t i = 0; i < ins.size(); ++i) {
        if (!ins[i].is_gate()) continue;
        int m = 0;
        for (std::size_t p : preds[i]) m = std::max(m, longest[p]);
        longest[i] = m + 1;
        best = std::max(best, longest[i]);
    }
    return best;
}

std::map<std::string, int> gate_counts(const Circuit& c) {
    std::map<std::string, int> out;
    for (const auto& ins : c.instructions()) {
        if (ins.is_gate()) ++out[mnemonic(ins.gate, ins.controls.size())];
    }
    return out;
}

std::size_t gate_count(const Circuit& c) {
    return std::size_t(std::count_if(c.instructions().begin(), c.instructions().end(),
                                     [](const Instruction& i) { return i.is_gate(); }));
}

}  // namespace hoareopt
