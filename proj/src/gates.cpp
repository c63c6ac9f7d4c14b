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

#include "hoareopt/gates.hpp"

#include <algorithm>

namespace hoareopt {

const GateSpec& gate_spec(GateKind g) {
    static const GateSpec table[] = {
        {GateKind::X, 1, true, false, false, GateKind::X},
        {GateKind::Z, 1, true, true, false, GateKind::Z},
        {GateKind::H, 1, true, false, true, GateKind::H},
        {GateKind::S, 1, false, true, false, GateKind::S},  // inverse is S^3, not a base gate
        {GateKind::T, 1, false, true, false, GateKind::Tdg},
        {GateKind::Tdg, 1, false, true, false, GateKind::T},
        {GateKind::Swap, 2, true, false, false, GateKind::Swap},
    };
    return table[std::size_t(g)];
}

namespace {

void check_arity(GateKind g, std::size_t n) {
    if (n != std::size_t(gate_arity(g))) {
        throw Error(std::string(base_name(g)) + ": expected " + std::to_string(gate_arity(g)) + " targets, got " +
                    std::to_string(n));
    }
}

}  // namespace

std::optional<Condition> postconditions(GateKind g, const std::vector<Condition>& pre,
                                        const std::vector<Condition>& post) {
    check_arity(g, pre.size());
    check_arity(g, post.size());
    switch (g) {
        case GateKind::X: return iff(post[0], !pre[0]);
        case GateKind::Swap: return iff(pre[0], post[1]) && iff(pre[1], post[0]);
        case GateKind::H: return std::nullopt;
        case GateKind::Z:
        case GateKind::S:
        case GateKind::T:
        case GateKind::Tdg: return iff(post[0], pre[0]);
    }
    return std::nullopt;
}

Condition trivial_if(GateKind g, const std::vector<Condition>& targets) {
    check_arity(g, targets.size());
    switch (g) {
        case GateKind::Swap: return iff(targets[0], targets[1]);
        case GateKind::Z:
        case GateKind::S:
        case GateKind::T:
        case GateKind::Tdg: return !targets[0];
        default: return Condition::constant(false);
    }
}

bool in_clifford_t(const Instruction& ins) {
    if (!ins.is_gate()) return false;
    switch (ins.gate) {
        case GateKind::X: return ins.controls.size() <= 1;
        case GateKind::H:
        case GateKind::S:
        case GateKind::T:
        case GateKind::Tdg: return ins.controls.empty();
        default: return false;
    }
}

bool is_inverse_pair(const Instruction& a, const Instruction& b) {
    if (!a.is_gate() || !b.is_gate()) return false;
    if (gate_spec(a.gate).inverse != b.gate) return false;
    if (a.gate == GateKind::S) return false;
    auto sorted = [](std::vector<QubitId> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (sorted(a.controls) != sorted(b.controls)) return false;
    if (a.gate == GateKind::Swap) return sorted(a.targets) == sorted(b.targets);
    return a.targets == b.targets;
}

}  // namespace hoareopt
