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

#include <algorithm>
#include <unordered_map>

#include "hoareopt/gates.hpp"
#include "hoareopt/optimizer.hpp"

namespace hoareopt {
namespace {

// One sweep: each qubit keeps a stack of the surviving instructions on it.
// A gate cancels with the top of the stack when that instruction is on top
// for every qubit of the gate and touches exactly the same qubits.
PassResult sweep(const Circuit& c) {
    const auto& ins = c.instructions();
    std::vector<bool> alive(ins.size(), true);
    std::unordered_map<QubitId, std::vector<std::size_t>> stack;
    PassResult r;
    for (std::size_t i = 0; i < ins.size(); ++i) {
        const Instruction& g = ins[i];
        std::vector<QubitId> qs = g.qubits();
        if (g.is_gate() && !qs.empty()) {
            auto& s0 = stack[qs[0]];
            if (!s0.empty()) {
                const std::size_t j = s0.back();
                std::vector<QubitId> a = ins[j].qubits(), b = qs;
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                bool on_top = a == b && std::all_of(qs.begin(), qs.end(), [&](QubitId q) {
                                  auto& s = stack[q];
                                  return !s.empty() && s.back() == j;
                              });
                if (on_top && is_inverse_pair(ins[j], g)) {
                    alive[i] = alive[j] = false;
                    for (QubitId q : qs) stack[q].pop_back();
                    r.log.push_back({j, RemovalReason::PeepholeCancel, std::nullopt, 0});
                    r.log.push_back({i, RemovalReason::PeepholeCancel, std::nullopt, 0});
                    continue;
                }
            }
        }
        for (QubitId q : qs) stack[q].push_back(i);
    }
    std::vector<Instruction> out;
    for (std::size_t i = 0; i < ins.size(); ++i) {
        if (!alive[i]) continue;
        out.push_back(ins[i]);
        r.origin.push_back(i);
    }
    std::sort(r.log.begin(), r.log.end(), [](const Removal& x, const Removal& y) { return x.index < y.index; });
    r.circuit = c.with_instructions(std::move(out));
    return r;
}

}  // namespace

PassResult run_peephole(const Circuit& c) {
    require_valid(c);
    PassResult r = sweep(c);
    while (!r.log.empty()) {
        PassResult next = sweep(r.circuit);
        if (next.log.empty()) break;
        r = compose(r, next);
    }
    return r;
}

}  // namespace hoareopt
