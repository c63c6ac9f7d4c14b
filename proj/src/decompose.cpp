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

namespace hoareopt {
namespace {

class Lowering {
  public:
    Lowering(std::vector<Instruction>& out, const std::function<QubitId()>& ancilla)
        : out_(out), ancilla_(ancilla) {}

    void gate(const Instruction& ins) {
        const auto& cs = ins.controls;
        switch (ins.gate) {
            case GateKind::X: mcx(cs, ins.targets[0]); break;
            case GateKind::Z: mcz(cs, ins.targets[0]); break;
            case GateKind::H: mch(cs, ins.targets[0]); break;
            case GateKind::S:
            case GateKind::T:
            case GateKind::Tdg: phase(ins.gate, cs, ins.targets[0]); break;
            case GateKind::Swap: mcswap(cs, ins.targets[0], ins.targets[1]); break;
        }
    }

  private:
    void one(GateKind g, QubitId t) { out_.push_back(Instruction::make_gate(g, {}, {t})); }
    void cx(QubitId c, QubitId t) { out_.push_back(Instruction::make_gate(GateKind::X, {c}, {t})); }

    QubitId take() {
        QubitId a = ancilla_();
        out_.push_back(Instruction::alloc(a));
        return a;
    }
    void give(QubitId a) { out_.push_back(Instruction::dealloc(a)); }

    // Seven-T Toffoli network.
    void ccx(QubitId a, QubitId b, QubitId t) {
        one(GateKind::H, t);
        cx(b, t);
        one(GateKind::Tdg, t);
        cx(a, t);
        one(GateKind::T, t);
        cx(b, t);
        one(GateKind::Tdg, t);
        cx(a, t);
        one(GateKind::T, b);
        one(GateKind::T, t);
        one(GateKind::H, t);
        cx(a, b);
        one(GateKind::T, a);
        one(GateKind::Tdg, b);
        cx(a, b);
    }

    // V-chain over k-2 clean work qubits.
    void mcx(const std::vector<QubitId>& cs, QubitId t) {
        const std::size_t k = cs.size();
        if (k == 0) return one(GateKind::X, t);
        if (k == 1) return cx(cs[0], t);
        if (k == 2) return ccx(cs[0], cs[1], t);
        std::vector<QubitId> a(k - 2);
        for (auto& q : a) q = take();
        auto ladder = [&] {
            ccx(cs[0], cs[1], a[0]);
            for (std::size_t i = 2; i + 1 < k; ++i) ccx(cs[i], a[i - 2], a[i - 1]);
        };
        auto unladder = [&] {
            for (std::size_t i = k - 2; i >= 2; --i) ccx(cs[i], a[i - 2], a[i - 1]);
            ccx(cs[0], cs[1], a[0]);
        };
        ladder();
        ccx(cs[k - 1], a[k - 3], t);
        unladder();
        for (std::size_t i = a.size(); i > 0; --i) give(a[i - 1]);
    }

    void mcz(const std::vector<QubitId>& cs, QubitId t) {
        if (cs.empty()) {
            one(GateKind::S, t);
            one(GateKind::S, t);
            return;
        }
        one(GateKind::H, t);
        mcx(cs, t);
        one(GateKind::H, t);
    }

    void ch(QubitId c, QubitId t) {
        one(GateKind::S, t);
        one(GateKind::H, t);
        one(GateKind::T, t);
        cx(c, t);
        one(GateKind::Tdg, t);
        one(GateKind::H, t);
        for (int i = 0; i < 3; ++i) one(GateKind::S, t);
    }

    void mch(const std::vector<QubitId>& cs, QubitId t) {
        if (cs.empty()) return one(GateKind::H, t);
        if (cs.size() == 1) return ch(cs[0], t);
        QubitId a = take();
        mcx(cs, a);
        ch(a, t);
        mcx(cs, a);
        give(a);
    }

    // Diagonal gate on t, controlled: the phase lands on the AND of
    // controls and target, computed into a work qubit.
    void phase(GateKind g, const std::vector<QubitId>& cs, QubitId t) {
        if (cs.empty()) return one(g, t);
        if (g == GateKind::S && cs.size() == 1) {
            one(GateKind::T, cs[0]);
            one(GateKind::T, t);
            cx(cs[0], t);
            one(GateKind::Tdg, t);
            cx(cs[0], t);
            return;
        }
        std::vector<QubitId> all = cs;
        all.push_back(t);
        QubitId a = take();
        mcx(all, a);
        one(g, a);
        mcx(all, a);
        give(a);
    }

    void mcswap(const std::vector<QubitId>& cs, QubitId a, QubitId b) {
        if (cs.empty()) {
            cx(a, b);
            cx(b, a);
            cx(a, b);
            return;
        }
        std::vector<QubitId> with_a = cs;
        with_a.push_back(a);
        cx(b, a);
        mcx(with_a, b);
        cx(b, a);
    }

    std::vector<Instruction>& out_;
    const std::function<QubitId()>& ancilla_;
};

}  // namespace

std::vector<Instruction> decompose(const Instruction& ins, const std::function<QubitId()>& ancilla_alloc) {
    if (!ins.is_gate()) throw Error("decompose: not a gate instruction");
    std::vector<Instruction> out;
    Lowering(out, ancilla_alloc).gate(ins);
    return out;
}

Circuit decompose_circuit(const Circuit& c) {
    Circuit out = c.with_instructions({});
    std::function<QubitId()> fresh = [&] {
        return out.declare("_a" + std::to_string(out.num_qubit_ids()));
    };
    for (const auto& ins : c.instructions()) {
        if (!ins.is_gate() || in_clifford_t(ins)) {
            out.push_back(ins);
            continue;
        }
        for (auto& d : decompose(ins, fresh)) out.push_back(std::move(d));
    }
    return out;
}

}  // namespace hoareopt
