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

#include "hoareopt/sim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sim_kernels.hpp"

namespace hoareopt {
namespace {

using kernels::FixedBits;

FixedBits pin(std::vector<std::pair<unsigned, bool>> bits) {
    std::sort(bits.begin(), bits.end());
    FixedBits f;
    for (auto [pos, one] : bits) {
        f.positions.push_back(pos);
        if (one) f.set |= std::uint64_t(1) << pos;
    }
    return f;
}

std::uint64_t input_count_guard(const Circuit& c) {
    if (c.inputs().size() > kMaxSimQubits) throw BudgetExceeded("too many circuit inputs to enumerate");
    return std::uint64_t(1) << c.inputs().size();
}

}  // namespace

SimState::SimState(const Circuit& c, std::uint64_t input) {
    if (c.inputs().size() > kMaxSimQubits) throw BudgetExceeded("simulation exceeds the qubit budget");
    std::uint64_t index = 0;
    for (std::size_t k = 0; k < c.inputs().size(); ++k) {
        QubitId q = c.inputs()[k];
        bit_[q] = unsigned(k);
        order_.push_back(q);
        if ((input >> k) & 1U) index |= std::uint64_t(1) << k;
    }
    amp_.assign(std::size_t(1) << order_.size(), Amplitude(0.0));
    amp_[index] = 1.0;
}

void SimState::alloc(QubitId q) {
    if (bit_.count(q)) throw Error("simulate: double alloc");
    if (order_.size() + 1 > kMaxSimQubits) throw BudgetExceeded("simulation exceeds the qubit budget");
    bit_[q] = unsigned(order_.size());
    order_.push_back(q);
    amp_.resize(amp_.size() * 2, Amplitude(0.0));
}

void SimState::dealloc(QubitId q, std::size_t index) {
    auto it = bit_.find(q);
    if (it == bit_.end()) throw Error("simulate: dealloc of a dead qubit");
    const unsigned b = it->second;
    const std::uint64_t mask = std::uint64_t(1) << b;
    double weight = 0.0;
    for (std::uint64_t i = 0; i < amp_.size(); ++i) {
        if (i & mask) weight += std::norm(amp_[i]);
    }
    if (std::sqrt(weight) > kSimTolerance) {
        throw SimError("dealloc of a qubit that is not |0> (weight " + std::to_string(weight) + ")", index);
    }
    std::vector<Amplitude> out(amp_.size() / 2);
    const std::uint64_t low = mask - 1;
    for (std::uint64_t j = 0; j < out.size(); ++j) out[j] = amp_[(j & low) | ((j & ~low) << 1)];
    amp_ = std::move(out);
    bit_.erase(it);
    order_.erase(order_.begin() + b);
    for (auto& [qq, bb] : bit_) {
        if (bb > b) --bb;
    }
}

void SimState::apply(const Instruction& ins, std::size_t index) {
    switch (ins.op) {
        case OpKind::Alloc: return alloc(ins.targets[0]);
        case OpKind::Dealloc: return dealloc(ins.targets[0], index);
        case OpKind::Measure:
        case OpKind::Assert: return;
        case OpKind::Gate: break;
    }
    auto bit = [&](QubitId q) {
        auto it = bit_.find(q);
        if (it == bit_.end()) throw Error("simulate: gate on a dead qubit");
        return it->second;
    };
    std::vector<std::pair<unsigned, bool>> fixed;
    for (QubitId c : ins.controls) fixed.emplace_back(bit(c), true);
    const auto& k = kernels::active_kernels();
    const std::size_t n = order_.size();
    if (ins.gate == GateKind::Swap) {
        const unsigned a = bit(ins.targets[0]), b = bit(ins.targets[1]);
        fixed.emplace_back(a, true);
        fixed.emplace_back(b, false);
        k.apply_swap(amp_.data(), n, pin(fixed), a, b);
        return;
    }
    const unsigned t = bit(ins.targets[0]);
    if (ins.gate == GateKind::X) {
        fixed.emplace_back(t, false);
        k.apply_x(amp_.data(), n, pin(fixed), t);
        return;
    }
    const Matrix u = gate_unitary(ins.gate);
    if (ins.gate != GateKind::H) {
        fixed.emplace_back(t, true);
        k.apply_phase(amp_.data(), n, pin(fixed), u(1, 1));
        return;
    }
    fixed.emplace_back(t, false);
    const kernels::cplx m[4] = {u(0, 0), u(0, 1), u(1, 0), u(1, 1)};
    k.apply_1q(amp_.data(), n, pin(fixed), t, m);
}

double SimState::norm() const {
    double s = 0.0;
    for (const auto& a : amp_) s += std::norm(a);
    return std::sqrt(s);
}

std::vector<Amplitude> SimState::ordered(const std::vector<QubitId>& msb_first) const {
    if (msb_first.size() != order_.size()) throw Error("ordered: qubit list does not match the live qubits");
    const std::size_t n = msb_first.size();
    std::vector<unsigned> src(n);
    for (std::size_t k = 0; k < n; ++k) {
        auto it = bit_.find(msb_first[k]);
        if (it == bit_.end()) throw Error("ordered: qubit is not live");
        src[k] = it->second;
    }
    std::vector<Amplitude> out(amp_.size());
    for (std::uint64_t i = 0; i < amp_.size(); ++i) {
        std::uint64_t j = 0;
        for (std::size_t k = 0; k < n; ++k) j |= ((i >> src[k]) & 1U) << (n - 1 - k);
        out[j] = amp_[i];
    }
    return out;
}

bool SimState::holds_on_support(const Condition& cond) const {
    std::vector<std::pair<QubitId, unsigned>> used;
    for (Var v : vars_of(cond)) {
        auto it = bit_.find(v.qubit);
        if (it == bit_.end()) throw Error("assertion reads a dead qubit");
        used.emplace_back(v.qubit, it->second);
    }
    for (std::uint64_t i = 0; i < amp_.size(); ++i) {
        if (std::abs(amp_[i]) <= kSimTolerance) continue;
        auto value = [&](Var v) {
            for (auto [q, b] : used) {
                if (q == v.qubit) return ((i >> b) & 1U) != 0;
            }
            return false;
        };
        if (!evaluate(cond, value)) return false;
    }
    return true;
}

SimState simulate(const Circuit& c, std::uint64_t input, const SimOptions& opt) {
    SimState s(c, input);
    const auto& ins = c.instructions();
    const std::size_t stop = std::min(opt.stop, ins.size());
    for (std::size_t i = 0; i < stop; ++i) {
        if (ins[i].op == OpKind::Assert) {
            if (opt.check_asserts && !s.holds_on_support(ins[i].cond)) {
                throw SimError("assertion violated at instruction " + std::to_string(i), i);
            }
            continue;
        }
        s.apply(ins[i], i);
    }
    return s;
}

bool input_satisfies(const Circuit& c, std::uint64_t input, const Condition& precondition) {
    return evaluate(precondition, [&](Var v) {
        for (std::size_t k = 0; k < c.inputs().size(); ++k) {
            if (c.inputs()[k] == v.qubit) return ((input >> k) & 1U) != 0;
        }
        throw Error("precondition reads a qubit that is not a circuit input");
    });
}

namespace {

std::vector<QubitId> outputs_by_name(const Circuit& c, const std::vector<std::string>& names) {
    std::vector<QubitId> out;
    std::vector<QubitId> live = c.outputs();
    for (const auto& n : names) {
        auto it = std::find_if(live.begin(), live.end(), [&](QubitId q) { return c.name(q) == n; });
        if (it == live.end()) throw Error("equivalent: output '" + n + "' missing");
        out.push_back(*it);
    }
    return out;
}

}  // namespace

std::vector<std::uint64_t> satisfying_inputs(const Circuit& c, const Condition& precondition) {
    std::vector<std::uint64_t> out;
    const std::uint64_t total = input_count_guard(c);
    for (std::uint64_t x = 0; x < total; ++x) {
        if (input_satisfies(c, x, precondition)) out.push_back(x);
    }
    return out;
}

EquivalenceReport equivalent(const Circuit& a, const Circuit& b, const Condition& precondition,
                             std::size_t max_qubits) {
    return equivalent_on(a, b, satisfying_inputs(a, precondition), max_qubits);
}

EquivalenceReport equivalent_on(const Circuit& a, const Circuit& b, const std::vector<std::uint64_t>& inputs,
                                std::size_t max_qubits) {
    if (std::size_t(width(a)) > max_qubits || std::size_t(width(b)) > max_qubits) {
        throw BudgetExceeded("equivalence check exceeds the qubit budget");
    }
    if (a.inputs().size() != b.inputs().size()) throw Error("equivalent: input registers differ");
    // b's input k takes a's input perm[k].
    std::vector<std::size_t> perm;
    for (QubitId qb : b.inputs()) {
        auto it = std::find_if(a.inputs().begin(), a.inputs().end(),
                               [&](QubitId qa) { return a.name(qa) == b.name(qb); });
        if (it == a.inputs().end()) throw Error("equivalent: input '" + b.name(qb) + "' missing");
        perm.push_back(std::size_t(it - a.inputs().begin()));
    }
    std::vector<std::string> out_names;
    for (QubitId q : a.outputs()) out_names.push_back(a.name(q));
    if (b.outputs().size() != out_names.size()) throw Error("equivalent: output registers differ");
    std::sort(out_names.begin(), out_names.end());
    if (std::adjacent_find(out_names.begin(), out_names.end()) != out_names.end()) {
        throw Error("equivalent: duplicate output names");
    }
    const std::vector<QubitId> oa = outputs_by_name(a, out_names), ob = outputs_by_name(b, out_names);

    EquivalenceReport rep;
    std::optional<Amplitude> phase0;
    for (std::uint64_t x : inputs) {
        ++rep.inputs_checked;
        std::uint64_t xb = 0;
        for (std::size_t k = 0; k < perm.size(); ++k) xb |= ((x >> perm[k]) & 1U) << k;
        const std::vector<Amplitude> va = simulate(a, x).ordered(oa);
        std::vector<Amplitude> vb;
        try {
            vb = simulate(b, xb).ordered(ob);
        } catch (const SimError& e) {
            rep.per_input = rep.common_phase = false;
            rep.counterexample = x;
            rep.detail = std::string("second circuit: ") + e.what();
            return rep;
        }
        std::size_t k = 0;
        for (std::size_t i = 1; i < vb.size(); ++i) {
            if (std::abs(vb[i]) > std::abs(vb[k])) k = i;
        }
        const Amplitude phase = va[k] / vb[k];
        bool same = std::abs(std::abs(phase) - 1.0) <= kSimTolerance;
        for (std::size_t i = 0; same && i < va.size(); ++i) same = std::abs(va[i] - phase * vb[i]) <= kSimTolerance;
        if (!same) {
            rep.per_input = rep.common_phase = false;
            rep.counterexample = x;
            rep.detail = "final states differ";
            return rep;
        }
        if (!phase0) phase0 = phase;
        if (rep.common_phase && std::abs(phase - *phase0) > kSimTolerance) {
            rep.common_phase = false;
            rep.detail = "states agree only up to an input-dependent phase";
        }
    }
    return rep;
}

bool check_assertion(const Circuit& c, std::size_t index, const Condition& cond, const Condition& precondition,
                     std::size_t max_qubits) {
    if (std::size_t(width(c)) > max_qubits) throw BudgetExceeded("assertion check exceeds the qubit budget");
    const std::uint64_t total = input_count_guard(c);
    for (std::uint64_t x = 0; x < total; ++x) {
        if (!input_satisfies(c, x, precondition)) continue;
        SimOptions opt;
        opt.check_asserts = false;
        opt.stop = index;
        if (!simulate(c, x, opt).holds_on_support(cond)) return false;
    }
    return true;
}

Matrix circuit_unitary(const Circuit& c) {
    const std::size_t n = c.inputs().size();
    if (n > 10) throw BudgetExceeded("circuit_unitary: too many inputs");
    const std::vector<QubitId> msb = c.inputs();
    std::vector<QubitId> sorted = msb;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != c.outputs()) throw Error("circuit_unitary: outputs differ from inputs");
    const Eigen::Index dim = Eigen::Index(1) << n;
    Matrix m(dim, dim);
    for (std::uint64_t col = 0; col < std::uint64_t(dim); ++col) {
        std::uint64_t x = 0;  // input k is bit n-1-k of the column index
        for (std::size_t k = 0; k < n; ++k) x |= ((col >> (n - 1 - k)) & 1U) << k;
        const auto v = simulate(c, x).ordered(msb);
        for (Eigen::Index r = 0; r < dim; ++r) m(r, Eigen::Index(col)) = v[std::size_t(r)];
    }
    return m;
}

std::string describe_input(const Circuit& c, std::uint64_t input) {
    std::ostringstream os;
    for (std::size_t k = 0; k < c.inputs().size(); ++k) {
        if (k) os << ' ';
        os << c.name(c.inputs()[k]) << '=' << ((input >> k) & 1U);
    }
    return os.str();
}

}  // namespace hoareopt
