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

#include "hoareopt/benchmarks.hpp"

#include <algorithm>
#include <string>

namespace hoareopt {
namespace {

std::vector<QubitId> inputs(Circuit& c, const std::string& prefix, int n) {
    std::vector<QubitId> out;
    for (int i = 0; i < n; ++i) out.push_back(c.add_input(prefix + std::to_string(i)));
    return out;
}

std::vector<QubitId> allocs(Circuit& c, const std::string& prefix, int n) {
    std::vector<QubitId> out;
    for (int i = 0; i < n; ++i) out.push_back(c.alloc(prefix + std::to_string(i)));
    return out;
}

std::vector<Condition> atoms_of(const std::vector<QubitId>& qs) {
    std::vector<Condition> out;
    for (QubitId q : qs) out.push_back(Condition::atom(Var{q, 0}));
    return out;
}

// MCX from Toffolis with m - 2 borrowed qubits in any state, which are
// restored.
void mcx_dirty(Circuit& c, const std::vector<QubitId>& ctl, const std::vector<QubitId>& dirty, QubitId t) {
    const std::size_t m = ctl.size();
    if (m <= 2) return c.mcx(ctl, t);
    if (dirty.size() < m - 2) throw Error("mcx_dirty: not enough borrowed qubits");
    const auto& a = dirty;
    auto down_up = [&] {
        for (std::size_t k = m - 2; k >= 2; --k) c.ccx(ctl[k], a[k - 2], a[k - 1]);
        c.ccx(ctl[0], ctl[1], a[0]);
        for (std::size_t k = 2; k + 1 < m; ++k) c.ccx(ctl[k], a[k - 2], a[k - 1]);
    };
    c.ccx(ctl[m - 1], a[m - 3], t);
    down_up();
    c.ccx(ctl[m - 1], a[m - 3], t);
    down_up();
}

struct RenormRegs {
    std::vector<QubitId> x, p, anc;
    QubitId f = 0;
};

void first_one_body(Circuit& c, const RenormParams& rp, RenormRegs& r) {
    r.p = allocs(c, "p", rp.n_p);
    r.f = c.alloc("f");
    c.x(r.f);
    c.cx(r.x[0], r.f);
    for (int i = 1; i < rp.n; ++i) {
        std::vector<QubitId> bits;
        for (int b = 0; b < rp.n_p; ++b) {
            if ((i >> b) & 1) bits.push_back(r.p[std::size_t(b)]);
        }
        for (QubitId pb : bits) c.ccx(r.f, r.x[std::size_t(i)], pb);
        // Only the state that just hit carries p covering bits(i) with f = 1,
        // so the flag is cleared by p alone.
        mcx_dirty(c, bits, r.x, r.f);
    }
}

Condition a_fo(const RenormParams& rp, const RenormRegs& r) {
    return lt(reg_msb(atoms_of(r.x)),
              shl(Condition::num(1), sub(Condition::num(std::uint64_t(rp.n)), reg_lsb(atoms_of(r.p)))));
}

void shift_body(Circuit& c, const RenormParams& rp, RenormRegs& r) {
    r.anc = allocs(c, "a", rp.ancillas());
    // Extended register, most significant first: a{A-1} .. a0 x0 .. x{n-1}.
    std::vector<QubitId> e(r.anc.rbegin(), r.anc.rend());
    e.insert(e.end(), r.x.begin(), r.x.end());
    for (int k = 0; k < rp.n_p; ++k) {
        const std::size_t d = std::size_t(1) << k;
        for (std::size_t m = 0; m + d < e.size(); ++m) c.cswap(r.p[std::size_t(k)], e[m], e[m + d]);
    }
}

void check(const RenormParams& rp) {
    if (rp.n < 2 || rp.n_p < 1 || rp.n_p > 6 || (1 << rp.n_p) < rp.n) throw Error("invalid renormalization parameters");
}

}  // namespace

RenormParams RenormParams::for_size(int n) {
    RenormParams rp;
    rp.n = n;
    rp.n_p = 1;
    while ((1 << rp.n_p) < n) ++rp.n_p;
    return rp;
}

Circuit build_first_one(const RenormParams& rp) {
    check(rp);
    Circuit c;
    RenormRegs r;
    r.x = inputs(c, "x", rp.n);
    first_one_body(c, rp, r);
    c.add_assert(a_fo(rp, r));
    return c;
}

Circuit build_shift(const RenormParams& rp) {
    check(rp);
    Circuit c;
    RenormRegs r;
    r.x = inputs(c, "x", rp.n);
    r.p = inputs(c, "p", rp.n_p);
    shift_body(c, rp, r);
    return c;
}

Circuit build_renormalize(const RenormParams& rp, bool with_assert) {
    check(rp);
    Circuit c;
    RenormRegs r;
    r.x = inputs(c, "x", rp.n);
    first_one_body(c, rp, r);
    if (with_assert) c.add_assert(a_fo(rp, r));
    shift_body(c, rp, r);
    for (QubitId a : r.anc) c.dealloc(a);
    return c;
}

Circuit build_cnot_chain(int n) {
    if (n < 2) throw Error("chain needs at least two qubits");
    Circuit c;
    auto q = allocs(c, "q", n);
    c.h(q[0]);
    for (int i = 0; i + 1 < n; ++i) c.cx(q[std::size_t(i)], q[std::size_t(i) + 1]);
    return c;
}

Circuit map_lnn(const Circuit& chain, int n) {
    if (!(chain == build_cnot_chain(n))) throw Error("map_lnn expects the entangling chain");
    Circuit c;
    auto p = allocs(c, "q", n);
    c.h(p[0]);
    for (int i = 1; i < n; ++i) {
        const std::size_t u = std::size_t(i) - 1, v = std::size_t(i);
        c.cx(p[u], p[v]);
        if (i + 1 < n) c.swap(p[u], p[v]);
    }
    for (int i = n - 3; i >= 0; --i) c.swap(p[std::size_t(i)], p[std::size_t(i) + 1]);
    return c;
}

bool is_nearest_neighbour(const Circuit& c) {
    auto index = [&](QubitId q) { return std::stoi(c.name(q).substr(1)); };
    for (const auto& ins : c.instructions()) {
        if (!ins.is_gate()) continue;
        auto qs = ins.qubits();
        if (qs.size() == 1) continue;
        if (qs.size() > 2 || std::abs(index(qs[0]) - index(qs[1])) != 1) return false;
    }
    return true;
}

namespace {

// Takahashi-Tani-Kunihiro ripple adder b <- b + a (optionally controlled by
// `ctl`), with the carry xored into z. a is restored.
void ttk_add(Circuit& c, const std::vector<QubitId>& a, const std::vector<QubitId>& b, QubitId z,
             std::optional<QubitId> ctl) {
    const std::size_t n = a.size();
    auto with = [&](std::vector<QubitId> cs) {
        if (ctl) cs.insert(cs.begin(), *ctl);
        return cs;
    };
    for (std::size_t i = 1; i < n; ++i) c.mcx(with({a[i]}), b[i]);
    c.mcx(with({a[n - 1]}), z);
    for (std::size_t i = n - 2; i >= 1; --i) c.cx(a[i], a[i + 1]);
    for (std::size_t i = 0; i + 1 < n; ++i) c.ccx(b[i], a[i], a[i + 1]);
    c.mcx(with({b[n - 1], a[n - 1]}), z);
    for (std::size_t i = n - 1; i >= 1; --i) {
        c.mcx(with({a[i]}), b[i]);
        c.ccx(b[i - 1], a[i - 1], a[i]);
    }
    for (std::size_t i = 1; i + 1 < n; ++i) c.cx(a[i], a[i + 1]);
    for (std::size_t i = 0; i < n; ++i) c.mcx(with({a[i]}), b[i]);
}

// z ^= carry(a + b); a and b restored.
void ttk_carry(Circuit& c, const std::vector<QubitId>& a, const std::vector<QubitId>& b, QubitId z) {
    const std::size_t n = a.size();
    for (std::size_t i = 1; i < n; ++i) c.cx(a[i], b[i]);
    c.cx(a[n - 1], z);
    for (std::size_t i = n - 2; i >= 1; --i) c.cx(a[i], a[i + 1]);
    for (std::size_t i = 0; i + 1 < n; ++i) c.ccx(b[i], a[i], a[i + 1]);
    c.ccx(b[n - 1], a[n - 1], z);
    for (std::size_t i = n - 1; i >= 1; --i) c.ccx(b[i - 1], a[i - 1], a[i]);
    for (std::size_t i = 1; i + 1 < n; ++i) c.cx(a[i], a[i + 1]);
    for (std::size_t i = n - 1; i >= 1; --i) c.cx(a[i], b[i]);
}

}  // namespace

Circuit build_modular_reduce(int n) {
    if (n < 2) throw Error("modular reduction needs n >= 2");
    Circuit c;
    auto b = inputs(c, "b", n);
    auto N = inputs(c, "N", n);
    QubitId cmp = c.alloc("cmp");

    // cmp = [N > b] is the carry of N + ~b; then complement.
    for (QubitId q : b) c.x(q);
    ttk_carry(c, N, b, cmp);
    for (QubitId q : b) c.x(q);
    c.x(cmp);
    c.add_assert(iff(Condition::atom(Var{cmp, 0}), le(reg_lsb(atoms_of(N)), reg_lsb(atoms_of(b)))));

    // b - N = ~(~b + N), done only when cmp; the carry out is then zero.
    QubitId carry = c.alloc("c");
    for (QubitId q : b) c.cx(cmp, q);
    ttk_add(c, N, b, carry, cmp);
    for (QubitId q : b) c.cx(cmp, q);
    c.dealloc(carry);
    return c;
}

Circuit example_bell() {
    Circuit c;
    QubitId q0 = c.alloc("q0"), q1 = c.alloc("q1");
    c.h(q0);
    c.cx(q0, q1);
    return c;
}

Circuit example_bell_swap() {
    Circuit c = example_bell();
    c.swap(0, 1);
    return c;
}

Circuit example_zero_control() {
    Circuit c;
    QubitId t = c.add_input("t");
    QubitId ctl = c.alloc("c");
    c.cx(ctl, t);
    return c;
}

Circuit example_one_control() {
    Circuit c;
    QubitId t = c.add_input("t");
    QubitId ctl = c.alloc("c");
    c.x(ctl);
    c.cx(ctl, t);
    return c;
}

Circuit example_double_controlled_pair() {
    Circuit c;
    QubitId a = c.add_input("a"), b = c.add_input("b"), t = c.add_input("t");
    QubitId copy = c.alloc("c");
    c.gate(GateKind::T, {a, b}, {t});
    c.cx(a, copy);
    c.gate(GateKind::Tdg, {copy, b}, {t});
    return c;
}

Circuit example_adversarial_pair() {
    Circuit c;
    QubitId a = c.add_input("a"), b = c.add_input("b"), d = c.add_input("d"), t = c.add_input("t");
    QubitId copy = c.alloc("c");
    c.gate(GateKind::T, {a, b}, {t});
    c.cx(d, copy);
    c.gate(GateKind::Tdg, {copy, b}, {t});
    return c;
}

}  // namespace hoareopt
