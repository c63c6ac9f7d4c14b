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


#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "hoareopt/benchmarks.hpp"
#include "hoareopt/sim.hpp"
#include "sim_kernels.hpp"

using namespace hoareopt;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Named qubit values of a basis state; fails unless the state is one.
std::map<std::string, int> basis_values(const Circuit& c, const SimState& s) {
    const auto& amp = s.amplitudes();
    std::size_t hit = amp.size();
    for (std::size_t i = 0; i < amp.size(); ++i) {
        if (std::abs(amp[i]) > 1e-9) {
            REQUIRE(hit == amp.size());
            hit = i;
        }
    }
    REQUIRE(hit < amp.size());
    std::map<std::string, int> out;
    for (std::size_t b = 0; b < s.qubits().size(); ++b) out[c.name(s.qubits()[b])] = int((hit >> b) & 1U);
    return out;
}

std::uint64_t reg_value(const std::map<std::string, int>& v, const std::string& reg, int n, bool msb_first) {
    std::uint64_t x = 0;
    for (int i = 0; i < n; ++i) {
        int bit = v.at(reg + std::to_string(i));
        x |= std::uint64_t(bit) << (msb_first ? n - 1 - i : i);
    }
    return x;
}

}  // namespace

TEST_CASE("Bell state amplitudes") {
    Circuit bell = example_bell();
    SimState s = simulate(bell, 0);
    auto v = s.ordered({*bell.find("q0"), *bell.find("q1")});
    CHECK(std::abs(v[0] - kInvSqrt2) < 1e-12);
    CHECK(std::abs(v[3] - kInvSqrt2) < 1e-12);
    CHECK(std::abs(v[1]) < 1e-12);
    CHECK(std::abs(v[2]) < 1e-12);
    CHECK(std::abs(s.norm() - 1.0) < 1e-12);
}

TEST_CASE("X flips a basis state") {
    Circuit c = parse_circuit("alloc q\nx q\n");
    auto v = simulate(c, 0).amplitudes();
    CHECK(std::abs(v[1] - 1.0) < 1e-12);
}

TEST_CASE("chain of three makes a GHZ state") {
    Circuit c = build_cnot_chain(3);
    auto v = simulate(c, 0).ordered({0, 1, 2});
    CHECK(std::abs(v[0] - kInvSqrt2) < 1e-12);
    CHECK(std::abs(v[7] - kInvSqrt2) < 1e-12);
    for (int i = 1; i < 7; ++i) CHECK(std::abs(v[std::size_t(i)]) < 1e-12);
}

TEST_CASE("dealloc of a nonzero qubit is flagged") {
    Circuit c = parse_circuit("alloc q\nx q\ndealloc q\n");
    try {
        simulate(c, 0);
        FAIL("expected SimError");
    } catch (const SimError& e) {
        CHECK(e.index() == 2);
    }
}

TEST_CASE("violated assertion is flagged") {
    Circuit c = parse_circuit("alloc q0\nalloc q1\nh q0\nassert eq(q0, 0)\n");
    CHECK_THROWS_AS(simulate(c, 0), SimError);
    SimOptions opt;
    opt.check_asserts = false;
    CHECK_NOTHROW(simulate(c, 0, opt));
}

TEST_CASE("equivalence examples") {
    CHECK(equivalent(example_bell(), example_bell()).common_phase);
    CHECK(equivalent(example_bell_swap(), example_bell()).common_phase);
    Circuit xc = parse_circuit("input q\nx q\n");
    Circuit empty = parse_circuit("input q\n");
    EquivalenceReport r = equivalent(xc, empty);
    CHECK_FALSE(r.per_input);
    REQUIRE(r.counterexample);
    CHECK(*r.counterexample == 0);
    CHECK(describe_input(xc, 0) == "q=0");
}

TEST_CASE("per-input phase differs from common phase") {
    // Z on an input gives phase -1 only when the input is one.
    Circuit z = parse_circuit("input q\nz q\n");
    Circuit id = parse_circuit("input q\n");
    EquivalenceReport r = equivalent(z, id);
    CHECK(r.per_input);
    CHECK_FALSE(r.common_phase);
    EquivalenceReport one = equivalent(z, id, eq(Condition::atom(Var{0, 0}), Condition::num(1)));
    CHECK(one.common_phase);
    CHECK(one.inputs_checked == 1);
}

TEST_CASE("budget") {
    Circuit c;
    for (int i = 0; i < 15; ++i) c.add_input("q" + std::to_string(i));
    CHECK_THROWS_AS(equivalent(c, c), BudgetExceeded);
}

TEST_CASE("assertion checks") {
    Circuit bell = example_bell();
    Condition same = eq(Condition::atom(Var{0, 0}), Condition::atom(Var{1, 0}));
    CHECK(check_assertion(bell, bell.instructions().size(), same));
    CHECK_FALSE(check_assertion(bell, bell.instructions().size(), eq(Condition::atom(Var{0, 0}), Condition::num(0))));

    Circuit fo = build_first_one(RenormParams::for_size(4));
    const auto& ins = fo.instructions();
    REQUIRE(ins.back().op == OpKind::Assert);
    CHECK(check_assertion(fo, ins.size() - 1, ins.back().cond));
}

TEST_CASE("first-one values") {
    RenormParams rp = RenormParams::for_size(4);
    Circuit fo = build_first_one(rp);
    for (std::uint64_t x = 0; x < 16; ++x) {
        CAPTURE(x);
        std::uint64_t in = 0;
        for (int k = 0; k < 4; ++k) in |= ((x >> (3 - k)) & 1U) << k;  // x0 is the MSB
        auto v = basis_values(fo, simulate(fo, in));
        int lz = 0;
        while (lz < 4 && !((x >> (3 - lz)) & 1U)) ++lz;
        CHECK(v.at("f") == (x == 0 ? 1 : 0));
        CHECK(reg_value(v, "p", 2, false) == std::uint64_t(x == 0 ? 0 : lz));
        CHECK(reg_value(v, "x", 4, true) == x);
    }
}

TEST_CASE("shift values") {
    RenormParams rp = RenormParams::for_size(4);
    Circuit sh = build_shift(rp);
    // x = 0010, p = 2
    std::uint64_t in = 0;
    in |= 1U << 2;        // x2
    in |= 1U << (4 + 1);  // p1
    auto v = basis_values(sh, simulate(sh, in));
    CHECK(reg_value(v, "x", 4, true) == 0b1000);
    for (int a = 0; a < 3; ++a) CHECK(v.at("a" + std::to_string(a)) == 0);
}

TEST_CASE("renormalize values") {
    RenormParams rp = RenormParams::for_size(4);
    Circuit c = build_renormalize(rp);
    auto run = [&](std::uint64_t x) {
        std::uint64_t in = 0;
        for (int k = 0; k < 4; ++k) in |= ((x >> (3 - k)) & 1U) << k;
        return basis_values(c, simulate(c, in));
    };
    auto a = run(0b0011);
    CHECK(reg_value(a, "x", 4, true) == 0b1100);
    CHECK(reg_value(a, "p", 2, false) == 2);
    auto b = run(0b1000);
    CHECK(reg_value(b, "x", 4, true) == 0b1000);
    CHECK(reg_value(b, "p", 2, false) == 0);
}

TEST_CASE("AVX2 kernels match scalar kernels") {
    using namespace kernels;
    const KernelTable* v = avx2_kernels();
#if defined(__x86_64__) || defined(__i386__)
    if (v && !(__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))) v = nullptr;
#else
    v = nullptr;
#endif
    if (!v) {
        MESSAGE("no AVX2 kernels on this build or CPU; only the scalar path is exercised");
        return;
    }
    const KernelTable& s = scalar_kernels();
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t nb = 1 + std::size_t(trial % 10);
        std::vector<cplx> a(std::size_t(1) << nb);
        for (auto& z : a) z = {gauss(rng), gauss(rng)};
        std::vector<cplx> b = a;
        std::vector<unsigned> pos(nb);
        for (unsigned i = 0; i < nb; ++i) pos[i] = i;
        std::shuffle(pos.begin(), pos.end(), rng);
        const std::size_t nctl = nb >= 3 ? std::size_t(rng() % (nb - 2)) : 0;
        FixedBits f;
        std::vector<unsigned> pinned(pos.begin(), pos.begin() + long(nctl));
        for (unsigned p : pinned) f.set |= std::uint64_t(1) << p;
        const unsigned t = pos[nctl];
        const int kind = trial % 4;
        if (kind == 3 && nb < 2) continue;
        const unsigned t2 = nb >= 2 ? pos[nctl + 1] : t;
        pinned.push_back(t);
        if (kind == 3) {
            pinned.push_back(t2);
            f.set |= std::uint64_t(1) << t;  // a pinned to one, b to zero
        } else if (kind == 1) {
            f.set |= std::uint64_t(1) << t;
        }
        std::sort(pinned.begin(), pinned.end());
        f.positions = pinned;
        const cplx m[4] = {{0.6, 0.1}, {-0.3, 0.7}, {0.2, -0.5}, {0.9, 0.05}};
        switch (kind) {
            case 0:
                s.apply_1q(a.data(), nb, f, t, m);
                v->apply_1q(b.data(), nb, f, t, m);
                break;
            case 1:
                s.apply_phase(a.data(), nb, f, {0.0, 1.0});
                v->apply_phase(b.data(), nb, f, {0.0, 1.0});
                break;
            case 2:
                s.apply_x(a.data(), nb, f, t);
                v->apply_x(b.data(), nb, f, t);
                break;
            default:
                s.apply_swap(a.data(), nb, f, t, t2);
                v->apply_swap(b.data(), nb, f, t, t2);
                break;
        }
        CAPTURE(trial);
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-12);
    }
}
