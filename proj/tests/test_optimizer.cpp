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

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "hoareopt/bench.hpp"
#include "hoareopt/benchmarks.hpp"
#include "hoareopt/optimizer.hpp"
#include "hoareopt/sim.hpp"
#include "hoareopt/symbolic_state.hpp"

using namespace hoareopt;

namespace {

std::size_t count_reason(const RemovalLog& log, RemovalReason r) {
    return std::size_t(std::count_if(log.begin(), log.end(), [&](const Removal& x) { return x.reason == r; }));
}

bool same_behaviour(const Circuit& a, const Circuit& b) {
    EquivalenceReport r = equivalent(a, b);
    CAPTURE(r.detail);
    return r.common_phase;
}

PassConfig single_only() {
    PassConfig cfg;
    cfg.enable_multi = false;
    return cfg;
}

// Inputs plus allocated qubits, random gates; no Dealloc so every run is
// simulable.
Circuit random_circuit(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t n) { return std::size_t(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)); };
    Circuit c;
    std::vector<QubitId> live;
    for (int i = 0; i < 3; ++i) live.push_back(c.add_input("in" + std::to_string(i)));
    int next = 0;
    const GateKind kinds[] = {GateKind::X, GateKind::X, GateKind::X, GateKind::Swap, GateKind::Z,
                              GateKind::T, GateKind::Tdg, GateKind::S, GateKind::H};
    for (int step = 0; step < 30; ++step) {
        if (pick(8) == 0 && live.size() < 7) {
            live.push_back(c.alloc("w" + std::to_string(next++)));
            continue;
        }
        std::vector<QubitId> pool = live;
        std::shuffle(pool.begin(), pool.end(), rng);
        GateKind g = kinds[pick(std::size(kinds))];
        std::size_t arity = std::size_t(gate_arity(g));
        std::size_t nc = std::min(pick(3), pool.size() - arity);
        c.gate(g, std::vector<QubitId>(pool.begin(), pool.begin() + long(nc)),
               std::vector<QubitId>(pool.begin() + long(nc), pool.begin() + long(nc + arity)));
        // Repeat the gate now and then so that groups exist.
        if (pick(4) == 0) c.push_back(c.instructions().back());
    }
    return c;
}

}  // namespace

TEST_CASE("Bell then Swap: the Swap is removed") {
    Circuit c = example_bell_swap();
    PassResult r = run_hoare(c);
    REQUIRE(r.log.size() == 1);
    CHECK(r.log[0].index == 4);
    CHECK(r.log[0].reason == RemovalReason::TrivialSingle);
    CHECK(r.circuit == example_bell());
    CHECK(same_behaviour(c, r.circuit));
}

TEST_CASE("CNOT with a fresh control is removed") {
    Circuit c = example_zero_control();
    PassResult r = run_hoare(c);
    REQUIRE(r.log.size() == 1);
    CHECK(r.log[0].reason == RemovalReason::ZeroControl);
    CHECK(r.log[0].index == 1);
    CHECK(same_behaviour(c, r.circuit));
}

TEST_CASE("control known to be one is stripped") {
    Circuit c = example_one_control();
    PassResult r = run_hoare(c);
    CHECK(r.log.empty());
    CHECK(r.controls_stripped == 1);
    const Instruction& last = r.circuit.instructions().back();
    CHECK(last.gate == GateKind::X);
    CHECK(last.controls.empty());
    CHECK(last.targets == std::vector<QubitId>{*c.find("t")});
    CHECK(same_behaviour(c, r.circuit));
}

TEST_CASE("double-controlled pair cancels as a group") {
    Circuit c = example_double_controlled_pair();
    PassResult r = run_hoare(c);
    REQUIRE(r.log.size() == 2);
    CHECK(r.log[0].index == 1);
    CHECK(r.log[1].index == 3);
    for (const auto& x : r.log) CHECK(x.reason == RemovalReason::AllOrNoneGroup);
    REQUIRE(r.log[0].group);
    CHECK(r.log[0].group == r.log[1].group);
    CHECK(same_behaviour(c, r.circuit));

    PassResult single = run_hoare(c, single_only());
    CHECK(single.log.empty());
}

TEST_CASE("adversarial pair is kept") {
    Circuit c = example_adversarial_pair();
    PassResult r = run_hoare(c);
    CHECK(r.log.empty());
    CHECK(r.circuit == c);

    // Witness: some input fires exactly one of the two gates.
    QubitId a = *c.find("a"), b = *c.find("b"), d = *c.find("d");
    Condition first = Condition::atom(Var{a, 0}) && Condition::atom(Var{b, 0});
    Condition second = Condition::atom(Var{d, 0}) && Condition::atom(Var{b, 0});
    SatResult w = brute_force_sat({}, !iff(first, second));
    CHECK(w.sat());
    auto ins = c.instructions();
    ins.erase(ins.begin() + 3);
    ins.erase(ins.begin() + 1);
    CHECK_FALSE(equivalent(c, c.with_instructions(ins)).common_phase);
}

TEST_CASE("shift Fredkins need the assertion") {
    for (int n : {4, 8}) {
        CAPTURE(n);
        RenormParams rp = RenormParams::for_size(n);
        // Shift block alone: x and p are free, so only Fredkins between two
        // still-empty ancillas go and every ancilla stays in use.
        Circuit bare = build_shift(rp);
        PassResult kept = run_hoare(bare);
        std::set<QubitId> used;
        for (const auto& ins : kept.circuit.instructions()) {
            if (ins.is_gate()) used.insert(ins.targets.begin(), ins.targets.end());
        }
        for (const auto& x : kept.log) {
            const Instruction& ins = bare.instructions()[x.index];
            CHECK(ins.gate == GateKind::Swap);
            for (QubitId t : ins.targets) CHECK(bare.name(t)[0] == 'a');
        }
        for (int a = 0; a < rp.ancillas(); ++a) CHECK(used.count(*bare.find("a" + std::to_string(a))));
        if (n == 4) CHECK(equivalent(bare, kept.circuit).common_phase);

        // With A_FO in front every Fredkin touching an ancilla goes.
        std::vector<Condition> x, p;
        for (int i = 0; i < rp.n; ++i) x.push_back(Condition::atom(Var{*bare.find("x" + std::to_string(i)), 0}));
        for (int i = 0; i < rp.n_p; ++i) p.push_back(Condition::atom(Var{*bare.find("p" + std::to_string(i)), 0}));
        Condition afo = lt(reg_msb(x), shl(Condition::num(1), sub(Condition::num(std::uint64_t(rp.n)), reg_lsb(p))));
        auto ins = bare.instructions();
        ins.insert(ins.begin(), Instruction::make_assert(afo));
        Circuit guarded = bare.with_instructions(ins);
        PassResult gone = run_hoare(guarded);
        for (const auto& g : gone.circuit.instructions()) {
            if (!g.is_gate()) continue;
            for (QubitId t : g.targets) CHECK(guarded.name(t)[0] != 'a');
        }
        if (n == 4) CHECK(equivalent(guarded, gone.circuit, afo).common_phase);

        // On the whole renormalization the first-one block already pins p,
        // so the ancillas go with or without the assertion.
        for (bool with_assert : {true, false}) {
            Circuit whole = build_renormalize(rp, with_assert);
            CHECK(width(whole) - width(run_shift_optimization(whole).circuit) == rp.ancillas());
        }

        Circuit with = build_renormalize(rp, true);
        PassResult opt = run_shift_optimization(with);
        CHECK(width(with) - width(opt.circuit) == rp.ancillas());
        CHECK(count_reason(opt.log, RemovalReason::AllocDeallocPair) == std::size_t(2 * rp.ancillas()));
    }
}

TEST_CASE("shift optimization keeps behaviour (n=4, all inputs)") {
    Circuit c = build_renormalize(RenormParams::for_size(4));
    CHECK(same_behaviour(c, run_shift_optimization(c).circuit));
}

TEST_CASE("alloc/dealloc elision") {
    SUBCASE("empty pair") {
        PassResult r = elide_alloc_dealloc(parse_circuit("alloc q\ndealloc q\n"));
        CHECK(r.circuit.instructions().empty());
        CHECK(count_reason(r.log, RemovalReason::AllocDeallocPair) == 2);
    }
    SUBCASE("an X in between keeps both") {
        Circuit c = parse_circuit("alloc q\nx q\ndealloc q\n");
        CHECK(elide_alloc_dealloc(c).circuit == c);
    }
}

TEST_CASE("peephole cancellation") {
    CHECK(run_peephole(parse_circuit("input q\nx q\nx q\n")).circuit.instructions().empty());
    CHECK(run_peephole(parse_circuit("input a\ninput b\ncx a b\ncx a b\n")).circuit.instructions().empty());
    CHECK(run_peephole(parse_circuit("input q\nt q\ntdg q\n")).circuit.instructions().empty());
    PassResult nested = run_peephole(parse_circuit("input a\ninput b\nh a\ncx a b\ncx a b\nh a\n"));
    CHECK(nested.circuit.instructions().empty());
    CHECK(count_reason(nested.log, RemovalReason::PeepholeCancel) == 4);
    Circuit bs = example_bell_swap();
    CHECK(run_peephole(bs).circuit == bs);
    Circuit blocked = parse_circuit("input a\ninput b\nx a\ncx a b\nx a\n");
    CHECK(run_peephole(blocked).circuit == blocked);
}

TEST_CASE("compose maps indices back to the first input") {
    Circuit c = parse_circuit("input q\nalloc a\nx q\nx q\ndealloc a\nh q\n");
    PassResult p = run_peephole(c);
    PassResult both = compose(p, elide_alloc_dealloc(p.circuit));
    std::vector<std::size_t> idx;
    for (const auto& x : both.log) idx.push_back(x.index);
    CHECK(idx == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(both.origin == std::vector<std::size_t>{4});
}

TEST_CASE("removal log as JSON lines") {
    PassResult r = run_hoare(example_double_controlled_pair());
    std::string s = to_jsonl(r.log);
    CHECK(std::count(s.begin(), s.end(), '\n') == 2);
    CHECK(s.find("\"reason\":\"all_or_none_group\"") != std::string::npos);
    CHECK(s.find("\"group\":") != std::string::npos);
}

TEST_CASE("smt2 transcript") {
    std::ostringstream os;
    PassConfig cfg;
    cfg.smt2 = &os;
    run_hoare(example_bell_swap(), cfg);
    std::string s = os.str();
    CHECK(s.find("(declare-const") != std::string::npos);
    CHECK(s.find("(push") != std::string::npos);
    CHECK(s.find("(pop") != std::string::npos);
    CHECK(s.find("(check-sat)") != std::string::npos);
}

TEST_CASE("a group is found once its span fits the window") {
    // T, CX, Tdg span three buffer entries.
    for (std::size_t w : {1, 2, 3, 4, 16}) {
        CAPTURE(w);
        PassConfig cfg;
        cfg.window = w;
        CHECK(run_hoare(example_double_controlled_pair(), cfg).log.size() == (w >= 3 ? 2 : 0));
    }
    PassConfig zero;
    zero.window = 0;
    CHECK_THROWS(run_hoare(example_bell(), zero));
}

TEST_CASE("idempotence and monotone metrics on benchmarks") {
    std::vector<Circuit> cs = {build_renormalize(RenormParams::for_size(4)), build_modular_reduce(4),
                               map_lnn(build_cnot_chain(5), 5), example_double_controlled_pair(),
                               example_bell_swap()};
    for (const auto& c : cs) {
        PassResult once = compose(run_hoare(c), elide_alloc_dealloc(run_hoare(c).circuit));
        PassResult twice = run_hoare(once.circuit);
        CHECK(twice.log.empty());
        CHECK(width(once.circuit) <= width(c));
        CHECK(dag_depth(once.circuit) <= dag_depth(c));
        OptOutcome o = opt_pipeline(c);
        Circuit b = base_pipeline(c);
        CHECK(width(o.circuit) <= width(b));
        CHECK(dag_depth(o.circuit) <= dag_depth(b));
    }
}

TEST_CASE("random circuits: optimization preserves behaviour") {
    std::size_t removed = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        CAPTURE(seed);
        Circuit c = random_circuit(seed);
        PassResult r = run_hoare(c);
        removed += r.log.size();
        EquivalenceReport rep = equivalent(c, r.circuit);
        CAPTURE(rep.detail);
        CHECK(rep.common_phase);
        CHECK(r.unknown_queries == 0);
    }
    CHECK(removed > 20);
}
