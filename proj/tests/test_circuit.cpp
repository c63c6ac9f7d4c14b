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
#include <map>
#include <random>

#include "hoareopt/bench.hpp"
#include "hoareopt/benchmarks.hpp"
#include "hoareopt/circuit.hpp"
#include "hoareopt/gates.hpp"

using namespace hoareopt;

namespace {

// Level scheduling: each gate sits one level above the latest gate that
// last used any of its qubits.
int level_depth(const Circuit& c) {
    std::map<QubitId, int> level;
    int best = 0;
    for (const auto& ins : c.instructions()) {
        if (!ins.is_gate()) continue;
        int l = 0;
        for (QubitId qb : ins.qubits()) l = std::max(l, level[qb]);
        for (QubitId qb : ins.qubits()) level[qb] = l + 1;
        best = std::max(best, l + 1);
    }
    return best;
}

int live_width(const Circuit& c) {
    int live = int(c.inputs().size()), best = live;
    for (const auto& ins : c.instructions()) {
        if (ins.op == OpKind::Alloc) best = std::max(best, ++live);
        if (ins.op == OpKind::Dealloc) --live;
    }
    return best;
}

Circuit random_circuit(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t n) { return std::size_t(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)); };
    Circuit c;
    std::vector<QubitId> live;
    for (int i = 0; i < 3; ++i) live.push_back(c.add_input("in" + std::to_string(i)));
    int next = 0;
    for (int step = 0; step < 40; ++step) {
        std::size_t r = pick(10);
        if (r == 0) {
            live.push_back(c.alloc("w" + std::to_string(next++)));
        } else if (r == 1 && live.size() > 3) {
            std::size_t k = pick(live.size());
            c.dealloc(live[k]);
            live.erase(live.begin() + long(k));
        } else {
            std::vector<QubitId> pool = live;
            std::shuffle(pool.begin(), pool.end(), rng);
            GateKind g = kAllGates[pick(kAllGates.size())];
            std::size_t arity = std::size_t(gate_arity(g));
            if (pool.size() < arity) continue;
            std::size_t nc = std::min(pick(3), pool.size() - arity);
            std::vector<QubitId> ctl(pool.begin(), pool.begin() + long(nc));
            std::vector<QubitId> tgt(pool.begin() + long(nc), pool.begin() + long(nc + arity));
            c.gate(g, ctl, tgt);
        }
    }
    c.add_assert(eq(Condition::atom(Var{live[0], 0}), Condition::atom(Var{live[1], 0})) ||
                 lt(reg_msb(atoms({Var{live[0], 0}, Var{live[2], 0}})), Condition::num(2)));
    return c;
}

}  // namespace

TEST_CASE("Bell circuit metrics") {
    Circuit bell = parse_circuit("alloc q0\nalloc q1\nh q0\ncx q0 q1\n");
    CHECK(validate(bell).empty());
    CHECK(width(bell) == 2);
    CHECK(dag_depth(bell) == 2);
    CHECK(gate_counts(bell) == std::map<std::string, int>{{"cx", 1}, {"h", 1}});
    CHECK(bell == example_bell());
}

TEST_CASE("Bell with measure and dealloc is well formed") {
    Circuit c = parse_circuit("alloc q0\nalloc q1\nh q0\ncx q0 q1\nmeasure q0\nmeasure q1\ndealloc q0\ndealloc q1\n");
    CHECK(validate(c).empty());
    CHECK(dag_depth(c) == 2);
}

TEST_CASE("validation rules") {
    SUBCASE("use after dealloc") {
        Circuit c;
        QubitId a = c.alloc("a"), b = c.alloc("b");
        c.dealloc(a);
        c.cx(a, b);
        auto v = validate(c);
        REQUIRE(!v.empty());
        CHECK(v[0].rule == "use-after-dealloc");
        CHECK(v[0].index == 3);
        CHECK_THROWS_AS(parse_circuit("alloc a\nalloc b\ndealloc a\ncx a b\n"), Error);
    }
    SUBCASE("overlap") {
        Circuit c;
        QubitId a = c.alloc("a");
        c.cx(a, a);
        auto v = validate(c);
        REQUIRE(!v.empty());
        CHECK(v[0].rule == "overlap");
        CHECK(v[0].index == 1);
        CHECK_THROWS_AS(require_valid(c), InvalidCircuit);
    }
    SUBCASE("cx q0 q0 in text") {
        CHECK_THROWS_AS(parse_circuit("alloc q0\ncx q0 q0\n"), Error);
    }
}

TEST_CASE("parse errors report the line") {
    try {
        parse_circuit("alloc a\n# fine\nfrob a\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_circuit("alloc a\ncx a b\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("alloc a\ncx a\n"), ParseError);
}

TEST_CASE("chain gate counts") {
    CHECK(gate_counts(build_cnot_chain(4)) == std::map<std::string, int>{{"cx", 3}, {"h", 1}});
    Circuit lnn = base_pipeline(map_lnn(build_cnot_chain(4), 4));
    CHECK(gate_counts(lnn)["cx"] == 3 + 4 * (4 - 2));
    CHECK(gate_counts(lnn)["h"] == 1);
}

TEST_CASE("modular reduction width n=4 after decomposition") {
    CHECK(width(decompose_circuit(build_modular_reduce(4))) == 11);
}

TEST_CASE("renormalization width drops by the ancilla count") {
    RenormParams rp = RenormParams::for_size(4);
    Circuit c = build_renormalize(rp);
    Circuit opt = run_shift_optimization(c).circuit;
    CHECK(width(c) == width(opt) + 3);
}

TEST_CASE("round trip on benchmark circuits") {
    std::vector<Circuit> cs = {build_renormalize(RenormParams::for_size(4)), build_renormalize(RenormParams::for_size(8)),
                               build_cnot_chain(5), map_lnn(build_cnot_chain(6), 6), build_modular_reduce(4),
                               decompose_circuit(build_modular_reduce(4)), example_double_controlled_pair()};
    for (const auto& c : cs) {
        std::string text = serialize(c);
        Circuit back = parse_circuit(text);
        CHECK(back == c);
        CHECK(serialize(back) == text);
        CHECK(width(back) == width(c));
        CHECK(dag_depth(back) == dag_depth(c));
    }
}

TEST_CASE("random circuits: round trip, depth and width oracles, removal monotone") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        CAPTURE(seed);
        Circuit c = random_circuit(seed);
        REQUIRE(validate(c).empty());
        Circuit back = parse_circuit(serialize(c));
        CHECK(back == c);
        CHECK(dag_depth(c) == level_depth(c));
        CHECK(width(c) == live_width(c));
        for (std::size_t i = 0; i < c.instructions().size(); ++i) {
            if (!c.instructions()[i].is_gate()) continue;
            auto ins = c.instructions();
            ins.erase(ins.begin() + long(i));
            Circuit d = c.with_instructions(ins);
            CHECK(dag_depth(d) <= dag_depth(c));
            CHECK(width(d) <= width(c));
        }
    }
}
