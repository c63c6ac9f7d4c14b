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

#include <random>

#include "hoareopt/sat.hpp"
#include "hoareopt/symbolic_state.hpp"
#include "random_condition.hpp"

using namespace hoareopt;

namespace {

Condition q(QubitId id) { return Condition::atom(Var{id, 0}); }

SatResult solve(const std::vector<Condition>& assertions, const Condition& extra) {
    SymbolicState st;
    for (const auto& a : assertions) st.assert_condition(a);
    return st.check_sat(extra);
}

bool witness_ok(const SatResult& r, const std::vector<Condition>& assertions, const Condition& extra) {
    Assignment a = [&](Var v) {
        auto it = r.witness.find(v);
        return it != r.witness.end() && it->second;
    };
    for (const auto& c : assertions) {
        if (!evaluate(c, a)) return false;
    }
    return evaluate(extra, a);
}

}  // namespace

TEST_CASE("reference check_sat cases agree with brute force") {
    SUBCASE("v and not v") {
        CHECK(solve({}, q(0) && !q(0)).unsat());
        CHECK(brute_force_sat({}, q(0) && !q(0)).unsat());
    }
    SUBCASE("A_FO with p > 0 and leading one") {
        // x = q0..q3 MSB first, p = q4 (LSB), q5.
        Condition x = reg_msb({q(0), q(1), q(2), q(3)});
        Condition p = reg_lsb({q(4), q(5)});
        std::vector<Condition> as = {lt(x, shl(Condition::num(1), sub(Condition::num(4), p)))};
        Condition extra = gt(p, Condition::num(0)) && q(0);
        CHECK(solve(as, extra).unsat());
        CHECK(brute_force_sat(as, extra).unsat());
    }
    SUBCASE("a == b with a and b") {
        std::vector<Condition> as = {eq(q(0), q(1))};
        SatResult r = solve(as, q(0) && q(1));
        REQUIRE(r.sat());
        CHECK(r.witness.at(Var{0, 0}));
        CHECK(r.witness.at(Var{1, 0}));
        CHECK(brute_force_sat(as, q(0) && q(1)).sat());
    }
    SUBCASE("empty set, extra true") {
        CHECK(solve({}, Condition::constant(true)).sat());
        CHECK(brute_force_sat({}, Condition::constant(true)).sat());
    }
}

TEST_CASE("brute force refuses too many variables") {
    std::vector<Condition> bits;
    for (QubitId i = 0; i < 21; ++i) bits.push_back(q(i));
    CHECK_THROWS_AS(brute_force_sat({}, all_of(bits)), BudgetExceeded);
}

TEST_CASE("push and pop restore assertions") {
    SymbolicState st;
    st.assert_condition(q(0));
    st.push();
    st.assert_condition(!q(0));
    CHECK(st.check_sat(Condition::constant(true)).unsat());
    st.pop();
    CHECK(st.check_sat(Condition::constant(true)).sat());
    CHECK(st.check_sat(!q(0)).unsat());
    CHECK(st.assertions().size() == 1);
}

TEST_CASE("raw solver: pigeonhole 5 into 4 is unsat") {
    SatSolver s;
    int p[5][4];
    for (auto& row : p) {
        for (int& v : row) v = s.new_var();
    }
    for (auto& row : p) {
        std::vector<Lit> c;
        for (int v : row) c.push_back(Lit::make(v));
        s.add_clause(c);
    }
    for (int h = 0; h < 4; ++h) {
        for (int i = 0; i < 5; ++i) {
            for (int j = i + 1; j < 5; ++j) s.add_clause({Lit::make(p[i][h], true), Lit::make(p[j][h], true)});
        }
    }
    CHECK(s.solve() == SatStatus::Unsat);
}

TEST_CASE("raw solver: assumptions and failed core") {
    SatSolver s;
    int a = s.new_var(), b = s.new_var(), c = s.new_var();
    s.add_clause({Lit::make(a, true), Lit::make(b)});
    s.add_clause({Lit::make(b, true), Lit::make(c)});
    CHECK(s.solve({Lit::make(a), Lit::make(c, true)}) == SatStatus::Unsat);
    CHECK(!s.failed_assumptions().empty());
    CHECK(s.solve({Lit::make(a)}) == SatStatus::Sat);
    CHECK(s.model_value(c));
}

TEST_CASE("random conditions: check_sat matches brute force") {
    int sat = 0, unsat = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        int nv = 4 + int(seed % 9);  // up to 12 variables
        testing::RandomConditions gen(seed, nv);
        std::vector<Condition> as = {gen.boolean(3), gen.boolean(2)};
        Condition extra = gen.boolean(3);
        SatResult r = solve(as, extra);
        SatResult o = brute_force_sat(as, extra);
        CAPTURE(seed);
        REQUIRE_FALSE(r.unknown());
        CHECK(r.status == o.status);
        if (r.sat()) {
            CHECK(witness_ok(r, as, extra));
            ++sat;
        } else {
            ++unsat;
        }
    }
    // Both verdicts must be exercised for the comparison to mean anything.
    CHECK(sat > 100);
    CHECK(unsat > 100);
}
