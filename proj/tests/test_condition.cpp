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

#include "hoareopt/condition.hpp"
#include "hoareopt/symbolic_state.hpp"

using namespace hoareopt;

namespace {

Condition q(QubitId id, std::uint32_t version = 0) { return Condition::atom(Var{id, version}); }

std::optional<Var> xp_resolver(std::string_view name) {
    if (name.size() == 2 && name[0] == 'x') return Var{QubitId(name[1] - '0'), 0};
    if (name.size() == 2 && name[0] == 'p') return Var{QubitId(10 + name[1] - '0'), 0};
    return std::nullopt;
}

Assignment bits_of(std::uint64_t word) {
    return [word](Var v) { return ((word >> v.qubit) & 1) != 0; };
}

}  // namespace

TEST_CASE("construction checks arity") {
    CHECK(all_of({}) == Condition::constant(true));
    CHECK(any_of({}) == Condition::constant(false));
    CHECK(all_of({q(2)}) == q(2));
    CHECK_THROWS_AS(Condition::make(Op::Not, {}), Error);
    CHECK_THROWS_AS(Condition::make(Op::Lt, {q(0)}), Error);
    CHECK_THROWS_AS(Condition::make(Op::Atom, {}), Error);
}

TEST_CASE("evaluation of bitvector terms") {
    Condition x = reg_msb({q(0), q(1), q(2)});
    Condition y = reg_lsb({q(0), q(1), q(2)});
    // q0=1, q1=1, q2=0
    Assignment a = bits_of(0b011);
    CHECK(evaluate_bv(x, a) == 6);
    CHECK(evaluate_bv(y, a) == 3);
    CHECK(evaluate_bv(shl(Condition::num(1), Condition::num(5)), a) == 32);
    CHECK(evaluate_bv(shr(x, Condition::num(1)), a) == 3);
    CHECK(evaluate_bv(sub(Condition::num(2), Condition::num(3)), a) == UINT64_MAX);
    CHECK(evaluate_bv(pow2(y), a) == 8);
    CHECK(evaluate(lt(y, x), a));
    CHECK(evaluate(ne(x, y), a));
    CHECK_FALSE(evaluate(ge(y, x), a));
}

TEST_CASE("parse reference conditions") {
    SUBCASE("A_FO for n=4") {
        Condition c = parse_condition("reg_msb(x0,x1,x2,x3) < shl(1, sub(4, reg_lsb(p0,p1)))", xp_resolver);
        for (std::uint64_t x = 0; x < 16; ++x) {
            for (std::uint64_t p = 0; p < 4; ++p) {
                Assignment a = [&](Var v) {
                    if (v.qubit >= 10) return ((p >> (v.qubit - 10)) & 1) != 0;
                    return ((x >> (3 - v.qubit)) & 1) != 0;
                };
                CHECK(evaluate(c, a) == (x < (std::uint64_t(1) << (4 - p))));
            }
        }
    }
    SUBCASE("Bell postcondition") {
        CHECK(parse_condition("eq(q0, q1)") == eq(q(0), q(1)));
    }
    SUBCASE("definite zero") {
        Condition c = parse_condition("eq(q0, 0)");
        CHECK(evaluate(c, bits_of(0)));
        CHECK_FALSE(evaluate(c, bits_of(1)));
    }
    SUBCASE("s-expression form") {
        Condition c = parse_condition("(and (implies q1 q2) (not q3))");
        CHECK(c == (implies(q(1), q(2)) && !q(3)));
    }
}

TEST_CASE("printer round trip") {
    std::vector<Condition> cs = {
        eq(q(0), q(1)),
        implies(q(0) && q(2), iff(q(1), !q(3))),
        lt(reg_msb({q(0), q(1)}), shl(Condition::num(1), sub(Condition::num(4), reg_lsb({q(2), q(3)})))),
        ge(add(reg_lsb({q(4)}), pow2(Condition::num(2))), Condition::num(3)),
    };
    for (const auto& c : cs) {
        CAPTURE(to_string(c));
        CHECK(parse_condition(to_string(c)) == c);
    }
}

TEST_CASE("parse errors carry a position") {
    try {
        parse_condition("(and q0 ");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() > 0);
    }
    CHECK_THROWS_AS(parse_condition("(frobnicate q0)"), ParseError);
    CHECK_THROWS_AS(parse_condition("y7"), ParseError);
}

TEST_CASE("substitute and vars_of") {
    Condition c = q(0) && eq(q(1), q(2));
    Condition s = substitute(c, [](Var v) { return Condition::atom(Var{v.qubit, v.version + 1}); });
    CHECK(vars_of(s) == std::set<Var>{{0, 1}, {1, 1}, {2, 1}});
}

TEST_CASE("smt2 rendering declares nothing and names atoms") {
    std::string s = to_smt2(q(0) && !q(1, 2), default_var_name);
    CHECK(s.find("q0") != std::string::npos);
    CHECK(s.find("q1_2") != std::string::npos);
    CHECK(s.find("and") != std::string::npos);
}

TEST_CASE("fresh and ctrls_one") {
    SymbolicState st;
    Var v0 = st.alloc(0);
    CHECK(v0 == Var{0, 0});
    CHECK(st.fresh(0) == Var{0, 1});
    CHECK(st.fresh(0) == Var{0, 2});
    Var c1 = st.alloc(1), c2 = st.alloc(2);
    CHECK(st.ctrls_one({}) == Condition::constant(true));
    CHECK(st.ctrls_one({1}) == Condition::atom(c1));
    CHECK(st.ctrls_one({1, 2}) == (Condition::atom(c1) && Condition::atom(c2)));
    st.release(0);
    CHECK_THROWS(st.fresh(0));
    CHECK_THROWS(st.alloc(0));
}
