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

#include "hoareopt/bitblast.hpp"

#include <utility>

namespace hoareopt {

BitBlaster::BitBlaster(SatSolver& solver) : solver_(solver) {
    true_ = Lit::make(solver_.new_var());
    solver_.add_clause({true_});
}

Lit BitBlaster::fresh() { return Lit::make(solver_.new_var()); }

Lit BitBlaster::var_lit(Var v) {
    auto it = vars_.find(v);
    if (it != vars_.end()) return it->second;
    Lit l = fresh();
    vars_.emplace(v, l);
    return l;
}

Lit BitBlaster::land(Lit a, Lit b) {
    if (a == false_lit() || b == false_lit() || a == ~b) return false_lit();
    if (a == true_) return b;
    if (b == true_ || a == b) return a;
    if (b.x < a.x) std::swap(a, b);
    std::uint64_t key = (std::uint64_t(a.x) << 32) | b.x;
    auto it = and_cache_.find(key);
    if (it != and_cache_.end()) return it->second;
    Lit g = fresh();
    solver_.add_clause({~g, a});
    solver_.add_clause({~g, b});
    solver_.add_clause({g, ~a, ~b});
    and_cache_.emplace(key, g);
    return g;
}

Lit BitBlaster::lxor(Lit a, Lit b) {
    if (a == false_lit()) return b;
    if (b == false_lit()) return a;
    if (a == true_) return ~b;
    if (b == true_) return ~a;
    if (a == b) return false_lit();
    if (a == ~b) return true_;
    bool flip = a.negated() != b.negated();
    a = Lit::make(a.var());
    b = Lit::make(b.var());
    if (b.x < a.x) std::swap(a, b);
    std::uint64_t key = (std::uint64_t(a.x) << 32) | b.x;
    Lit g;
    auto it = xor_cache_.find(key);
    if (it != xor_cache_.end()) {
        g = it->second;
    } else {
        g = fresh();
        solver_.add_clause({~g, a, b});
        solver_.add_clause({~g, ~a, ~b});
        solver_.add_clause({g, ~a, b});
        solver_.add_clause({g, a, ~b});
        xor_cache_.emplace(key, g);
    }
    return flip ? ~g : g;
}

Lit BitBlaster::ite(Lit s, Lit a, Lit b) {
    if (s == true_ || a == b) return a;
    if (s == false_lit()) return b;
    return lor(land(s, a), land(~s, b));
}

BitBlaster::Bits BitBlaster::constant(std::uint64_t v) const {
    Bits out;
    for (int i = 0; i < 64; ++i) out[std::size_t(i)] = ((v >> i) & 1) ? true_ : ~true_;
    return out;
}

BitBlaster::Bits BitBlaster::adder(const Bits& a, const Bits& b, Lit carry) {
    Bits out;
    for (std::size_t i = 0; i < 64; ++i) {
        Lit axb = lxor(a[i], b[i]);
        out[i] = lxor(axb, carry);
        carry = lor(land(a[i], b[i]), land(axb, carry));
    }
    return out;
}

BitBlaster::Bits BitBlaster::shift(const Bits& a, const Bits& amount, bool left) {
    Bits cur = a;
    for (int stage = 0; stage < 6; ++stage) {
        const Lit s = amount[std::size_t(stage)];
        if (s == false_lit()) continue;
        const int d = 1 << stage;
        Bits next;
        for (int i = 0; i < 64; ++i) {
            int src = left ? i - d : i + d;
            Lit shifted = (src >= 0 && src < 64) ? cur[std::size_t(src)] : false_lit();
            next[std::size_t(i)] = ite(s, shifted, cur[std::size_t(i)]);
        }
        cur = next;
    }
    Lit big = false_lit();
    for (std::size_t i = 6; i < 64; ++i) big = lor(big, amount[i]);
    for (auto& l : cur) l = land(~big, l);
    return cur;
}

Lit BitBlaster::equal(const Bits& a, const Bits& b) {
    Lit acc = true_;
    for (std::size_t i = 0; i < 64; ++i) acc = land(acc, ~lxor(a[i], b[i]));
    return acc;
}

Lit BitBlaster::less(const Bits& a, const Bits& b) {
    Lit lt = false_lit();
    for (std::size_t i = 0; i < 64; ++i) {
        lt = lor(land(~a[i], b[i]), land(~lxor(a[i], b[i]), lt));
    }
    return lt;
}

BitBlaster::Bits BitBlaster::bv(const Condition& c) {
    if (c.is_bool()) {
        Bits out = constant(0);
        out[0] = encode(c);
        return out;
    }
    if (c.op() == Op::Num) return constant(c.value());
    auto memo = bv_memo_.find(c.id());
    if (memo != bv_memo_.end()) return memo->second;

    const auto& a = c.args();
    Bits out = constant(0);
    switch (c.op()) {
        case Op::RegMsb:
            for (std::size_t j = 0; j < a.size(); ++j) out[a.size() - 1 - j] = encode(a[j]);
            break;
        case Op::RegLsb:
            for (std::size_t j = 0; j < a.size(); ++j) out[j] = encode(a[j]);
            break;
        case Op::Add:
            out = adder(bv(a[0]), bv(a[1]), false_lit());
            break;
        case Op::Sub: {
            Bits nb = bv(a[1]);
            for (auto& l : nb) l = ~l;
            out = adder(bv(a[0]), nb, true_);
            break;
        }
        case Op::Shl:
            out = shift(bv(a[0]), bv(a[1]), true);
            break;
        case Op::Shr:
            out = shift(bv(a[0]), bv(a[1]), false);
            break;
        case Op::Pow2:
            out = shift(constant(1), bv(a[0]), true);
            break;
        default:
            throw Error("bitblast: unexpected bitvector operator");
    }
    keep_alive_.push_back(c);
    bv_memo_.emplace(c.id(), out);
    return out;
}

Lit BitBlaster::encode(const Condition& c) {
    switch (c.op()) {
        case Op::True: return true_;
        case Op::False: return false_lit();
        case Op::Atom: return var_lit(c.var());
        case Op::Num: return c.value() != 0 ? true_ : false_lit();
        default: break;
    }
    auto memo = bool_memo_.find(c.id());
    if (memo != bool_memo_.end()) return memo->second;

    const auto& a = c.args();
    Lit out;
    switch (c.op()) {
        case Op::Not:
            out = ~encode(a[0]);
            break;
        case Op::And:
            out = true_;
            for (const auto& x : a) out = land(out, encode(x));
            break;
        case Op::Or:
            out = false_lit();
            for (const auto& x : a) out = lor(out, encode(x));
            break;
        case Op::Implies:
            out = lor(~encode(a[0]), encode(a[1]));
            break;
        case Op::Iff:
            out = ~lxor(encode(a[0]), encode(a[1]));
            break;
        case Op::Eq:
            out = equal(bv(a[0]), bv(a[1]));
            break;
        case Op::Ne:
            out = ~equal(bv(a[0]), bv(a[1]));
            break;
        case Op::Lt:
            out = less(bv(a[0]), bv(a[1]));
            break;
        case Op::Le:
            out = ~less(bv(a[1]), bv(a[0]));
            break;
        case Op::Gt:
            out = less(bv(a[1]), bv(a[0]));
            break;
        case Op::Ge:
            out = ~less(bv(a[0]), bv(a[1]));
            break;
        default:
            throw Error("bitblast: bitvector term in boolean position");
    }
    keep_alive_.push_back(c);
    bool_memo_.emplace(c.id(), out);
    return out;
}

}  // namespace hoareopt
