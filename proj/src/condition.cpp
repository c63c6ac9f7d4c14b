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

#include "hoareopt/condition.hpp"

#include <sstream>
#include <utility>

namespace hoareopt {

struct Condition::Node {
    Op op = Op::True;
    std::vector<Condition> args;
    Var var;
    std::uint64_t value = 0;
};

namespace {

// Only Num may stand in for a Bool; any Bool term may stand in for a bit.
bool usable_as_bool(const Condition& c) { return c.is_bool() || c.op() == Op::Num; }

}  // namespace

bool is_bool_op(Op op) { return op <= Op::Ge; }

std::string_view op_name(Op op) {
    switch (op) {
        case Op::True: return "true";
        case Op::False: return "false";
        case Op::Atom: return "atom";
        case Op::Not: return "not";
        case Op::And: return "and";
        case Op::Or: return "or";
        case Op::Implies: return "implies";
        case Op::Iff: return "iff";
        case Op::Eq: return "eq";
        case Op::Ne: return "ne";
        case Op::Lt: return "lt";
        case Op::Le: return "le";
        case Op::Gt: return "gt";
        case Op::Ge: return "ge";
        case Op::Num: return "num";
        case Op::RegMsb: return "reg_msb";
        case Op::RegLsb: return "reg_lsb";
        case Op::Shl: return "shl";
        case Op::Shr: return "shr";
        case Op::Add: return "add";
        case Op::Sub: return "sub";
        case Op::Pow2: return "pow2";
    }
    return "?";
}

Condition::Condition() : Condition(constant(true)) {}

Condition::Condition(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Condition Condition::constant(bool value) {
    static const Condition t(std::make_shared<const Node>(Node{Op::True, {}, {}, 0}));
    static const Condition f(std::make_shared<const Node>(Node{Op::False, {}, {}, 0}));
    return value ? t : f;
}

Condition Condition::atom(Var v) {
    return Condition(std::make_shared<const Node>(Node{Op::Atom, {}, v, 0}));
}

Condition Condition::num(std::uint64_t value) {
    return Condition(std::make_shared<const Node>(Node{Op::Num, {}, {}, value}));
}

Condition Condition::make(Op op, std::vector<Condition> args) {
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi) {
            throw Error(std::string(op_name(op)) + ": wrong number of arguments (" +
                        std::to_string(args.size()) + ")");
        }
    };
    switch (op) {
        case Op::True:
        case Op::False:
        case Op::Atom:
        case Op::Num:
            throw Error("Condition::make: leaf operator");
        case Op::Not:
        case Op::Pow2:
            need(1, 1);
            break;
        case Op::And:
        case Op::Or:
            need(1, SIZE_MAX);
            break;
        case Op::RegMsb:
        case Op::RegLsb:
            need(1, 64);
            break;
        default:
            need(2, 2);
            break;
    }
    switch (op) {
        case Op::Not:
        case Op::And:
        case Op::Or:
        case Op::Implies:
        case Op::Iff:
        case Op::RegMsb:
        case Op::RegLsb:
            for (const auto& a : args) {
                if (!usable_as_bool(a)) {
                    throw Error(std::string(op_name(op)) + ": bitvector term in boolean position");
                }
            }
            break;
        default:
            break;
    }
    return Condition(std::make_shared<const Node>(Node{op, std::move(args), {}, 0}));
}

Op Condition::op() const { return node_->op; }
const std::vector<Condition>& Condition::args() const { return node_->args; }
Var Condition::var() const { return node_->var; }
std::uint64_t Condition::value() const { return node_->value; }

bool Condition::operator==(const Condition& other) const {
    if (node_ == other.node_) return true;
    const Node& a = *node_;
    const Node& b = *other.node_;
    if (a.op != b.op || a.args.size() != b.args.size()) return false;
    if (a.op == Op::Atom) return a.var == b.var;
    if (a.op == Op::Num) return a.value == b.value;
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (!(a.args[i] == b.args[i])) return false;
    }
    return true;
}

Condition operator!(const Condition& a) { return Condition::make(Op::Not, {a}); }
Condition operator&&(const Condition& a, const Condition& b) { return Condition::make(Op::And, {a, b}); }
Condition operator||(const Condition& a, const Condition& b) { return Condition::make(Op::Or, {a, b}); }

Condition all_of(std::vector<Condition> terms) {
    if (terms.empty()) return Condition::constant(true);
    if (terms.size() == 1) return terms[0];
    return Condition::make(Op::And, std::move(terms));
}

Condition any_of(std::vector<Condition> terms) {
    if (terms.empty()) return Condition::constant(false);
    if (terms.size() == 1) return terms[0];
    return Condition::make(Op::Or, std::move(terms));
}

Condition implies(const Condition& a, const Condition& b) { return Condition::make(Op::Implies, {a, b}); }
Condition iff(const Condition& a, const Condition& b) { return Condition::make(Op::Iff, {a, b}); }
Condition eq(const Condition& a, const Condition& b) { return Condition::make(Op::Eq, {a, b}); }
Condition ne(const Condition& a, const Condition& b) { return Condition::make(Op::Ne, {a, b}); }
Condition lt(const Condition& a, const Condition& b) { return Condition::make(Op::Lt, {a, b}); }
Condition le(const Condition& a, const Condition& b) { return Condition::make(Op::Le, {a, b}); }
Condition gt(const Condition& a, const Condition& b) { return Condition::make(Op::Gt, {a, b}); }
Condition ge(const Condition& a, const Condition& b) { return Condition::make(Op::Ge, {a, b}); }
Condition reg_msb(std::vector<Condition> bits) { return Condition::make(Op::RegMsb, std::move(bits)); }
Condition reg_lsb(std::vector<Condition> bits) { return Condition::make(Op::RegLsb, std::move(bits)); }
Condition shl(const Condition& a, const Condition& amount) { return Condition::make(Op::Shl, {a, amount}); }
Condition shr(const Condition& a, const Condition& amount) { return Condition::make(Op::Shr, {a, amount}); }
Condition add(const Condition& a, const Condition& b) { return Condition::make(Op::Add, {a, b}); }
Condition sub(const Condition& a, const Condition& b) { return Condition::make(Op::Sub, {a, b}); }
Condition pow2(const Condition& e) { return Condition::make(Op::Pow2, {e}); }

std::vector<Condition> atoms(const std::vector<Var>& vars) {
    std::vector<Condition> out;
    out.reserve(vars.size());
    for (Var v : vars) out.push_back(Condition::atom(v));
    return out;
}

bool evaluate(const Condition& c, const Assignment& value) {
    const auto& a = c.args();
    switch (c.op()) {
        case Op::True: return true;
        case Op::False: return false;
        case Op::Atom: return value(c.var());
        case Op::Num: return c.value() != 0;
        case Op::Not: return !evaluate(a[0], value);
        case Op::And:
            for (const auto& x : a) {
                if (!evaluate(x, value)) return false;
            }
            return true;
        case Op::Or:
            for (const auto& x : a) {
                if (evaluate(x, value)) return true;
            }
            return false;
        case Op::Implies: return !evaluate(a[0], value) || evaluate(a[1], value);
        case Op::Iff: return evaluate(a[0], value) == evaluate(a[1], value);
        case Op::Eq: return evaluate_bv(a[0], value) == evaluate_bv(a[1], value);
        case Op::Ne: return evaluate_bv(a[0], value) != evaluate_bv(a[1], value);
        case Op::Lt: return evaluate_bv(a[0], value) < evaluate_bv(a[1], value);
        case Op::Le: return evaluate_bv(a[0], value) <= evaluate_bv(a[1], value);
        case Op::Gt: return evaluate_bv(a[0], value) > evaluate_bv(a[1], value);
        case Op::Ge: return evaluate_bv(a[0], value) >= evaluate_bv(a[1], value);
        default: throw Error("evaluate: bitvector term in boolean position");
    }
}

std::uint64_t evaluate_bv(const Condition& c, const Assignment& value) {
    if (c.is_bool()) return evaluate(c, value) ? 1 : 0;
    const auto& a = c.args();
    switch (c.op()) {
        case Op::Num: return c.value();
        case Op::RegMsb: {
            std::uint64_t r = 0;
            for (const auto& bit : a) r = (r << 1) | (evaluate(bit, value) ? 1 : 0);
            return r;
        }
        case Op::RegLsb: {
            std::uint64_t r = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (evaluate(a[i], value)) r |= std::uint64_t(1) << i;
            }
            return r;
        }
        case Op::Shl: {
            std::uint64_t x = evaluate_bv(a[0], value), s = evaluate_bv(a[1], value);
            return s >= 64 ? 0 : x << s;
        }
        case Op::Shr: {
            std::uint64_t x = evaluate_bv(a[0], value), s = evaluate_bv(a[1], value);
            return s >= 64 ? 0 : x >> s;
        }
        case Op::Add: return evaluate_bv(a[0], value) + evaluate_bv(a[1], value);
        case Op::Sub: return evaluate_bv(a[0], value) - evaluate_bv(a[1], value);
        case Op::Pow2: {
            std::uint64_t e = evaluate_bv(a[0], value);
            return e >= 64 ? 0 : std::uint64_t(1) << e;
        }
        default: throw Error("evaluate_bv: unexpected operator");
    }
}

void collect_vars(const Condition& c, std::set<Var>& out) {
    if (c.op() == Op::Atom) {
        out.insert(c.var());
        return;
    }
    for (const auto& a : c.args()) collect_vars(a, out);
}

std::set<Var> vars_of(const Condition& c) {
    std::set<Var> out;
    collect_vars(c, out);
    return out;
}

Condition substitute(const Condition& c, const std::function<Condition(Var)>& f) {
    switch (c.op()) {
        case Op::Atom: return f(c.var());
        case Op::True:
        case Op::False:
        case Op::Num: return c;
        default: break;
    }
    std::vector<Condition> args;
    args.reserve(c.args().size());
    for (const auto& a : c.args()) args.push_back(substitute(a, f));
    return Condition::make(c.op(), std::move(args));
}

std::string default_var_name(Var v) {
    std::string s = "q" + std::to_string(v.qubit);
    if (v.version != 0) s += "_" + std::to_string(v.version);
    return s;
}

namespace {

void print(const Condition& c, const VarNamer& name, std::ostream& os) {
    switch (c.op()) {
        case Op::True: os << "true"; return;
        case Op::False: os << "false"; return;
        case Op::Atom: os << name(c.var()); return;
        case Op::Num: os << c.value(); return;
        default: break;
    }
    os << '(' << op_name(c.op());
    for (const auto& a : c.args()) {
        os << ' ';
        print(a, name, os);
    }
    os << ')';
}

void smt_bv(const Condition& c, const VarNamer& name, std::ostream& os);

void smt_bool(const Condition& c, const VarNamer& name, std::ostream& os) {
    const auto& a = c.args();
    auto nary = [&](const char* head, bool bv_args) {
        os << '(' << head;
        for (const auto& x : a) {
            os << ' ';
            if (bv_args) {
                smt_bv(x, name, os);
            } else {
                smt_bool(x, name, os);
            }
        }
        os << ')';
    };
    switch (c.op()) {
        case Op::True: os << "true"; return;
        case Op::False: os << "false"; return;
        case Op::Atom: os << name(c.var()); return;
        case Op::Num: os << (c.value() != 0 ? "true" : "false"); return;
        case Op::Not: nary("not", false); return;
        case Op::And: nary("and", false); return;
        case Op::Or: nary("or", false); return;
        case Op::Implies: nary("=>", false); return;
        case Op::Iff: nary("=", false); return;
        case Op::Eq: nary("=", true); return;
        case Op::Ne: nary("distinct", true); return;
        case Op::Lt: nary("bvult", true); return;
        case Op::Le: nary("bvule", true); return;
        case Op::Gt: nary("bvugt", true); return;
        case Op::Ge: nary("bvuge", true); return;
        default: throw Error("to_smt2: bitvector term in boolean position");
    }
}

void smt_bv(const Condition& c, const VarNamer& name, std::ostream& os) {
    auto lit = [&](std::uint64_t v) { os << "(_ bv" << v << " 64)"; };
    auto bit = [&](const Condition& b, std::uint64_t weight) {
        os << "(ite ";
        smt_bool(b, name, os);
        os << ' ';
        lit(weight);
        os << ' ';
        lit(0);
        os << ')';
    };
    if (c.is_bool()) {
        bit(c, 1);
        return;
    }
    const auto& a = c.args();
    auto binary = [&](const char* head) {
        os << '(' << head << ' ';
        smt_bv(a[0], name, os);
        os << ' ';
        smt_bv(a[1], name, os);
        os << ')';
    };
    switch (c.op()) {
        case Op::Num: lit(c.value()); return;
        case Op::RegMsb:
        case Op::RegLsb: {
            const std::size_t k = a.size();
            if (k > 1) os << "(bvor";
            for (std::size_t i = 0; i < k; ++i) {
                std::size_t pos = c.op() == Op::RegLsb ? i : k - 1 - i;
                if (k > 1) os << ' ';
                bit(a[i], std::uint64_t(1) << pos);
            }
            if (k > 1) os << ')';
            return;
        }
        case Op::Shl: binary("bvshl"); return;
        case Op::Shr: binary("bvlshr"); return;
        case Op::Add: binary("bvadd"); return;
        case Op::Sub: binary("bvsub"); return;
        case Op::Pow2:
            os << "(bvshl ";
            lit(1);
            os << ' ';
            smt_bv(a[0], name, os);
            os << ')';
            return;
        default: throw Error("to_smt2: unexpected operator");
    }
}

}  // namespace

std::string to_string(const Condition& c, const VarNamer& name) {
    std::ostringstream os;
    print(c, name, os);
    return os.str();
}

std::string to_smt2(const Condition& c, const VarNamer& name) {
    std::ostringstream os;
    smt_bool(c, name, os);
    return os.str();
}

std::optional<Var> default_resolver(std::string_view name) {
    if (name.size() < 2 || name[0] != 'q') return std::nullopt;
    std::uint64_t id = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') return std::nullopt;
        id = id * 10 + std::uint64_t(name[i] - '0');
        if (id > UINT32_MAX) return std::nullopt;
    }
    return Var{QubitId(id), 0};
}

}  // namespace hoareopt
