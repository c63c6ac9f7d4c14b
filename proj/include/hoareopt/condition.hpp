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

// Predicates over SSA qubit variables.
//
// Two sorts exist: Bool and a 64-bit unsigned bitvector. A Bool term in
// bitvector position reads as the 1-bit value 0/1; a Num in Bool position
// reads as `value != 0`. All arithmetic wraps mod 2^64 and all comparisons
// are unsigned.

#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hoareopt/types.hpp"

namespace hoareopt {

enum class Op : std::uint8_t {
    // Bool sort.
    True,
    False,
    Atom,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    // Bitvector sort.
    Num,
    RegMsb,  // first argument is the most significant bit
    RegLsb,  // first argument is the least significant bit
    Shl,
    Shr,
    Add,
    Sub,
    Pow2,
};

bool is_bool_op(Op op);
std::string_view op_name(Op op);

class Condition {
  public:
    Condition();

    static Condition constant(bool value);
    static Condition atom(Var v);
    static Condition num(std::uint64_t value);
    /// Checks arity and register width; throws Error on violation.
    static Condition make(Op op, std::vector<Condition> args);

    Op op() const;
    const std::vector<Condition>& args() const;
    Var var() const;              // Atom only
    std::uint64_t value() const;  // Num only
    bool is_bool() const { return is_bool_op(op()); }

    /// Structural equality.
    bool operator==(const Condition& other) const;

    /// Identity of the shared node, stable for the lifetime of this value.
    const void* id() const { return node_.get(); }

  private:
    struct Node;
    explicit Condition(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

// Builders.
Condition operator!(const Condition& a);
Condition operator&&(const Condition& a, const Condition& b);
Condition operator||(const Condition& a, const Condition& b);
Condition all_of(std::vector<Condition> terms);  // empty -> true
Condition any_of(std::vector<Condition> terms);  // empty -> false
Condition implies(const Condition& a, const Condition& b);
Condition iff(const Condition& a, const Condition& b);
Condition eq(const Condition& a, const Condition& b);
Condition ne(const Condition& a, const Condition& b);
Condition lt(const Condition& a, const Condition& b);
Condition le(const Condition& a, const Condition& b);
Condition gt(const Condition& a, const Condition& b);
Condition ge(const Condition& a, const Condition& b);
Condition reg_msb(std::vector<Condition> bits);
Condition reg_lsb(std::vector<Condition> bits);
Condition shl(const Condition& a, const Condition& amount);
Condition shr(const Condition& a, const Condition& amount);
Condition add(const Condition& a, const Condition& b);
Condition sub(const Condition& a, const Condition& b);
Condition pow2(const Condition& e);
std::vector<Condition> atoms(const std::vector<Var>& vars);

/// Direct interpretation. `value` gives the boolean value of each atom.
using Assignment = std::function<bool(Var)>;
bool evaluate(const Condition& c, const Assignment& value);
std::uint64_t evaluate_bv(const Condition& c, const Assignment& value);

void collect_vars(const Condition& c, std::set<Var>& out);
std::set<Var> vars_of(const Condition& c);

/// Replaces every atom by `f(var)`.
Condition substitute(const Condition& c, const std::function<Condition(Var)>& f);

/// Atom naming for printing. Default prints `q<qubit>` for version 0 and
/// `q<qubit>_<version>` otherwise.
using VarNamer = std::function<std::string(Var)>;
std::string default_var_name(Var v);
std::string to_string(const Condition& c, const VarNamer& name = default_var_name);

/// SMT-LIB2 rendering. Bitvector terms become (_ BitVec 64).
std::string to_smt2(const Condition& c, const VarNamer& name);

/// Maps an identifier to an atom, or nullopt if unknown.
using NameResolver = std::function<std::optional<Var>(std::string_view)>;
/// Resolves `qN` to Var{N, 0}.
std::optional<Var> default_resolver(std::string_view name);

/// Parses s-expression, call-form, or top-level infix comparison syntax.
/// Throws ParseError (line 1, column = byte offset + 1).
Condition parse_condition(std::string_view text, const NameResolver& resolve = default_resolver);

}  // namespace hoareopt
