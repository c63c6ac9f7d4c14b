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

// Tseitin encoding of Conditions into a SatSolver. Bitvector terms are
// blasted to 64 literals; gates are constant-folded and structurally hashed.

#pragma once

#include <array>
#include <unordered_map>
#include <vector>

#include "hoareopt/condition.hpp"
#include "hoareopt/sat.hpp"

namespace hoareopt {

class BitBlaster {
  public:
    explicit BitBlaster(SatSolver& solver);

    Lit true_lit() const { return true_; }
    Lit false_lit() const { return ~true_; }

    /// Literal of an SSA variable, created on first use.
    Lit var_lit(Var v);
    const std::unordered_map<Var, Lit, VarHash>& var_lits() const { return vars_; }

    /// Literal equivalent to the Bool condition `c`.
    Lit encode(const Condition& c);

  private:
    using Bits = std::array<Lit, 64>;

    Lit land(Lit a, Lit b);
    Lit lor(Lit a, Lit b) { return ~land(~a, ~b); }
    Lit lxor(Lit a, Lit b);
    Lit ite(Lit s, Lit a, Lit b);
    Lit fresh();

    Bits bv(const Condition& c);
    Bits constant(std::uint64_t v) const;
    Bits adder(const Bits& a, const Bits& b, Lit carry_in);
    Bits shift(const Bits& a, const Bits& amount, bool left);
    Lit equal(const Bits& a, const Bits& b);
    Lit less(const Bits& a, const Bits& b);

    SatSolver& solver_;
    Lit true_;
    std::unordered_map<Var, Lit, VarHash> vars_;
    std::unordered_map<std::uint64_t, Lit> and_cache_;
    std::unordered_map<std::uint64_t, Lit> xor_cache_;
    std::unordered_map<const void*, Lit> bool_memo_;
    std::unordered_map<const void*, Bits> bv_memo_;
    std::vector<Condition> keep_alive_;
};

}  // namespace hoareopt
