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

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <unordered_map>
#include <vector>

#include "hoareopt/bitblast.hpp"
#include "hoareopt/condition.hpp"
#include "hoareopt/sat.hpp"

namespace hoareopt {

struct SatResult {
    SatStatus status = SatStatus::Unknown;
    std::map<Var, bool> witness;  // Sat only
    std::size_t core_size = 0;    // Unsat only: stacked assertions used by the refutation

    bool sat() const { return status == SatStatus::Sat; }
    bool unsat() const { return status == SatStatus::Unsat; }
    bool unknown() const { return status == SatStatus::Unknown; }
};

constexpr std::uint64_t kDefaultConflictBudget = 1'000'000;

/// Current SSA variable per live qubit plus a push/pop stack of assertions,
/// decided incrementally by the built-in CDCL solver.
class SymbolicState {
  public:
    explicit SymbolicState(std::uint64_t conflict_budget = kDefaultConflictBudget);

    /// Makes `q` live at version 0. Throws if `q` was ever live before.
    Var alloc(QubitId q);
    void release(QubitId q);
    /// Next version of a live qubit.
    Var fresh(QubitId q);
    Var current(QubitId q) const;
    bool is_live(QubitId q) const { return current_.count(q) != 0; }

    /// Conjunction of the current variables of `controls`; true if empty.
    Condition ctrls_one(const std::vector<QubitId>& controls) const;

    void push();
    void pop();
    std::size_t depth() const { return frames_.size() - 1; }
    void assert_condition(const Condition& c);
    const std::vector<Condition>& frame(std::size_t i) const { return frames_[i].conditions; }
    std::vector<Condition> assertions() const;

    /// Satisfiability of all stacked assertions and `extra`.
    SatResult check_sat(const Condition& extra);

    std::uint64_t queries() const { return queries_; }

    /// Mirrors every declaration, assertion, push/pop and query as SMT-LIB2.
    void set_transcript(std::ostream* os, VarNamer namer = default_var_name);

  private:
    struct Frame {
        std::vector<Condition> conditions;
        std::vector<Lit> selectors;
    };

    void declare(const Condition& c);

    std::uint64_t budget_;
    SatSolver solver_;
    BitBlaster blaster_;
    std::unordered_map<QubitId, Var> current_;
    std::set<QubitId> retired_;
    std::vector<Frame> frames_;
    std::uint64_t queries_ = 0;
    std::ostream* transcript_ = nullptr;
    VarNamer namer_ = default_var_name;
    std::set<Var> declared_;
};

/// Exhaustive enumeration over the free variables of assertions and extra,
/// evaluated by direct interpretation. Throws BudgetExceeded above max_vars.
SatResult brute_force_sat(const std::vector<Condition>& assertions, const Condition& extra,
                          std::size_t max_vars = 20);

}  // namespace hoareopt
