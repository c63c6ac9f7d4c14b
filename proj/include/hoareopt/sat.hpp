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

// Conflict-driven clause-learning SAT solver: two watched literals, first-UIP
// learning, VSIDS branching with phase saving, Luby restarts and
// assumption-based incremental solving.

#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace hoareopt {

struct Lit {
    std::uint32_t x = 0;

    static Lit make(int var, bool negated = false) {
        return Lit{std::uint32_t(var) * 2 + (negated ? 1u : 0u)};
    }
    int var() const { return int(x >> 1); }
    bool negated() const { return (x & 1) != 0; }
    Lit operator~() const { return Lit{x ^ 1u}; }
    bool operator==(const Lit& o) const { return x == o.x; }
    bool operator!=(const Lit& o) const { return x != o.x; }
};

enum class SatStatus { Sat, Unsat, Unknown };

class SatSolver {
  public:
    SatSolver();

    int new_var();
    int num_vars() const { return int(assigns_.size()); }

    /// Adds a permanent clause. Must be called between solves. Returns false
    /// once the clause set is unsatisfiable without assumptions.
    bool add_clause(std::vector<Lit> lits);

    /// Solves under `assumptions`. Unknown when more than `conflict_budget`
    /// conflicts occur in this call.
    SatStatus solve(const std::vector<Lit>& assumptions = {},
                    std::uint64_t conflict_budget = std::numeric_limits<std::uint64_t>::max());

    /// Value of `var` in the last satisfying assignment.
    bool model_value(int var) const { return model_[std::size_t(var)]; }

    /// After an Unsat answer: the assumptions involved in the refutation.
    const std::vector<Lit>& failed_assumptions() const { return core_; }

    bool okay() const { return ok_; }
    std::uint64_t total_conflicts() const { return total_conflicts_; }

  private:
    struct Clause {
        std::vector<Lit> lits;
        double activity = 0;
        bool learnt = false;
        bool deleted = false;
    };
    struct Watcher {
        std::uint32_t cref;
        Lit blocker;
    };
    static constexpr std::uint32_t kNoReason = std::numeric_limits<std::uint32_t>::max();

    std::int8_t value(Lit l) const {
        std::int8_t v = assigns_[std::size_t(l.var())];
        return l.negated() ? std::int8_t(-v) : v;
    }
    int level() const { return int(trail_lim_.size()); }

    void enqueue(Lit l, std::uint32_t reason);
    void attach(std::uint32_t cref);
    std::uint32_t propagate();
    void analyze(std::uint32_t confl, std::vector<Lit>& learnt, int& back_level);
    bool redundant(Lit l) const;
    void analyze_final(Lit p);
    void cancel_until(int lvl);
    int pick_branch();
    void bump_var(int v);
    void bump_clause(Clause& c);
    void reduce_db();
    bool locked(std::uint32_t cref) const;

    // Order heap keyed by activity.
    void heap_insert(int v);
    void heap_up(std::size_t i);
    void heap_down(std::size_t i);
    int heap_pop();
    bool heap_less(int a, int b) const { return activity_[std::size_t(a)] > activity_[std::size_t(b)]; }

    bool ok_ = true;
    std::vector<Clause> clauses_;
    std::vector<std::vector<Watcher>> watches_;
    std::vector<std::int8_t> assigns_;
    std::vector<int> levels_;
    std::vector<std::uint32_t> reasons_;
    std::vector<bool> polarity_;
    std::vector<double> activity_;
    std::vector<char> seen_;
    std::vector<Lit> trail_;
    std::vector<int> trail_lim_;
    std::size_t qhead_ = 0;
    std::vector<int> heap_;
    std::vector<int> heap_index_;
    double var_inc_ = 1.0;
    double clause_inc_ = 1.0;
    std::size_t num_learnts_ = 0;
    double max_learnts_ = 0;
    std::vector<bool> model_;
    std::vector<Lit> core_;
    std::uint64_t total_conflicts_ = 0;
};

}  // namespace hoareopt
