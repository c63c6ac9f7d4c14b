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

#include "hoareopt/symbolic_state.hpp"

namespace hoareopt {

SymbolicState::SymbolicState(std::uint64_t conflict_budget)
    : budget_(conflict_budget), blaster_(solver_), frames_(1) {}

Var SymbolicState::alloc(QubitId q) {
    if (current_.count(q) || retired_.count(q)) {
        throw Error("symbolic state: qubit q" + std::to_string(q) + " allocated twice");
    }
    Var v{q, 0};
    current_.emplace(q, v);
    return v;
}

void SymbolicState::release(QubitId q) {
    if (current_.erase(q) == 0) throw Error("symbolic state: release of dead qubit q" + std::to_string(q));
    retired_.insert(q);
}

Var SymbolicState::fresh(QubitId q) {
    auto it = current_.find(q);
    if (it == current_.end()) throw Error("symbolic state: fresh on dead qubit q" + std::to_string(q));
    ++it->second.version;
    return it->second;
}

Var SymbolicState::current(QubitId q) const {
    auto it = current_.find(q);
    if (it == current_.end()) throw Error("symbolic state: qubit q" + std::to_string(q) + " is not live");
    return it->second;
}

Condition SymbolicState::ctrls_one(const std::vector<QubitId>& controls) const {
    std::vector<Condition> terms;
    terms.reserve(controls.size());
    for (QubitId c : controls) terms.push_back(Condition::atom(current(c)));
    return all_of(std::move(terms));
}

void SymbolicState::set_transcript(std::ostream* os, VarNamer namer) {
    transcript_ = os;
    namer_ = std::move(namer);
}

void SymbolicState::declare(const Condition& c) {
    if (!transcript_) return;
    for (Var v : vars_of(c)) {
        if (declared_.insert(v).second) *transcript_ << "(declare-const " << namer_(v) << " Bool)\n";
    }
}

void SymbolicState::push() {
    frames_.emplace_back();
    if (transcript_) *transcript_ << "(push 1)\n";
}

void SymbolicState::pop() {
    if (frames_.size() == 1) throw Error("symbolic state: pop without push");
    for (Lit s : frames_.back().selectors) solver_.add_clause({~s});
    frames_.pop_back();
    if (transcript_) *transcript_ << "(pop 1)\n";
}

void SymbolicState::assert_condition(const Condition& c) {
    Lit l = blaster_.encode(c);
    Lit s = Lit::make(solver_.new_var());
    solver_.add_clause({~s, l});
    frames_.back().conditions.push_back(c);
    frames_.back().selectors.push_back(s);
    if (transcript_) {
        declare(c);
        *transcript_ << "(assert " << to_smt2(c, namer_) << ")\n";
    }
}

std::vector<Condition> SymbolicState::assertions() const {
    std::vector<Condition> out;
    for (const auto& f : frames_) out.insert(out.end(), f.conditions.begin(), f.conditions.end());
    return out;
}

SatResult SymbolicState::check_sat(const Condition& extra) {
    ++queries_;
    Lit e = blaster_.encode(extra);
    Lit t = Lit::make(solver_.new_var());
    solver_.add_clause({~t, e});
    std::vector<Lit> assumptions;
    for (const auto& f : frames_) assumptions.insert(assumptions.end(), f.selectors.begin(), f.selectors.end());
    assumptions.push_back(t);

    SatResult r;
    r.status = solver_.solve(assumptions, budget_);
    if (r.sat()) {
        for (const auto& [v, l] : blaster_.var_lits()) r.witness[v] = solver_.model_value(l.var()) != l.negated();
    } else if (r.unsat()) {
        for (Lit l : solver_.failed_assumptions()) {
            if (l != t) ++r.core_size;
        }
    }
    solver_.add_clause({~t});

    if (transcript_) {
        declare(extra);
        *transcript_ << "(push 1)\n(assert " << to_smt2(extra, namer_) << ")\n(check-sat)\n(pop 1)\n";
        *transcript_ << "; " << (r.sat() ? "sat" : r.unsat() ? "unsat" : "unknown") << "\n";
    }
    return r;
}

SatResult brute_force_sat(const std::vector<Condition>& assertions, const Condition& extra,
                          std::size_t max_vars) {
    std::set<Var> vs;
    for (const auto& a : assertions) collect_vars(a, vs);
    collect_vars(extra, vs);
    if (vs.size() > max_vars) {
        throw BudgetExceeded("brute_force_sat: " + std::to_string(vs.size()) + " variables exceed budget " +
                             std::to_string(max_vars));
    }
    std::vector<Var> order(vs.begin(), vs.end());
    std::map<Var, std::size_t> index;
    for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;

    SatResult r;
    r.status = SatStatus::Unsat;
    const std::uint64_t total = std::uint64_t(1) << order.size();
    for (std::uint64_t m = 0; m < total; ++m) {
        Assignment value = [&](Var v) { return ((m >> index.at(v)) & 1) != 0; };
        bool ok = evaluate(extra, value);
        for (std::size_t i = 0; ok && i < assertions.size(); ++i) ok = evaluate(assertions[i], value);
        if (ok) {
            r.status = SatStatus::Sat;
            for (std::size_t i = 0; i < order.size(); ++i) r.witness[order[i]] = ((m >> i) & 1) != 0;
            return r;
        }
    }
    return r;
}

}  // namespace hoareopt
