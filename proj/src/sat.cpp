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

#include "hoareopt/sat.hpp"

#include <algorithm>

namespace hoareopt {
namespace {

constexpr double kVarDecay = 0.95;
constexpr double kClauseDecay = 0.999;
constexpr std::uint64_t kRestartUnit = 100;

// Luby sequence 1 1 2 1 1 2 4 1 1 2 ...
std::uint64_t luby(std::uint64_t i) {
    std::uint64_t size = 1, seq = 0;
    while (size < i + 1) {
        ++seq;
        size = 2 * size + 1;
    }
    while (size - 1 != i) {
        size = (size - 1) >> 1;
        --seq;
        i = i % size;
    }
    return std::uint64_t(1) << seq;
}

}  // namespace

SatSolver::SatSolver() : max_learnts_(2000) {}

int SatSolver::new_var() {
    int v = num_vars();
    assigns_.push_back(0);
    levels_.push_back(0);
    reasons_.push_back(kNoReason);
    polarity_.push_back(false);
    activity_.push_back(0);
    seen_.push_back(0);
    heap_index_.push_back(-1);
    watches_.emplace_back();
    watches_.emplace_back();
    heap_insert(v);
    return v;
}

void SatSolver::enqueue(Lit l, std::uint32_t reason) {
    std::size_t v = std::size_t(l.var());
    assigns_[v] = l.negated() ? -1 : 1;
    levels_[v] = level();
    reasons_[v] = reason;
    trail_.push_back(l);
}

void SatSolver::attach(std::uint32_t cref) {
    const Clause& c = clauses_[cref];
    watches_[(~c.lits[0]).x].push_back({cref, c.lits[1]});
    watches_[(~c.lits[1]).x].push_back({cref, c.lits[0]});
}

bool SatSolver::add_clause(std::vector<Lit> lits) {
    if (!ok_) return false;
    std::sort(lits.begin(), lits.end(), [](Lit a, Lit b) { return a.x < b.x; });
    std::vector<Lit> out;
    for (std::size_t i = 0; i < lits.size(); ++i) {
        Lit l = lits[i];
        if (i > 0 && l == lits[i - 1]) continue;
        if (i > 0 && l == ~lits[i - 1]) return true;
        std::int8_t v = value(l);
        if (v == 1) return true;
        if (v == 0) out.push_back(l);
    }
    if (out.empty()) {
        ok_ = false;
        return false;
    }
    if (out.size() == 1) {
        enqueue(out[0], kNoReason);
        if (propagate() != kNoReason) ok_ = false;
        return ok_;
    }
    clauses_.push_back(Clause{std::move(out), 0, false, false});
    attach(std::uint32_t(clauses_.size() - 1));
    return true;
}

std::uint32_t SatSolver::propagate() {
    std::uint32_t confl = kNoReason;
    while (qhead_ < trail_.size()) {
        Lit p = trail_[qhead_++];
        Lit false_lit = ~p;
        std::vector<Watcher>& ws = watches_[p.x];
        std::size_t i = 0, j = 0;
        while (i < ws.size()) {
            Watcher w = ws[i++];
            if (value(w.blocker) == 1) {
                ws[j++] = w;
                continue;
            }
            Clause& c = clauses_[w.cref];
            if (c.deleted) continue;
            if (c.lits[0] == false_lit) std::swap(c.lits[0], c.lits[1]);
            Lit first = c.lits[0];
            if (first != w.blocker && value(first) == 1) {
                ws[j++] = {w.cref, first};
                continue;
            }
            bool moved = false;
            for (std::size_t k = 2; k < c.lits.size(); ++k) {
                if (value(c.lits[k]) != -1) {
                    std::swap(c.lits[1], c.lits[k]);
                    watches_[(~c.lits[1]).x].push_back({w.cref, first});
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            ws[j++] = {w.cref, first};
            if (value(first) == -1) {
                confl = w.cref;
                qhead_ = trail_.size();
                while (i < ws.size()) ws[j++] = ws[i++];
            } else {
                enqueue(first, w.cref);
            }
        }
        ws.resize(j);
        if (confl != kNoReason) break;
    }
    return confl;
}

bool SatSolver::redundant(Lit l) const {
    std::uint32_t r = reasons_[std::size_t(l.var())];
    if (r == kNoReason) return false;
    const Clause& c = clauses_[r];
    for (std::size_t k = 1; k < c.lits.size(); ++k) {
        std::size_t v = std::size_t(c.lits[k].var());
        if (!seen_[v] && levels_[v] > 0) return false;
    }
    return true;
}

void SatSolver::analyze(std::uint32_t confl, std::vector<Lit>& learnt, int& back_level) {
    learnt.clear();
    learnt.push_back(Lit{});
    int path = 0;
    bool have_p = false;
    Lit p;
    std::size_t idx = trail_.size();
    std::uint32_t cref = confl;
    do {
        Clause& c = clauses_[cref];
        if (c.learnt) bump_clause(c);
        for (std::size_t j = have_p ? 1 : 0; j < c.lits.size(); ++j) {
            Lit q = c.lits[j];
            std::size_t v = std::size_t(q.var());
            if (!seen_[v] && levels_[v] > 0) {
                bump_var(int(v));
                seen_[v] = 1;
                if (levels_[v] >= level()) {
                    ++path;
                } else {
                    learnt.push_back(q);
                }
            }
        }
        while (!seen_[std::size_t(trail_[idx - 1].var())]) --idx;
        p = trail_[--idx];
        have_p = true;
        cref = reasons_[std::size_t(p.var())];
        seen_[std::size_t(p.var())] = 0;
        --path;
    } while (path > 0);
    learnt[0] = ~p;

    std::vector<Lit> to_clear(learnt.begin() + 1, learnt.end());
    std::size_t keep = 1;
    for (std::size_t i = 1; i < learnt.size(); ++i) {
        if (!redundant(learnt[i])) learnt[keep++] = learnt[i];
    }
    learnt.resize(keep);

    back_level = 0;
    if (learnt.size() > 1) {
        std::size_t max_i = 1;
        for (std::size_t i = 2; i < learnt.size(); ++i) {
            if (levels_[std::size_t(learnt[i].var())] > levels_[std::size_t(learnt[max_i].var())]) max_i = i;
        }
        std::swap(learnt[1], learnt[max_i]);
        back_level = levels_[std::size_t(learnt[1].var())];
    }
    for (Lit l : to_clear) seen_[std::size_t(l.var())] = 0;
}

void SatSolver::analyze_final(Lit p) {
    core_.clear();
    core_.push_back(p);
    if (level() == 0) return;
    seen_[std::size_t(p.var())] = 1;
    for (std::size_t i = trail_.size(); i > std::size_t(trail_lim_[0]); --i) {
        Lit l = trail_[i - 1];
        std::size_t v = std::size_t(l.var());
        if (!seen_[v]) continue;
        if (reasons_[v] == kNoReason) {
            if (levels_[v] > 0) core_.push_back(l);
        } else {
            const Clause& c = clauses_[reasons_[v]];
            for (std::size_t k = 1; k < c.lits.size(); ++k) {
                if (levels_[std::size_t(c.lits[k].var())] > 0) seen_[std::size_t(c.lits[k].var())] = 1;
            }
        }
        seen_[v] = 0;
    }
    seen_[std::size_t(p.var())] = 0;
}

void SatSolver::cancel_until(int lvl) {
    if (level() <= lvl) return;
    for (std::size_t i = trail_.size(); i > std::size_t(trail_lim_[std::size_t(lvl)]); --i) {
        Lit l = trail_[i - 1];
        std::size_t v = std::size_t(l.var());
        assigns_[v] = 0;
        reasons_[v] = kNoReason;
        polarity_[v] = !l.negated();
        heap_insert(int(v));
    }
    trail_.resize(std::size_t(trail_lim_[std::size_t(lvl)]));
    trail_lim_.resize(std::size_t(lvl));
    qhead_ = trail_.size();
}

void SatSolver::bump_var(int v) {
    double& a = activity_[std::size_t(v)];
    a += var_inc_;
    if (a > 1e100) {
        for (double& x : activity_) x *= 1e-100;
        var_inc_ *= 1e-100;
    }
    if (heap_index_[std::size_t(v)] >= 0) heap_up(std::size_t(heap_index_[std::size_t(v)]));
}

void SatSolver::bump_clause(Clause& c) {
    c.activity += clause_inc_;
    if (c.activity > 1e20) {
        for (Clause& d : clauses_) {
            if (d.learnt) d.activity *= 1e-20;
        }
        clause_inc_ *= 1e-20;
    }
}

bool SatSolver::locked(std::uint32_t cref) const {
    const Clause& c = clauses_[cref];
    std::size_t v = std::size_t(c.lits[0].var());
    return reasons_[v] == cref && value(c.lits[0]) == 1;
}

void SatSolver::reduce_db() {
    std::vector<std::uint32_t> learnts;
    for (std::uint32_t i = 0; i < clauses_.size(); ++i) {
        const Clause& c = clauses_[i];
        if (c.learnt && !c.deleted && c.lits.size() > 2 && !locked(i)) learnts.push_back(i);
    }
    std::sort(learnts.begin(), learnts.end(), [&](std::uint32_t a, std::uint32_t b) {
        return clauses_[a].activity < clauses_[b].activity;
    });
    for (std::size_t i = 0; i < learnts.size() / 2; ++i) {
        Clause& c = clauses_[learnts[i]];
        c.deleted = true;
        c.lits.clear();
        c.lits.shrink_to_fit();
        --num_learnts_;
    }
    max_learnts_ *= 1.1;
}

int SatSolver::pick_branch() {
    while (!heap_.empty()) {
        int v = heap_pop();
        if (assigns_[std::size_t(v)] == 0) return v;
    }
    return -1;
}

void SatSolver::heap_insert(int v) {
    if (heap_index_[std::size_t(v)] >= 0) return;
    heap_index_[std::size_t(v)] = int(heap_.size());
    heap_.push_back(v);
    heap_up(heap_.size() - 1);
}

void SatSolver::heap_up(std::size_t i) {
    int v = heap_[i];
    while (i > 0) {
        std::size_t parent = (i - 1) / 2;
        if (!heap_less(v, heap_[parent])) break;
        heap_[i] = heap_[parent];
        heap_index_[std::size_t(heap_[i])] = int(i);
        i = parent;
    }
    heap_[i] = v;
    heap_index_[std::size_t(v)] = int(i);
}

void SatSolver::heap_down(std::size_t i) {
    int v = heap_[i];
    for (;;) {
        std::size_t child = 2 * i + 1;
        if (child >= heap_.size()) break;
        if (child + 1 < heap_.size() && heap_less(heap_[child + 1], heap_[child])) ++child;
        if (!heap_less(heap_[child], v)) break;
        heap_[i] = heap_[child];
        heap_index_[std::size_t(heap_[i])] = int(i);
        i = child;
    }
    heap_[i] = v;
    heap_index_[std::size_t(v)] = int(i);
}

int SatSolver::heap_pop() {
    int top = heap_[0];
    heap_index_[std::size_t(top)] = -1;
    int last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
        heap_[0] = last;
        heap_index_[std::size_t(last)] = 0;
        heap_down(0);
    }
    return top;
}

SatStatus SatSolver::solve(const std::vector<Lit>& assumptions, std::uint64_t conflict_budget) {
    core_.clear();
    if (!ok_) return SatStatus::Unsat;
    std::uint64_t conflicts = 0;
    std::vector<Lit> learnt;
    for (std::uint64_t restart = 0;; ++restart) {
        const std::uint64_t restart_limit = luby(restart) * kRestartUnit;
        std::uint64_t in_restart = 0;
        for (;;) {
            std::uint32_t confl = propagate();
            if (confl != kNoReason) {
                ++total_conflicts_;
                ++conflicts;
                ++in_restart;
                if (level() == 0) {
                    ok_ = false;
                    return SatStatus::Unsat;
                }
                int back_level = 0;
                analyze(confl, learnt, back_level);
                cancel_until(back_level);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], kNoReason);
                } else {
                    clauses_.push_back(Clause{learnt, 0, true, false});
                    auto cref = std::uint32_t(clauses_.size() - 1);
                    attach(cref);
                    bump_clause(clauses_[cref]);
                    ++num_learnts_;
                    enqueue(learnt[0], cref);
                }
                var_inc_ /= kVarDecay;
                clause_inc_ /= kClauseDecay;
                if (conflicts > conflict_budget) {
                    cancel_until(0);
                    return SatStatus::Unknown;
                }
                continue;
            }
            if (in_restart >= restart_limit) {
                cancel_until(0);
                break;
            }
            if (double(num_learnts_) >= max_learnts_ + double(trail_.size())) reduce_db();

            bool have = false;
            Lit next;
            while (std::size_t(level()) < assumptions.size()) {
                Lit a = assumptions[std::size_t(level())];
                std::int8_t v = value(a);
                if (v == 1) {
                    trail_lim_.push_back(int(trail_.size()));
                } else if (v == -1) {
                    analyze_final(a);
                    cancel_until(0);
                    return SatStatus::Unsat;
                } else {
                    next = a;
                    have = true;
                    break;
                }
            }
            if (!have) {
                int v = pick_branch();
                if (v < 0) {
                    model_.assign(assigns_.size(), false);
                    for (std::size_t i = 0; i < assigns_.size(); ++i) model_[i] = assigns_[i] == 1;
                    cancel_until(0);
                    return SatStatus::Sat;
                }
                next = Lit::make(v, !polarity_[std::size_t(v)]);
            }
            trail_lim_.push_back(int(trail_.size()));
            enqueue(next, kNoReason);
        }
    }
}

}  // namespace hoareopt
