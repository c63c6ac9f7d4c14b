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

#include "hoareopt/optimizer.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "hoareopt/gates.hpp"
#include "hoareopt/unitary.hpp"

namespace hoareopt {

std::string_view reason_name(RemovalReason r) {
    switch (r) {
        case RemovalReason::TrivialSingle: return "trivial_single";
        case RemovalReason::ZeroControl: return "zero_control";
        case RemovalReason::AllOrNoneGroup: return "all_or_none_group";
        case RemovalReason::AllocDeallocPair: return "alloc_dealloc_pair";
        case RemovalReason::PeepholeCancel: return "peephole_cancel";
    }
    return "?";
}

std::string to_jsonl(const RemovalLog& log) {
    std::string out;
    for (const auto& r : log) {
        nlohmann::ordered_json j;
        j["index"] = r.index;
        j["reason"] = reason_name(r.reason);
        if (r.group) j["group"] = *r.group;
        j["core_size"] = r.core_size;
        out += j.dump() + "\n";
    }
    return out;
}

namespace {

void sort_log(RemovalLog& log) {
    std::stable_sort(log.begin(), log.end(), [](const Removal& a, const Removal& b) { return a.index < b.index; });
}

VarNamer smt_namer(const Circuit& c) {
    std::map<std::string, int> uses;
    for (QubitId q = 0; q < c.num_qubit_ids(); ++q) ++uses[c.name(q)];
    return [&c, uses](Var v) {
        std::string base = c.name(v.qubit);
        if (uses.at(base) > 1) base += "_q" + std::to_string(v.qubit);
        return base + "_" + std::to_string(v.version);
    };
}

class HoareEngine {
  public:
    HoareEngine(const Circuit& c, const PassConfig& cfg) : c_(c), cfg_(cfg), st_(cfg.solver_budget) {
        if (cfg_.window == 0) throw Error("window must be at least 1");
        if (cfg_.smt2) st_.set_transcript(cfg_.smt2, smt_namer(c_));
    }

    PassResult run() {
        require_valid(c_);
        const auto& ins = c_.instructions();
        for (QubitId q : c_.inputs()) st_.alloc(q);
        for (std::size_t i = 0; i < ins.size(); ++i) {
            step(i, ins[i]);
            if (!cfg_.enable_multi) {
                flush(0);
            } else if (buffer_.size() > cfg_.window) {
                scan();
                flush(cfg_.window / 2);
            }
        }
        if (cfg_.enable_multi) scan();
        flush(0);
        sort_log(res_.log);
        res_.solver_queries = st_.queries();
        res_.circuit = c_.with_instructions(std::move(out_));
        return std::move(res_);
    }

  private:
    struct Entry {
        std::size_t index;
        Instruction ins;
        Condition cone;  // ctrls_one at this program point (gates only)
        bool removed = false;
    };

    SatResult check(const Condition& extra) {
        SatResult r = st_.check_sat(extra);
        if (r.unknown()) ++res_.unknown_queries;
        return r;
    }

    void assert_nontrivial(const Condition& c) {
        if (c.op() == Op::True) return;
        st_.assert_condition(c);
    }

    void step(std::size_t i, const Instruction& ins) {
        switch (ins.op) {
            case OpKind::Alloc: {
                Var v = st_.alloc(ins.targets[0]);
                st_.assert_condition(!Condition::atom(v));
                break;
            }
            case OpKind::Dealloc: st_.release(ins.targets[0]); break;
            case OpKind::Measure: st_.fresh(ins.targets[0]); break;
            case OpKind::Assert:
                st_.assert_condition(substitute(ins.cond, [&](Var v) { return Condition::atom(st_.current(v.qubit)); }));
                break;
            case OpKind::Gate: return gate(i, ins);
        }
        buffer_.push_back({i, ins, Condition::constant(true)});
    }

    void gate(std::size_t i, Instruction g) {
        if (cfg_.enable_single) {
            std::vector<QubitId> kept;
            for (QubitId c : g.controls) {
                if (check(!Condition::atom(st_.current(c))).unsat()) {
                    ++res_.controls_stripped;
                } else {
                    kept.push_back(c);
                }
            }
            g.controls = std::move(kept);
        }
        const Condition cone = st_.ctrls_one(g.controls);
        std::vector<Condition> pre;
        for (QubitId t : g.targets) pre.push_back(Condition::atom(st_.current(t)));

        bool removed = false;
        if (cfg_.enable_single) {
            SatResult r = check(cone && !trivial_if(g.gate, pre));
            if (r.unsat()) {
                removed = true;
                RemovalReason why = RemovalReason::TrivialSingle;
                if (!g.controls.empty() && check(cone).unsat()) why = RemovalReason::ZeroControl;
                res_.log.push_back({i, why, std::nullopt, r.core_size});
            }
        }

        // Postconditions hold whether or not the gate was removed.
        std::vector<Condition> post;
        for (QubitId t : g.targets) post.push_back(Condition::atom(st_.fresh(t)));
        const GateSpec& spec = gate_spec(g.gate);
        const bool havoc = spec.havoc || (spec.diagonal && !g.controls.empty());
        if (!havoc) {
            if (auto rel = postconditions(g.gate, pre, post)) assert_nontrivial(implies(cone, *rel));
        }
        if (!g.controls.empty()) {
            for (std::size_t k = 0; k < post.size(); ++k) assert_nontrivial(implies(!cone, iff(post[k], pre[k])));
        }
        buffer_.push_back({i, std::move(g), cone, removed});
    }

    void flush(std::size_t keep) {
        while (buffer_.size() > keep) {
            Entry& e = buffer_.front();
            if (!e.removed) {
                out_.push_back(std::move(e.ins));
                res_.origin.push_back(e.index);
            }
            buffer_.pop_front();
        }
    }

    bool live_gate(std::size_t p) const { return buffer_[p].ins.is_gate() && !buffer_[p].removed; }

    // Next target-successive gate after buffer position p, if any.
    std::optional<std::size_t> successor(std::size_t p) const {
        const Instruction& first = buffer_[p].ins;
        std::vector<std::size_t> between;
        for (std::size_t k = p + 1; k < buffer_.size(); ++k) {
            const Entry& e = buffer_[k];
            if (e.removed) continue;
            const bool touches = std::any_of(first.targets.begin(), first.targets.end(),
                                             [&](QubitId t) { return e.ins.touches(t); });
            if (!touches || e.ins.op == OpKind::Assert) continue;
            if (!e.ins.is_gate()) return std::nullopt;
            if (e.ins.targets == first.targets) {
                for (std::size_t b : between) {
                    if (!commute(buffer_[b].ins, e.ins)) return std::nullopt;
                }
                return k;
            }
            if (!commute(e.ins, first)) return std::nullopt;
            between.push_back(k);
        }
        return std::nullopt;
    }

    std::vector<std::vector<std::size_t>> chains() const {
        std::vector<std::optional<std::size_t>> next(buffer_.size());
        std::vector<bool> has_pred(buffer_.size(), false);
        for (std::size_t p = 0; p < buffer_.size(); ++p) {
            if (!live_gate(p)) continue;
            next[p] = successor(p);
            if (next[p]) has_pred[*next[p]] = true;
        }
        std::vector<std::vector<std::size_t>> out;
        for (std::size_t p = 0; p < buffer_.size(); ++p) {
            if (!live_gate(p) || has_pred[p] || !next[p]) continue;
            std::vector<std::size_t> chain{p};
            while (next[chain.back()]) chain.push_back(*next[chain.back()]);
            out.push_back(std::move(chain));
        }
        return out;
    }

    bool product_is_identity(const std::vector<std::size_t>& group) const {
        const std::size_t dim = std::size_t(1) << buffer_[group[0]].ins.targets.size();
        Matrix m = Matrix::Identity(Eigen::Index(dim), Eigen::Index(dim));
        for (std::size_t p : group) m = gate_unitary(buffer_[p].ins.gate) * m;
        return is_identity(m);
    }

    // Tries sub-runs of `chain`, longest first from each start. Returns true
    // after the first removal, since links change.
    bool try_chain(const std::vector<std::size_t>& chain) {
        for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
            for (std::size_t e = chain.size() - 1; e > s; --e) {
                std::vector<std::size_t> group(chain.begin() + std::ptrdiff_t(s), chain.begin() + std::ptrdiff_t(e) + 1);
                std::vector<std::size_t> key;
                for (std::size_t p : group) key.push_back(buffer_[p].index);
                if (rejected_.count(key)) continue;
                if (!product_is_identity(group)) {
                    rejected_.insert(key);
                    continue;
                }
                std::vector<Condition> fire, idle;
                for (std::size_t p : group) {
                    fire.push_back(buffer_[p].cone);
                    idle.push_back(!buffer_[p].cone);
                }
                SatResult r = check(any_of(fire) && any_of(idle));
                if (!r.unsat()) {
                    rejected_.insert(key);
                    continue;
                }
                const std::size_t id = next_group_++;
                for (std::size_t p : group) {
                    buffer_[p].removed = true;
                    res_.log.push_back({buffer_[p].index, RemovalReason::AllOrNoneGroup, id, r.core_size});
                }
                return true;
            }
        }
        return false;
    }

    void scan() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& chain : chains()) {
                if (try_chain(chain)) {
                    changed = true;
                    break;
                }
            }
        }
    }

    const Circuit& c_;
    PassConfig cfg_;
    SymbolicState st_;
    std::deque<Entry> buffer_;
    std::vector<Instruction> out_;
    std::set<std::vector<std::size_t>> rejected_;
    std::size_t next_group_ = 0;
    PassResult res_;
};

}  // namespace

PassResult compose(const PassResult& first, const PassResult& second) {
    PassResult r;
    r.circuit = second.circuit;
    r.log = first.log;
    for (Removal x : second.log) {
        x.index = first.origin.at(x.index);
        r.log.push_back(x);
    }
    sort_log(r.log);
    for (std::size_t o : second.origin) r.origin.push_back(first.origin.at(o));
    r.controls_stripped = first.controls_stripped + second.controls_stripped;
    r.unknown_queries = first.unknown_queries + second.unknown_queries;
    r.solver_queries = first.solver_queries + second.solver_queries;
    return r;
}

PassResult run_hoare(const Circuit& c, const PassConfig& config) {
    PassResult r;
    if (config.enable_single || config.enable_multi) {
        r = HoareEngine(c, config).run();
    } else {
        r.circuit = c;
        for (std::size_t i = 0; i < c.instructions().size(); ++i) r.origin.push_back(i);
    }
    if (config.enable_peephole) r = compose(r, run_peephole(r.circuit));
    return r;
}

PassResult run_single_pass(const Circuit& c, PassConfig config) {
    config.enable_single = true;
    config.enable_multi = false;
    config.enable_peephole = false;
    return run_hoare(c, config);
}

PassResult run_multi_pass(const Circuit& c, PassConfig config) {
    config.enable_single = false;
    config.enable_multi = true;
    config.enable_peephole = false;
    return run_hoare(c, config);
}

PassResult run_shift_optimization(const Circuit& c, PassConfig config) {
    PassResult r = run_single_pass(c, config);
    return compose(r, elide_alloc_dealloc(r.circuit));
}

PassResult elide_alloc_dealloc(const Circuit& c) {
    require_valid(c);
    const auto& ins = c.instructions();
    std::vector<bool> drop(ins.size(), false);
    std::unordered_map<QubitId, std::size_t> pending;  // qubit -> its untouched Alloc
    PassResult r;
    for (std::size_t i = 0; i < ins.size(); ++i) {
        const Instruction& in = ins[i];
        if (in.op == OpKind::Alloc) {
            pending[in.targets[0]] = i;
            continue;
        }
        if (in.op == OpKind::Dealloc) {
            auto it = pending.find(in.targets[0]);
            if (it != pending.end()) {
                drop[it->second] = drop[i] = true;
                r.log.push_back({it->second, RemovalReason::AllocDeallocPair, std::nullopt, 0});
                r.log.push_back({i, RemovalReason::AllocDeallocPair, std::nullopt, 0});
                pending.erase(it);
            }
            continue;
        }
        for (QubitId q : in.qubits()) pending.erase(q);
    }
    std::vector<Instruction> out;
    for (std::size_t i = 0; i < ins.size(); ++i) {
        if (drop[i]) continue;
        out.push_back(ins[i]);
        r.origin.push_back(i);
    }
    sort_log(r.log);
    r.circuit = c.with_instructions(std::move(out));
    return r;
}

}  // namespace hoareopt
