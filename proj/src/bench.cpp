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

#include "hoareopt/bench.hpp"

#include <cstdio>

#include <json.hpp>

#include "hoareopt/benchmarks.hpp"
#include "hoareopt/gates.hpp"

namespace hoareopt {

std::optional<Suite> suite_from_name(std::string_view name) {
    if (name == "renorm") return Suite::Renorm;
    if (name == "chain") return Suite::Chain;
    if (name == "modred") return Suite::ModRed;
    return std::nullopt;
}

std::string_view suite_name(Suite s) {
    switch (s) {
        case Suite::Renorm: return "renorm";
        case Suite::Chain: return "chain";
        case Suite::ModRed: return "modred";
    }
    return "?";
}

Circuit suite_circuit(Suite s, int n) {
    switch (s) {
        case Suite::Renorm: return build_renormalize(RenormParams::for_size(n));
        case Suite::Chain: return map_lnn(build_cnot_chain(n), n);
        case Suite::ModRed: return build_modular_reduce(n);
    }
    throw Error("unknown suite");
}

Circuit base_pipeline(const Circuit& c, GateSet gs) {
    Circuit d = gs == GateSet::CliffordT ? decompose_circuit(c) : c;
    return elide_alloc_dealloc(run_peephole(d).circuit).circuit;
}

OptOutcome opt_pipeline(const Circuit& c, const PassConfig& cfg, GateSet gs) {
    PassConfig hc = cfg;
    hc.enable_peephole = false;
    OptOutcome out;
    out.hoare = run_hoare(c, hc);
    Circuit e = elide_alloc_dealloc(out.hoare.circuit).circuit;
    out.circuit = base_pipeline(e, gs);
    return out;
}

BenchRow run_bench(Suite s, int n, const PassConfig& cfg, GateSet gs) {
    const Circuit c = suite_circuit(s, n);
    const Circuit base = base_pipeline(c, gs);
    OptOutcome opt = opt_pipeline(c, cfg, gs);
    BenchRow row;
    row.benchmark = std::string(suite_name(s));
    row.n = n;
    row.width_base = width(base);
    row.depth_base = dag_depth(base);
    row.width_opt = width(opt.circuit);
    row.depth_opt = dag_depth(opt.circuit);
    row.hoare_log = std::move(opt.hoare.log);
    return row;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
    std::string out = "benchmark,n,width_opt,width_base,depth_opt,depth_base,area_ratio\n";
    for (const auto& r : rows) {
        char ratio[32];
        std::snprintf(ratio, sizeof ratio, "%.4f", r.area_ratio());
        out += r.benchmark + "," + std::to_string(r.n) + "," + std::to_string(r.width_opt) + "," +
               std::to_string(r.width_base) + "," + std::to_string(r.depth_opt) + "," + std::to_string(r.depth_base) +
               "," + ratio + "\n";
    }
    return out;
}

std::string to_json(const std::vector<BenchRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["benchmark"] = r.benchmark;
        j["n"] = r.n;
        j["width_opt"] = r.width_opt;
        j["width_base"] = r.width_base;
        j["depth_opt"] = r.depth_opt;
        j["depth_base"] = r.depth_base;
        j["area_ratio"] = r.area_ratio();
        j["removed"] = r.hoare_log.size();
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

}  // namespace hoareopt
