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

// The two compiler configurations compared by the benchmarks:
//   base: decompose -> peephole -> alloc/dealloc elision
//   opt:  Hoare passes -> elision -> decompose -> peephole -> elision

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hoareopt/circuit.hpp"
#include "hoareopt/optimizer.hpp"

namespace hoareopt {

enum class Suite : std::uint8_t { Renorm, Chain, ModRed };
enum class GateSet : std::uint8_t { Native, CliffordT };

std::optional<Suite> suite_from_name(std::string_view name);
std::string_view suite_name(Suite s);

/// The unoptimized benchmark circuit of size n.
Circuit suite_circuit(Suite s, int n);

Circuit base_pipeline(const Circuit& c, GateSet gs = GateSet::CliffordT);

struct OptOutcome {
    Circuit circuit;
    PassResult hoare;  // log of the Hoare stage, indexed into the input
};
OptOutcome opt_pipeline(const Circuit& c, const PassConfig& cfg = {}, GateSet gs = GateSet::CliffordT);

struct BenchRow {
    std::string benchmark;
    int n = 0;
    int width_opt = 0, width_base = 0;
    int depth_opt = 0, depth_base = 0;
    RemovalLog hoare_log;

    double width_ratio() const { return double(width_base) / width_opt; }
    double depth_ratio() const { return double(depth_base) / depth_opt; }
    double area_ratio() const { return double(width_base) * depth_base / (double(width_opt) * depth_opt); }
};

BenchRow run_bench(Suite s, int n, const PassConfig& cfg = {}, GateSet gs = GateSet::CliffordT);

/// Header benchmark,n,width_opt,width_base,depth_opt,depth_base,area_ratio.
std::string to_csv(const std::vector<BenchRow>& rows);
std::string to_json(const std::vector<BenchRow>& rows);

}  // namespace hoareopt
