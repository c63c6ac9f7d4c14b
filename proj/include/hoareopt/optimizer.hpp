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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hoareopt/circuit.hpp"
#include "hoareopt/symbolic_state.hpp"

namespace hoareopt {

struct PassConfig {
    std::size_t window = 1024;  // multi-gate buffer threshold M
    bool enable_single = true;
    bool enable_multi = true;
    bool enable_peephole = false;
    std::uint64_t solver_budget = kDefaultConflictBudget;
    std::ostream* smt2 = nullptr;  // optional SMT-LIB2 transcript
};

enum class RemovalReason : std::uint8_t { TrivialSingle, ZeroControl, AllOrNoneGroup, AllocDeallocPair, PeepholeCancel };

std::string_view reason_name(RemovalReason r);

struct Removal {
    std::size_t index;  // into the pass input
    RemovalReason reason;
    std::optional<std::size_t> group;
    std::size_t core_size = 0;
};

using RemovalLog = std::vector<Removal>;

/// One JSON object per line.
std::string to_jsonl(const RemovalLog& log);

struct PassResult {
    Circuit circuit;
    RemovalLog log;                   // sorted by index
    std::vector<std::size_t> origin;  // input index of each output instruction
    std::size_t controls_stripped = 0;
    std::size_t unknown_queries = 0;  // budget exhausted; the gate was kept
    std::uint64_t solver_queries = 0;
};

/// Symbolic walk with the passes enabled in `config`: definite-one control
/// stripping and single-gate triviality (enable_single) and all-or-none
/// group removal (enable_multi), then peephole if enable_peephole.
PassResult run_hoare(const Circuit& c, const PassConfig& config = {});

PassResult run_single_pass(const Circuit& c, PassConfig config = {});
PassResult run_multi_pass(const Circuit& c, PassConfig config = {});

/// Single pass followed by alloc/dealloc elision; intended for a first-one
/// block, its A_FO assertion and a shift block.
PassResult run_shift_optimization(const Circuit& c, PassConfig config = {});

/// Removes Alloc/Dealloc pairs with nothing touching the qubit in between.
PassResult elide_alloc_dealloc(const Circuit& c);

/// Cancels adjacent mutually inverse gates until no pair is left.
PassResult run_peephole(const Circuit& c);

/// `second` applied to the output of `first`, with indices mapped back to
/// the input of `first`.
PassResult compose(const PassResult& first, const PassResult& second);

}  // namespace hoareopt
