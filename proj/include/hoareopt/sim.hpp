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

// Dense statevector simulator used as the ground-truth oracle.

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hoareopt/circuit.hpp"
#include "hoareopt/unitary.hpp"

namespace hoareopt {

using Amplitude = std::complex<double>;

constexpr std::size_t kMaxSimQubits = 20;
constexpr std::size_t kMaxEquivalenceQubits = 14;
constexpr double kSimTolerance = 1e-10;

/// Dealloc of a qubit that is not |0>, or a violated Assert.
class SimError : public Error {
  public:
    SimError(std::string msg, std::size_t index) : Error(std::move(msg)), index_(index) {}
    std::size_t index() const { return index_; }

  private:
    std::size_t index_;
};

class SimState {
  public:
    /// Live qubits are the circuit inputs, bit k holding inputs()[k], set
    /// from bit k of `input`.
    SimState(const Circuit& c, std::uint64_t input);

    void apply(const Instruction& ins, std::size_t index = 0);
    void alloc(QubitId q);
    /// Throws SimError unless the qubit is |0> within kSimTolerance.
    void dealloc(QubitId q, std::size_t index = 0);

    std::size_t num_qubits() const { return order_.size(); }
    const std::vector<QubitId>& qubits() const { return order_; }  // by bit position
    const std::vector<Amplitude>& amplitudes() const { return amp_; }
    double norm() const;

    /// Amplitudes re-indexed with `msb_first[0]` as the most significant bit.
    /// `msb_first` must be a permutation of qubits().
    std::vector<Amplitude> ordered(const std::vector<QubitId>& msb_first) const;

    /// True iff `cond` (atoms read as the current qubit values) holds on
    /// every basis state with |amplitude| > kSimTolerance.
    bool holds_on_support(const Condition& cond) const;

  private:
    std::vector<Amplitude> amp_;
    std::vector<QubitId> order_;
    std::map<QubitId, unsigned> bit_;
};

struct SimOptions {
    bool check_asserts = true;
    std::size_t stop = SIZE_MAX;  // simulate instructions [0, stop)
};

/// Runs `c` from a basis input (bit k = value of inputs()[k]).
SimState simulate(const Circuit& c, std::uint64_t input, const SimOptions& opt = {});

/// Value of input qubits encoded as in simulate().
bool input_satisfies(const Circuit& c, std::uint64_t input, const Condition& precondition);

struct EquivalenceReport {
    bool per_input = true;     // each input may carry its own phase
    bool common_phase = true;  // one phase for all inputs
    std::size_t inputs_checked = 0;
    std::optional<std::uint64_t> counterexample;
    std::string detail;
};

/// Compares final states over all basis inputs satisfying `precondition`.
/// Inputs and outputs are matched by name.
EquivalenceReport equivalent(const Circuit& a, const Circuit& b,
                             const Condition& precondition = Condition::constant(true),
                             std::size_t max_qubits = kMaxEquivalenceQubits);

/// As equivalent(), over an explicit list of inputs of `a`.
EquivalenceReport equivalent_on(const Circuit& a, const Circuit& b, const std::vector<std::uint64_t>& inputs,
                                std::size_t max_qubits = kMaxEquivalenceQubits);

/// Inputs of `c` satisfying `precondition`, ascending.
std::vector<std::uint64_t> satisfying_inputs(const Circuit& c, const Condition& precondition);

/// Checks `cond` on the reachable support just before instruction `index`,
/// for every input satisfying `precondition`.
bool check_assertion(const Circuit& c, std::size_t index, const Condition& cond,
                     const Condition& precondition = Condition::constant(true),
                     std::size_t max_qubits = kMaxEquivalenceQubits);

/// Unitary of a circuit whose outputs are exactly its inputs, inputs()[0]
/// being the most significant bit.
Matrix circuit_unitary(const Circuit& c);

/// "name=bit ..." for a basis input.
std::string describe_input(const Circuit& c, std::uint64_t input);

}  // namespace hoareopt
