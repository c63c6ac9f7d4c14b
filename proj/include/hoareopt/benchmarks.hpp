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

// Benchmark families: renormalization (first-one + shift), the entangling
// chain and its LNN mapping, and modular reduction; plus small examples.

#pragma once

#include <vector>

#include "hoareopt/circuit.hpp"

namespace hoareopt {

struct RenormParams {
    int n = 4;    // mantissa qubits x0 (MSB) .. x{n-1}
    int n_p = 2;  // position qubits p0 (LSB) .. p{n_p-1}

    /// n_p = ceil(log2 n), at least 1.
    static RenormParams for_size(int n);
    int ancillas() const { return (1 << n_p) - 1; }
};

/// Registers x (inputs), p and f (allocated). Leaves p = number of leading
/// zeros of x and f = [x == 0], then asserts A_FO: x < 2^(n - p).
Circuit build_first_one(const RenormParams& rp);

/// Registers x and p (inputs) and 2^n_p - 1 ancillas (allocated, left live).
/// Shifts x towards its MSB by p places.
Circuit build_shift(const RenormParams& rp);

/// First-one block, A_FO assertion (if `with_assert`), shift block, and the
/// ancillas deallocated.
Circuit build_renormalize(const RenormParams& rp, bool with_assert = true);

/// Alloc q0..q{n-1}; H(q0); CNOT(q_i -> q_i+1).
Circuit build_cnot_chain(int n);

/// Routes the chain on a line: the fan-out from q0 is carried along by Swaps
/// that are undone at the end. Rejects anything but build_cnot_chain(n).
Circuit map_lnn(const Circuit& chain, int n);

/// True if every two-qubit gate acts on neighbours q_i, q_i+1.
bool is_nearest_neighbour(const Circuit& c);

/// Inputs b (LSB first) and N; cmp = [b >= N]; b <- b - N when cmp. The
/// conditional subtraction carries into c through two gates that only the
/// multi-gate pass can cancel.
Circuit build_modular_reduce(int n);

// Small examples.
Circuit example_bell();
Circuit example_bell_swap();
/// A CNOT whose control was just allocated.
Circuit example_zero_control();
/// A CNOT whose control is |1> after X.
Circuit example_one_control();
/// CC-T(a, b -> t); CX(a -> c); CC-Tdg(c, b -> t) with c fresh.
Circuit example_double_controlled_pair();
/// Same shape, but the second control copy comes from an independent d.
Circuit example_adversarial_pair();

}  // namespace hoareopt
