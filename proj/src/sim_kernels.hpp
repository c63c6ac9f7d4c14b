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

// Statevector kernels. Every kernel walks the basis indices whose `fixed`
// bits equal `set`: the free bits are enumerated densely and deposited
// around the fixed positions.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hoareopt::kernels {

using cplx = std::complex<double>;

/// Positions that are pinned during enumeration, ascending.
struct FixedBits {
    std::vector<unsigned> positions;
    std::uint64_t set = 0;  // required ones among the pinned positions

    std::uint64_t deposit(std::uint64_t j) const {
        for (unsigned b : positions) j = ((j >> b) << (b + 1)) | (j & ((std::uint64_t(1) << b) - 1));
        return j | set;
    }
};

struct KernelTable {
    const char* name;
    /// 2x2 matrix on `target` where all controls are one. `fixed` pins the
    /// controls (to one) and the target (to zero).
    void (*apply_1q)(cplx* amp, std::size_t num_bits, const FixedBits& fixed, unsigned target, const cplx m[4]);
    /// Multiplies every amplitude whose `fixed` bits are all one by `phase`.
    void (*apply_phase)(cplx* amp, std::size_t num_bits, const FixedBits& fixed, cplx phase);
    /// Controlled X; `fixed` as for apply_1q.
    void (*apply_x)(cplx* amp, std::size_t num_bits, const FixedBits& fixed, unsigned target);
    /// Controlled swap of `a` and `b`; `fixed` pins the controls to one, `a`
    /// to one and `b` to zero.
    void (*apply_swap)(cplx* amp, std::size_t num_bits, const FixedBits& fixed, unsigned a, unsigned b);
};

const KernelTable& scalar_kernels();
/// nullptr when the build has no AVX2 variant.
const KernelTable* avx2_kernels();
/// AVX2 when compiled in and supported by the CPU, unless HOAREOPT_SIMD=scalar.
const KernelTable& active_kernels();

}  // namespace hoareopt::kernels
