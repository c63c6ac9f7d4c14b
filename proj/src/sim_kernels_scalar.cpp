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

#include <cstdlib>
#include <cstring>
#include <utility>

#include "sim_kernels.hpp"

namespace hoareopt::kernels {
namespace {

std::uint64_t count(std::size_t num_bits, const FixedBits& fixed) {
    return std::uint64_t(1) << (num_bits - fixed.positions.size());
}

void apply_1q(cplx* amp, std::size_t num_bits, const FixedBits& fixed, unsigned target, const cplx m[4]) {
    const std::uint64_t tbit = std::uint64_t(1) << target;
    const std::uint64_t n = count(num_bits, fixed);
    for (std::uint64_t j = 0; j < n; ++j) {
        const std::uint64_t i0 = fixed.deposit(j);
        const std::uint64_t i1 = i0 | tbit;
        const cplx a0 = amp[i0], a1 = amp[i1];
        amp[i0] = m[0] * a0 + m[1] * a1;
        amp[i1] = m[2] * a0 + m[3] * a1;
    }
}

void apply_phase(cplx* amp, std::size_t num_bits, const FixedBits& fixed, cplx phase) {
    const std::uint64_t n = count(num_bits, fixed);
    for (std::uint64_t j = 0; j < n; ++j) amp[fixed.deposit(j)] *= phase;
}

void apply_x(cplx* amp, std::size_t num_bits, const FixedBits& fixed, unsigned target) {
    const std::uint64_t tbit = std::uint64_t(1) << target;
    const std::uint64_t n = count(num_bits, fixed);
    for (std::uint64_t j = 0; j < n; ++j) {
        const std::uint64_t i0 = fixed.deposit(j);
        std::swap(amp[i0], amp[i0 | tbit]);
    }
}

void apply_swap(cplx* amp, std::size_t num_bits, const FixedBits& fixed, unsigned a, unsigned b) {
    const std::uint64_t abit = std::uint64_t(1) << a, bbit = std::uint64_t(1) << b;
    const std::uint64_t n = count(num_bits, fixed);
    for (std::uint64_t j = 0; j < n; ++j) {
        const std::uint64_t i = fixed.deposit(j);  // a = 1, b = 0
        std::swap(amp[i], amp[(i & ~abit) | bbit]);
    }
}

const KernelTable kScalar{"scalar", apply_1q, apply_phase, apply_x, apply_swap};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

#ifndef HOAREOPT_WITH_AVX2
const KernelTable* avx2_kernels() { return nullptr; }
#endif

const KernelTable& active_kernels() {
    static const KernelTable* chosen = [] {
        const char* env = std::getenv("HOAREOPT_SIMD");
        if (env && std::strcmp(env, "scalar") == 0) return &kScalar;
        const KernelTable* v = avx2_kernels();
#if defined(__x86_64__) || defined(__i386__)
        if (v && __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return v;
#endif
        return &kScalar;
    }();
    return *chosen;
}

}  // namespace hoareopt::kernels
