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

// AVX2 variants: two enumerated indices per iteration, one complex per
// 128-bit lane. Built with -mavx2 -mfma; only reached after a CPU check.

#include <immintrin.h>

#include <utility>

#include "sim_kernels.hpp"

namespace hoareopt::kernels {
namespace {

inline __m256d load2(const cplx* amp, std::uint64_t lo, std::uint64_t hi) {
    return _mm256_set_m128d(_mm_loadu_pd(reinterpret_cast<const double*>(amp + hi)),
                            _mm_loadu_pd(reinterpret_cast<const double*>(amp + lo)));
}

inline void store2(cplx* amp, std::uint64_t lo, std::uint64_t hi, __m256d v) {
    _mm_storeu_pd(reinterpret_cast<double*>(amp + lo), _mm256_castpd256_pd128(v));
    _mm_storeu_pd(reinterpret_cast<double*>(amp + hi), _mm256_extractf128_pd(v, 1));
}

// (re, im) pairs times the broadcast scalar c.
inline __m256d cmul(__m256d v, cplx c) {
    const __m256d re = _mm256_set1_pd(c.real());
    const __m256d im = _mm256_set1_pd(c.imag());
    const __m256d swapped = _mm256_permute_pd(v, 0b0101);
    return _mm256_fmaddsub_pd(v, re, _mm256_mul_pd(swapped, im));
}

std::uint64_t count(std::size_t num_bits, const FixedBits& fixed) {
    return std::uint64_t(1) << (num_bits - fixed.positions.size());
}

void apply_1q(cplx* amp, std::size_t num_bits, const FixedBits& fixed, unsigned target, const cplx m[4]) {
    const std::uint64_t tbit = std::uint64_t(1) << target;
    const std::uint64_t n = count(num_bits, fixed);
    std::uint64_t j = 0;
    for (; j + 1 < n; j += 2) {
        const std::uint64_t p = fixed.deposit(j), q = fixed.deposit(j + 1);
        const __m256d a0 = load2(amp, p, q);
        const __m256d a1 = load2(amp, p | tbit, q | tbit);
        store2(amp, p, q, _mm256_add_pd(cmul(a0, m[0]), cmul(a1, m[1])));
        store2(amp, p | tbit, q | tbit, _mm256_add_pd(cmul(a0, m[2]), cmul(a1, m[3])));
    }
    for (; j < n; ++j) {
        const std::uint64_t i0 = fixed.deposit(j), i1 = i0 | tbit;
        const cplx a0 = amp[i0], a1 = amp[i1];
        amp[i0] = m[0] * a0 + m[1] * a1;
        amp[i1] = m[2] * a0 + m[3] * a1;
    }
}

void apply_phase(cplx* amp, std::size_t num_bits, const FixedBits& fixed, cplx phase) {
    const std::uint64_t n = count(num_bits, fixed);
    std::uint64_t j = 0;
    for (; j + 1 < n; j += 2) {
        const std::uint64_t p = fixed.deposit(j), q = fixed.deposit(j + 1);
        store2(amp, p, q, cmul(load2(amp, p, q), phase));
    }
    for (; j < n; ++j) amp[fixed.deposit(j)] *= phase;
}

void apply_x(cplx* amp, std::size_t num_bits, const FixedBits& fixed, unsigned target) {
    const std::uint64_t tbit = std::uint64_t(1) << target;
    const std::uint64_t n = count(num_bits, fixed);
    std::uint64_t j = 0;
    for (; j + 1 < n; j += 2) {
        const std::uint64_t p = fixed.deposit(j), q = fixed.deposit(j + 1);
        const __m256d a0 = load2(amp, p, q);
        const __m256d a1 = load2(amp, p | tbit, q | tbit);
        store2(amp, p, q, a1);
        store2(amp, p | tbit, q | tbit, a0);
    }
    for (; j < n; ++j) {
        const std::uint64_t i0 = fixed.deposit(j);
        std::swap(amp[i0], amp[i0 | tbit]);
    }
}

void apply_swap(cplx* amp, std::size_t num_bits, const FixedBits& fixed, unsigned a, unsigned b) {
    const std::uint64_t abit = std::uint64_t(1) << a, bbit = std::uint64_t(1) << b;
    const std::uint64_t n = count(num_bits, fixed);
    auto partner = [&](std::uint64_t i) { return (i & ~abit) | bbit; };
    std::uint64_t j = 0;
    for (; j + 1 < n; j += 2) {
        const std::uint64_t p = fixed.deposit(j), q = fixed.deposit(j + 1);
        const __m256d u = load2(amp, p, q);
        const __m256d v = load2(amp, partner(p), partner(q));
        store2(amp, p, q, v);
        store2(amp, partner(p), partner(q), u);
    }
    for (; j < n; ++j) {
        const std::uint64_t i = fixed.deposit(j);
        std::swap(amp[i], amp[partner(i)]);
    }
}

const KernelTable kAvx2{"avx2", apply_1q, apply_phase, apply_x, apply_swap};

}  // namespace

const KernelTable* avx2_kernels() { return &kAvx2; }

}  // namespace hoareopt::kernels
