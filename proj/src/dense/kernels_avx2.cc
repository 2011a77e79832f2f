// Copyright 2026 The groveropt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <immintrin.h>

#include <algorithm>

#include "groveropt/dense/kernels.h"

// Built with -mavx2 -mfma. Nothing here may run before the dispatcher has
// confirmed CPU support.

namespace groveropt::simd {
namespace {

// One __m256d holds two interleaved complex numbers (re0, im0, re1, im1).

// alpha * x for alpha given as broadcast real/imag parts.
inline __m256d cmul_bcast(__m256d ar, __m256d ai, __m256d x) {
    const __m256d x_swapped = _mm256_permute_pd(x, 0b0101);  // (im, re) pairs
    // even lanes: ar*xr - ai*xi, odd lanes: ar*xi + ai*xr
    return _mm256_fmaddsub_pd(ar, x, _mm256_mul_pd(ai, x_swapped));
}

void gemm_avx2(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
    const double* bd = reinterpret_cast<const double*>(b);
    double* cd = reinterpret_cast<double*>(c);
    std::fill(cd, cd + 2 * n * n, 0.0);
    const std::size_t pairs = n / 2;
    for (std::size_t i = 0; i < n; ++i) {
        double* crow = cd + 2 * i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const double ar_s = a[i * n + k].real();
            const double ai_s = a[i * n + k].imag();
            const __m256d ar = _mm256_set1_pd(ar_s);
            const __m256d ai = _mm256_set1_pd(ai_s);
            const double* brow = bd + 2 * k * n;
            std::size_t j = 0;
            for (; j + 1 < pairs; j += 2) {
                const __m256d b0 = _mm256_loadu_pd(brow + 4 * j);
                const __m256d b1 = _mm256_loadu_pd(brow + 4 * j + 4);
                _mm256_storeu_pd(crow + 4 * j, _mm256_add_pd(_mm256_loadu_pd(crow + 4 * j), cmul_bcast(ar, ai, b0)));
                _mm256_storeu_pd(crow + 4 * j + 4,
                                 _mm256_add_pd(_mm256_loadu_pd(crow + 4 * j + 4), cmul_bcast(ar, ai, b1)));
            }
            for (; j < pairs; ++j) {
                const __m256d b0 = _mm256_loadu_pd(brow + 4 * j);
                _mm256_storeu_pd(crow + 4 * j, _mm256_add_pd(_mm256_loadu_pd(crow + 4 * j), cmul_bcast(ar, ai, b0)));
            }
            if (n % 2 != 0) {
                const std::size_t t = n - 1;
                const double br = brow[2 * t];
                const double bi = brow[2 * t + 1];
                crow[2 * t] += ar_s * br - ai_s * bi;
                crow[2 * t + 1] += ar_s * bi + ai_s * br;
            }
        }
    }
}

cplx dotc_avx2(std::size_t len, const cplx* a, const cplx* b) {
    const double* ad = reinterpret_cast<const double*>(a);
    const double* bd = reinterpret_cast<const double*>(b);
    // straight: (ar*br, ai*bi) summed -> real part
    // crossed:  (ar*bi, ai*br) differenced -> imaginary part
    __m256d straight = _mm256_setzero_pd();
    __m256d crossed = _mm256_setzero_pd();
    const std::size_t pairs = len / 2;
    for (std::size_t j = 0; j < pairs; ++j) {
        const __m256d av = _mm256_loadu_pd(ad + 4 * j);
        const __m256d bv = _mm256_loadu_pd(bd + 4 * j);
        straight = _mm256_fmadd_pd(av, bv, straight);
        crossed = _mm256_fmadd_pd(av, _mm256_permute_pd(bv, 0b0101), crossed);
    }
    alignas(32) double s[4];
    alignas(32) double x[4];
    _mm256_store_pd(s, straight);
    _mm256_store_pd(x, crossed);
    double re = (s[0] + s[1]) + (s[2] + s[3]);
    double im = (x[0] - x[1]) + (x[2] - x[3]);
    if (len % 2 != 0) {
        const std::size_t t = len - 1;
        re += a[t].real() * b[t].real() + a[t].imag() * b[t].imag();
        im += a[t].real() * b[t].imag() - a[t].imag() * b[t].real();
    }
    return {re, im};
}

void axpy_avx2(std::size_t len, cplx alpha, const cplx* x, cplx* y) {
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    const std::size_t pairs = len / 2;
    for (std::size_t j = 0; j < pairs; ++j) {
        const __m256d xv = _mm256_loadu_pd(xd + 4 * j);
        _mm256_storeu_pd(yd + 4 * j, _mm256_add_pd(_mm256_loadu_pd(yd + 4 * j), cmul_bcast(ar, ai, xv)));
    }
    if (len % 2 != 0) {
        const std::size_t t = len - 1;
        yd[2 * t] += alpha.real() * x[t].real() - alpha.imag() * x[t].imag();
        yd[2 * t + 1] += alpha.real() * x[t].imag() + alpha.imag() * x[t].real();
    }
}

}  // namespace

namespace detail {
const KernelTable kAvx2Table{Isa::kAvx2, gemm_avx2, dotc_avx2, axpy_avx2};
}  // namespace detail

}  // namespace groveropt::simd
