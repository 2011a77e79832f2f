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

#include "groveropt/dense/kernels.h"

#include <algorithm>

namespace groveropt::simd {
namespace {

// Real and imaginary parts are handled explicitly: std::complex operator*
// carries NaN/Inf recovery that blocks vectorization and changes rounding.

void gemm_scalar(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
    const double* bd = reinterpret_cast<const double*>(b);
    double* cd = reinterpret_cast<double*>(c);
    std::fill(cd, cd + 2 * n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double* crow = cd + 2 * i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const double ar = a[i * n + k].real();
            const double ai = a[i * n + k].imag();
            const double* brow = bd + 2 * k * n;
            for (std::size_t j = 0; j < n; ++j) {
                const double br = brow[2 * j];
                const double bi = brow[2 * j + 1];
                crow[2 * j] += ar * br - ai * bi;
                crow[2 * j + 1] += ar * bi + ai * br;
            }
        }
    }
}

cplx dotc_scalar(std::size_t len, const cplx* a, const cplx* b) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        const double ar = a[i].real();
        const double ai = a[i].imag();
        const double br = b[i].real();
        const double bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

void axpy_scalar(std::size_t len, cplx alpha, const cplx* x, cplx* y) {
    const double ar = alpha.real();
    const double ai = alpha.imag();
    double* yd = reinterpret_cast<double*>(y);
    for (std::size_t i = 0; i < len; ++i) {
        const double xr = x[i].real();
        const double xi = x[i].imag();
        yd[2 * i] += ar * xr - ai * xi;
        yd[2 * i + 1] += ar * xi + ai * xr;
    }
}

}  // namespace

namespace detail {
const KernelTable kScalarTable{Isa::kScalar, gemm_scalar, dotc_scalar, axpy_scalar};
}  // namespace detail

}  // namespace groveropt::simd
