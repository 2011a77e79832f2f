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

#ifndef GROVEROPT_DENSE_KERNELS_H_
#define GROVEROPT_DENSE_KERNELS_H_

// Complex double-precision inner loops for the dense verification path.
// Every kernel has a portable scalar reference and, on x86-64, an AVX2+FMA
// variant. The best variant supported by the running CPU is chosen once at
// first use; GROVEROPT_ISA=scalar in the environment forces the reference.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace groveropt::simd {

using cplx = std::complex<double>;

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

/// Raw kernel entry points. Matrices are square, row-major, dimension n.
struct KernelTable {
    Isa isa;
    /// c = a * b. c must not alias a or b.
    void (*gemm)(std::size_t n, const cplx* a, const cplx* b, cplx* c);
    /// sum_i conj(a[i]) * b[i].
    cplx (*dotc)(std::size_t len, const cplx* a, const cplx* b);
    /// y += alpha * x.
    void (*axpy)(std::size_t len, cplx alpha, const cplx* x, cplx* y);
};

/// Variants compiled into this build and runnable on this CPU, scalar first.
std::vector<Isa> available_isas();

/// Table for a specific variant; nullptr when unavailable.
const KernelTable* kernels_for(Isa isa);

/// The dispatched table.
const KernelTable& active_kernels();

// Span front ends over the active table.
void gemm(std::size_t n, std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c);
cplx dotc(std::span<const cplx> a, std::span<const cplx> b);
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);

namespace detail {
extern const KernelTable kScalarTable;
#if defined(GROVEROPT_WITH_AVX2)
extern const KernelTable kAvx2Table;
#endif
}  // namespace detail

}  // namespace groveropt::simd

#endif  // GROVEROPT_DENSE_KERNELS_H_
