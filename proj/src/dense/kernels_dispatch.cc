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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "groveropt/dense/kernels.h"

namespace groveropt::simd {
namespace {

bool cpu_has_avx2() {
#if defined(GROVEROPT_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable& select_kernels() {
    const char* forced = std::getenv("GROVEROPT_ISA");
    if (forced != nullptr && std::string(forced) == "scalar") {
        return detail::kScalarTable;
    }
#if defined(GROVEROPT_WITH_AVX2)
    if (cpu_has_avx2()) {
        return detail::kAvx2Table;
    }
#endif
    return detail::kScalarTable;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

std::vector<Isa> available_isas() {
    std::vector<Isa> out{Isa::kScalar};
    if (cpu_has_avx2()) out.push_back(Isa::kAvx2);
    return out;
}

const KernelTable* kernels_for(Isa isa) {
    if (isa == Isa::kScalar) return &detail::kScalarTable;
#if defined(GROVEROPT_WITH_AVX2)
    if (isa == Isa::kAvx2 && cpu_has_avx2()) return &detail::kAvx2Table;
#endif
    return nullptr;
}

const KernelTable& active_kernels() {
    static const KernelTable& table = select_kernels();
    return table;
}

void gemm(std::size_t n, std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> c) {
    require(a.size() == n * n && b.size() == n * n && c.size() == n * n, "gemm: operand size mismatch");
    active_kernels().gemm(n, a.data(), b.data(), c.data());
}

cplx dotc(std::span<const cplx> a, std::span<const cplx> b) {
    require(a.size() == b.size(), "dotc: length mismatch");
    return active_kernels().dotc(a.size(), a.data(), b.data());
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
    require(x.size() == y.size(), "axpy: length mismatch");
    active_kernels().axpy(x.size(), alpha, x.data(), y.data());
}

}  // namespace groveropt::simd
