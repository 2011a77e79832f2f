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

#include <gtest/gtest.h>

#include <random>
#include <vector>

namespace groveropt::simd {
namespace {

std::vector<cplx> random_vec(std::size_t len, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> v(len);
    for (cplx& z : v) z = {g(rng), g(rng)};
    return v;
}

// Textbook loops on std::complex.
std::vector<cplx> naive_gemm(std::size_t n, const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> c(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c[i * n + j] += a[i * n + k] * b[k * n + j];
    return c;
}

double max_diff(const std::vector<cplx>& x, const std::vector<cplx>& y) {
    double d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
    return d;
}

class KernelEquivalence : public ::testing::TestWithParam<Isa> {};

TEST_P(KernelEquivalence, Gemm) {
    const KernelTable* k = kernels_for(GetParam());
    ASSERT_NE(k, nullptr);
    std::mt19937_64 rng(31);
    for (std::size_t n : {1u, 2u, 3u, 4u, 7u, 8u, 16u, 33u, 64u}) {
        const auto a = random_vec(n * n, rng), b = random_vec(n * n, rng);
        std::vector<cplx> c(n * n, cplx{99.0});
        k->gemm(n, a.data(), b.data(), c.data());
        EXPECT_LE(max_diff(c, naive_gemm(n, a, b)), 1e-12 * static_cast<double>(n)) << "n=" << n;
    }
}

TEST_P(KernelEquivalence, DotAndAxpy) {
    const KernelTable* k = kernels_for(GetParam());
    ASSERT_NE(k, nullptr);
    std::mt19937_64 rng(32);
    for (std::size_t len : {0u, 1u, 2u, 3u, 5u, 8u, 17u, 1024u, 1025u}) {
        const auto a = random_vec(len, rng), b = random_vec(len, rng);
        cplx want{};
        for (std::size_t i = 0; i < len; ++i) want += std::conj(a[i]) * b[i];
        EXPECT_LE(std::abs(k->dotc(len, a.data(), b.data()) - want), 1e-12 * (1.0 + static_cast<double>(len)));

        const cplx alpha{0.3, -1.7};
        std::vector<cplx> y = b, y_ref = b;
        for (std::size_t i = 0; i < len; ++i) y_ref[i] += alpha * a[i];
        k->axpy(len, alpha, a.data(), y.data());
        EXPECT_LE(max_diff(y, y_ref), 1e-14) << "len=" << len;
    }
}

INSTANTIATE_TEST_SUITE_P(AllIsas, KernelEquivalence, ::testing::ValuesIn(available_isas()),
                         [](const auto& info) { return std::string(isa_name(info.param)); });

TEST(Kernels, ScalarAlwaysAvailable) {
    EXPECT_NE(kernels_for(Isa::kScalar), nullptr);
    EXPECT_EQ(available_isas().front(), Isa::kScalar);
}

TEST(Kernels, IsasAgreeWithEachOther) {
    const auto isas = available_isas();
    std::mt19937_64 rng(33);
    const std::size_t n = 37;
    const auto a = random_vec(n * n, rng), b = random_vec(n * n, rng);
    std::vector<cplx> ref(n * n);
    kernels_for(Isa::kScalar)->gemm(n, a.data(), b.data(), ref.data());
    for (Isa isa : isas) {
        std::vector<cplx> c(n * n);
        kernels_for(isa)->gemm(n, a.data(), b.data(), c.data());
        EXPECT_LE(max_diff(c, ref), 1e-12) << isa_name(isa);
    }
}

TEST(Kernels, SpanWrappers) {
    std::mt19937_64 rng(34);
    const auto a = random_vec(9, rng), b = random_vec(9, rng);
    std::vector<cplx> c(9);
    gemm(3, a, b, c);
    EXPECT_LE(max_diff(c, naive_gemm(3, a, b)), 1e-13);
    EXPECT_LE(std::abs(dotc(a, a) - cplx{std::real(dotc(a, a)), 0.0}), 1e-13);
}

}  // namespace
}  // namespace groveropt::simd
