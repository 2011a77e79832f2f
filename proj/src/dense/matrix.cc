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

#include "groveropt/dense/matrix.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "groveropt/dense/kernels.h"

namespace groveropt::dense {
namespace {

void check_same_dim(const CMatrix& a, const CMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
}

}  // namespace

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::outer(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) throw std::invalid_argument("outer: length mismatch");
    CMatrix m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            m(i, j) = a[i] * std::conj(b[j]);
        }
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            m(j, i) = std::conj((*this)(i, j));
        }
    }
    return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    check_same_dim(*this, o);
    simd::axpy(1.0, o.data(), data());
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    check_same_dim(*this, o);
    simd::axpy(-1.0, o.data(), data());
    return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
    for (cplx& v : data_) v *= s;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    check_same_dim(a, b);
    CMatrix c(a.dim());
    simd::gemm(a.dim(), a.data(), b.data(), c.data());
    return c;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

double frobenius_inner(const CMatrix& a, const CMatrix& b) {
    check_same_dim(a, b);
    return simd::dotc(a.data(), b.data()).real();
}

double frobenius_norm(const CMatrix& a) { return std::sqrt(std::max(0.0, frobenius_inner(a, a))); }

double max_abs(const CMatrix& a) {
    double worst = 0.0;
    for (const cplx& v : a.data()) worst = std::max(worst, std::abs(v));
    return worst;
}

double skew_defect(const CMatrix& a) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) + std::conj(a(j, i))));
        }
    }
    return worst;
}

double hermitian_defect(const CMatrix& a) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return worst;
}

CVector matvec(const CMatrix& a, std::span<const cplx> x) {
    if (x.size() != a.dim()) throw std::invalid_argument("matvec: length mismatch");
    CVector y(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        cplx acc{0.0};
        for (std::size_t j = 0; j < a.dim(); ++j) acc += a(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

double vector_norm(std::span<const cplx> x) { return std::sqrt(simd::dotc(x, x).real()); }

}  // namespace groveropt::dense
