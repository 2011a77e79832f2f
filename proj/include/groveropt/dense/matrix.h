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

#ifndef GROVEROPT_DENSE_MATRIX_H_
#define GROVEROPT_DENSE_MATRIX_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace groveropt::dense {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Square row-major complex matrix. Products go through the dispatched
/// simd::gemm kernel.
class CMatrix {
   public:
    CMatrix() = default;
    explicit CMatrix(std::size_t n) : n_(n), data_(n * n) {}

    static CMatrix identity(std::size_t n);
    /// |a><b| = a b^dagger.
    static CMatrix outer(std::span<const cplx> a, std::span<const cplx> b);

    std::size_t dim() const { return n_; }
    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    std::span<cplx> data() { return data_; }
    std::span<const cplx> data() const { return data_; }

    CMatrix adjoint() const;

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(cplx s);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

   private:
    std::size_t n_ = 0;
    std::vector<cplx> data_;
};

/// ab - ba.
CMatrix commutator(const CMatrix& a, const CMatrix& b);

/// Re Tr(a^dagger b).
double frobenius_inner(const CMatrix& a, const CMatrix& b);
double frobenius_norm(const CMatrix& a);
double max_abs(const CMatrix& a);

/// max |a + a^dagger| and max |a - a^dagger| entrywise.
double skew_defect(const CMatrix& a);
double hermitian_defect(const CMatrix& a);

CVector matvec(const CMatrix& a, std::span<const cplx> x);
double vector_norm(std::span<const cplx> x);

}  // namespace groveropt::dense

#endif  // GROVEROPT_DENSE_MATRIX_H_
