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

#ifndef GROVEROPT_PLANE_H_
#define GROVEROPT_PLANE_H_

// Exact simulation of Grover-compatible circuits inside the two-dimensional
// Grover plane. A state is alpha*u + beta*v with u = H|psi0> and
// v = (I - H)|psi0>; that basis is orthogonal but not normalized
// (|u|^2 = q0, |v|^2 = 1 - q0), so the 2x2 gate matrices below are not unitary
// as plain arrays.

#include <array>
#include <cmath>
#include <complex>

#include "groveropt/gate_word.h"
#include "groveropt/oracle_spec.h"

namespace groveropt {

using cplx = std::complex<double>;

/// exp(i*theta) - 1 without the cancellation in cos(theta) - 1.
inline cplx expm1i(double theta) {
    const double s = std::sin(0.5 * theta);
    return {-2.0 * s * s, std::sin(theta)};
}

/// Row-major 2x2 complex matrix.
struct Mat2 {
    std::array<cplx, 4> a{};

    static Mat2 identity() { return {{cplx{1.0}, cplx{0.0}, cplx{0.0}, cplx{1.0}}}; }

    cplx operator()(int row, int col) const { return a[static_cast<std::size_t>(2 * row + col)]; }

    friend Mat2 operator*(const Mat2& l, const Mat2& r) {
        return {{l.a[0] * r.a[0] + l.a[1] * r.a[2], l.a[0] * r.a[1] + l.a[1] * r.a[3],
                 l.a[2] * r.a[0] + l.a[3] * r.a[2], l.a[2] * r.a[1] + l.a[3] * r.a[3]}};
    }
};

/// Largest entry of |M^dagger M - I|.
double unitarity_defect(const Mat2& m);

/// Largest entrywise |l - r|.
double max_abs_diff(const Mat2& l, const Mat2& r);

/// diag(e^{i theta}, 1): the oracle exponential in plane coordinates.
Mat2 e_h(double theta);

/// I + (e^{i theta} - 1) Psi0 with Psi0 = [q0, 1-q0; q0, 1-q0].
Mat2 e_psi0(double theta, double q0);
Mat2 e_psi0(double theta, const OracleSpec& spec);

/// The matrix of a whole word: the last gate is the leftmost factor.
Mat2 word_matrix(const GateWord& word, const OracleSpec& spec);

struct PlaneState {
    cplx alpha{1.0};
    cplx beta{1.0};
    OracleSpec spec;
};

/// alpha = beta = 1, i.e. the uniform superposition.
PlaneState initial_state(const OracleSpec& spec);

/// q0|alpha|^2 + (1-q0)|beta|^2 - 1.
double norm_defect(const PlaneState& state);

PlaneState apply_gate(const PlaneState& state, const Gate& gate);

/// Applies the gates one at a time in circuit order.
PlaneState apply_word(const PlaneState& state, const GateWord& word);

/// q = q0|alpha|^2 clamped to [0, 1].
double success_prob(const PlaneState& state);

/// 1 - q computed as (1-q0)|beta|^2, which keeps full relative precision when
/// q is within a few ulps of 1. Clamped to [0, 1].
double failure_prob(const PlaneState& state);

/// Coefficients of [H, psi] = x X0 + y Y0 together with q.
struct GradCoeffs {
    double x = 0.0;
    double y = 0.0;
    double q = 0.0;
};

/// x + iy = alpha * conj(beta).
GradCoeffs grad_coeffs(const PlaneState& state);

/// Frobenius norm sqrt(2 q (1-q)) of [H, psi].
double grad_norm(double q);

/// Same norm from q and a separately computed 1 - q.
double grad_norm(double q, double one_minus_q);

}  // namespace groveropt

#endif  // GROVEROPT_PLANE_H_
