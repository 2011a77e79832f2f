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

#include "groveropt/plane.h"

#include <algorithm>
#include <cmath>

namespace groveropt {

double unitarity_defect(const Mat2& m) {
    double worst = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            cplx s = std::conj(m(0, i)) * m(0, j) + std::conj(m(1, i)) * m(1, j);
            if (i == j) {
                s -= 1.0;
            }
            worst = std::max(worst, std::abs(s));
        }
    }
    return worst;
}

double max_abs_diff(const Mat2& l, const Mat2& r) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        worst = std::max(worst, std::abs(l.a[i] - r.a[i]));
    }
    return worst;
}

Mat2 e_h(double theta) {
    return {{std::polar(1.0, theta), cplx{0.0}, cplx{0.0}, cplx{1.0}}};
}

namespace {

Mat2 e_psi0_impl(double theta, double q0, double q0c) {
    const cplx d = expm1i(theta);
    return {{1.0 + d * q0, d * q0c, d * q0, 1.0 + d * q0c}};
}

}  // namespace

Mat2 e_psi0(double theta, double q0) { return e_psi0_impl(theta, q0, 1.0 - q0); }

Mat2 e_psi0(double theta, const OracleSpec& spec) { return e_psi0_impl(theta, spec.q0, spec.q0_complement); }

Mat2 word_matrix(const GateWord& word, const OracleSpec& spec) {
    Mat2 m = Mat2::identity();
    for (const Gate& g : word.gates) {
        m = (g.kind == GateKind::kOracle ? e_h(g.angle) : e_psi0(g.angle, spec)) * m;
    }
    return m;
}

PlaneState initial_state(const OracleSpec& spec) { return PlaneState{cplx{1.0}, cplx{1.0}, spec}; }

double norm_defect(const PlaneState& s) {
    return s.spec.q0 * std::norm(s.alpha) + s.spec.q0_complement * std::norm(s.beta) - 1.0;
}

PlaneState apply_gate(const PlaneState& state, const Gate& gate) {
    PlaneState out = state;
    if (gate.kind == GateKind::kOracle) {
        out.alpha *= std::polar(1.0, gate.angle);
    } else {
        // (e^{i theta} - 1) <psi0|state> lands on u + v in both coordinates.
        const cplx overlap = state.spec.q0 * state.alpha + state.spec.q0_complement * state.beta;
        const cplx kick = expm1i(gate.angle) * overlap;
        out.alpha += kick;
        out.beta += kick;
    }
    return out;
}

PlaneState apply_word(const PlaneState& state, const GateWord& word) {
    PlaneState out = state;
    for (const Gate& g : word.gates) {
        out = apply_gate(out, g);
    }
    return out;
}

double success_prob(const PlaneState& s) { return std::clamp(s.spec.q0 * std::norm(s.alpha), 0.0, 1.0); }

double failure_prob(const PlaneState& s) {
    return std::clamp(s.spec.q0_complement * std::norm(s.beta), 0.0, 1.0);
}

GradCoeffs grad_coeffs(const PlaneState& s) {
    const cplx z = s.alpha * std::conj(s.beta);
    return {z.real(), z.imag(), success_prob(s)};
}

double grad_norm(double q) { return std::sqrt(std::max(0.0, 2.0 * q * (1.0 - q))); }

double grad_norm(double q, double one_minus_q) { return std::sqrt(std::max(0.0, 2.0 * q * one_minus_q)); }

}  // namespace groveropt
