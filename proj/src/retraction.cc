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

#include "groveropt/retraction.h"

#include <cmath>
#include <numbers>

namespace groveropt {

FiveFactorParams five_factor_params(double x, double y) {
    FiveFactorParams p;
    p.R = std::hypot(x, y);
    if (!(p.R >= 1e-300)) {
        throw DegenerateDirection("five-factor retraction needs a nonzero direction (x, y)");
    }
    constexpr double kHalfPi = 0.5 * std::numbers::pi;
    p.A = std::atan2(y, x);
    p.a1 = p.A + kHalfPi;
    p.a2 = p.A - kHalfPi;
    p.b1 = -0.5 * p.R;
    p.b2 = 0.5 * p.R;
    return p;
}

GateWord five_factor_word(double t, double x, double y) {
    const FiveFactorParams p = five_factor_params(x, y);
    GateWord w;
    w.gates.reserve(5);
    w.push_oracle(-p.a2);
    w.push_diffusion(t * p.b2);
    w.push_oracle(-std::numbers::pi);
    w.push_diffusion(t * p.b1);
    w.push_oracle(p.a1);
    return w;
}

std::array<cplx, 2> tangent_action(const PlaneState& s, double x, double y) {
    // x X0 + y Y0 = z |u><v| - conj(z) |v><u| with z = x + iy.
    const cplx z{x, y};
    return {z * s.spec.q0_complement * s.beta, -std::conj(z) * s.spec.q0 * s.alpha};
}

double plane_norm(const PlaneState& frame, const std::array<cplx, 2>& v) {
    return std::sqrt(frame.spec.q0 * std::norm(v[0]) + frame.spec.q0_complement * std::norm(v[1]));
}

double first_order_check(const PlaneState& state, double x, double y, double h) {
    const PlaneState moved = apply_word(state, five_factor_word(h, x, y));
    const auto eta = tangent_action(state, x, y);
    const std::array<cplx, 2> residual{(moved.alpha - state.alpha) / h - eta[0],
                                       (moved.beta - state.beta) / h - eta[1]};
    return plane_norm(state, residual);
}

}  // namespace groveropt
