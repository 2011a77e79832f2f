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

#ifndef GROVEROPT_RETRACTION_H_
#define GROVEROPT_RETRACTION_H_

#include <stdexcept>

#include "groveropt/gate_word.h"
#include "groveropt/plane.h"

namespace groveropt {

/// Thrown when a retraction is asked to move along the zero direction.
class DegenerateDirection : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// A Grover-compatible retraction restricted to span{X0, Y0}: maps the
/// tangent direction x X0 + y Y0 scaled by t to the gates V(t; x, y) that are
/// prepended to the current circuit.
class Retraction {
   public:
    virtual ~Retraction() = default;
    virtual GateWord word(double t, double x, double y) const = 0;
};

/// Angles of the five-factor retraction. a1 - a2 = pi and b2 = -b1 = R/2,
/// where A and R are the argument and modulus of x + iy.
struct FiveFactorParams {
    double a1 = 0.0;
    double a2 = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
    double A = 0.0;
    double R = 0.0;
};

/// Throws DegenerateDirection when hypot(x, y) < 1e-300.
FiveFactorParams five_factor_params(double x, double y);

/// [Oracle(-a2), Diffusion(t b2), Oracle(-pi), Diffusion(t b1), Oracle(a1)]
/// in circuit order; three oracle queries.
GateWord five_factor_word(double t, double x, double y);

class FiveFactorRetraction final : public Retraction {
   public:
    GateWord word(double t, double x, double y) const override { return five_factor_word(t, x, y); }
};

/// Tangent vector (x X0 + y Y0)|psi> in plane coordinates.
std::array<cplx, 2> tangent_action(const PlaneState& state, double x, double y);

/// Hilbert-space norm of a plane-coordinate vector a u + b v.
double plane_norm(const PlaneState& frame, const std::array<cplx, 2>& v);

/// || (V(h)|psi> - |psi>)/h - (x X0 + y Y0)|psi> || for the five-factor curve
/// through `state`. Scales linearly in h for a first-order retraction.
double first_order_check(const PlaneState& state, double x, double y, double h);

}  // namespace groveropt

#endif  // GROVEROPT_RETRACTION_H_
