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

#ifndef GROVEROPT_DENSE_WORLD_H_
#define GROVEROPT_DENSE_WORLD_H_

// Brute-force N x N reference for the Riemannian geometry of the search cost
// f(U) = <psi0| U^dagger H U |psi0>. Nothing here uses the Grover-plane
// reduction: states are full N-vectors and operators are full matrices, so
// every identity the 2x2 path relies on can be checked against it. Intended
// for n <= 10 only.

#include <cstddef>
#include <random>
#include <vector>

#include "groveropt/dense/matrix.h"
#include "groveropt/gate_word.h"
#include "groveropt/oracle_spec.h"

namespace groveropt::dense {

inline constexpr int kMaxDenseQubits = 10;

struct DenseWorld {
    OracleSpec spec;
    std::vector<std::size_t> marked;  // sorted
    CMatrix H;                        // sum over marked x of |x><x|
    CVector psi0;                     // uniform superposition
    CMatrix psi0_proj;                // |psi0><psi0|
    CMatrix X0;                       // [H, psi0]
    CMatrix Y0;                       // i [H, X0]

    std::size_t size() const { return psi0.size(); }
};

/// Throws InvalidInput for n outside [1, 10], an empty or full marked set,
/// duplicate indices, or indices >= 2^n.
DenseWorld build_world(int qubits, std::vector<std::size_t> marked);

struct DenseState {
    CVector amplitudes;
};

DenseState uniform_state(const DenseWorld& world);

/// Closed-form gate action: I + (e^{i theta} - 1) P with P = H or psi0.
DenseState apply_gate_dense(const DenseState& state, const Gate& gate, const DenseWorld& world);
DenseState apply_word_dense(const DenseState& state, const GateWord& word, const DenseWorld& world);

/// <psi|H|psi>.
double success_prob_dense(const DenseWorld& world, const DenseState& state);

/// |psi><psi|.
CMatrix density(const DenseState& state);

/// [H, psi]: the skew-Hermitian part of grad f.
CMatrix riemannian_gradient(const DenseWorld& world, const DenseState& state);

/// Hessian action (1/2)([H, [Omega, psi]] + [[H, Omega], psi]) on u(N).
CMatrix hessian_action(const DenseWorld& world, const DenseState& state, const CMatrix& omega);

struct GradientDecomposition {
    double x = 0.0;
    double y = 0.0;
    double residual = 0.0;  // ||g - x X0 - y Y0||_F
};

/// Projects g onto the orthogonal pair {X0, Y0}.
GradientDecomposition decompose_gradient(const DenseWorld& world, const CMatrix& g);

/// x X0 + y Y0.
CMatrix plane_direction(const DenseWorld& world, double x, double y);

/// Distance from the state to span{|psi0>, H|psi0>}.
double plane_residual(const DenseWorld& world, const DenseState& state);

/// exp(t Omega)|psi> by a truncated Taylor series with substepping. Omega
/// must be skew-Hermitian.
DenseState expm_apply(const CMatrix& omega, double t, const DenseState& state);

enum class TaylorCurve {
    /// t -> exp(t Omega) U, the geodesic.
    kExponential,
    /// The five-factor Grover-compatible curve. Only first order: its t^2
    /// term carries an extra <grad, gamma''(0)> contribution away from
    /// critical points.
    kFiveFactor,
};

struct TaylorResiduals {
    double f0 = 0.0;
    double f_t = 0.0;
    double slope = 0.0;      // <grad, Omega>
    double curvature = 0.0;  // <Omega, L(Omega)>
    double first_order = 0.0;
    double second_order = 0.0;
};

/// Compares f along the curve with f(U) + t<g, Omega> + t^2/2 <Omega, L(Omega)>
/// for Omega = x X0 + y Y0.
TaylorResiduals taylor_check(const DenseWorld& world, const DenseState& state, double x, double y, double t,
                             TaylorCurve curve = TaylorCurve::kExponential);

/// Same along exp(t Omega) for an arbitrary skew-Hermitian direction.
TaylorResiduals taylor_check(const DenseWorld& world, const DenseState& state, const CMatrix& omega, double t);

/// || (V(h)|psi> - |psi>)/h - (x X0 + y Y0)|psi> || for the five-factor word.
double first_order_check_dense(const DenseWorld& world, const DenseState& state, double x, double y, double h);

struct ReachableSample {
    DenseState state;
    GateWord word;  // applied to |psi0>
};

/// Applies 1..30 random Grover-compatible gates to |psi0>.
ReachableSample random_reachable_state(const DenseWorld& world, std::mt19937_64& rng);

/// Normalized complex Gaussian vector (unitarily invariant distribution).
DenseState random_pure_state(std::size_t size, std::mt19937_64& rng);

/// Random skew-Hermitian matrix with Gaussian entries.
CMatrix random_skew_hermitian(std::size_t size, std::mt19937_64& rng);

}  // namespace groveropt::dense

#endif  // GROVEROPT_DENSE_WORLD_H_
