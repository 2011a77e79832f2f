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

#include "groveropt/dense/world.h"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "groveropt/plane.h"

namespace groveropt::dense {
namespace {

using std::numbers::pi;

// |psi*> : uniform over the marked set.
DenseState target_state(const DenseWorld& w) {
    CVector a(w.size());
    const double amp = 1.0 / std::sqrt(static_cast<double>(w.marked.size()));
    for (std::size_t i : w.marked) a[i] = amp;
    return {a};
}

// Plane state with q = 1/2.
DenseState half_state(const DenseWorld& w) {
    const double m = static_cast<double>(w.marked.size());
    const double rest = static_cast<double>(w.size()) - m;
    CVector a(w.size(), cplx{1.0 / std::sqrt(2.0 * rest)});
    for (std::size_t i : w.marked) a[i] = 1.0 / std::sqrt(2.0 * m);
    return {a};
}

TEST(DenseWorld, BuildExamples) {
    const DenseWorld w = build_world(2, {3});
    EXPECT_EQ(w.spec.q0, 0.25);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(w.H(i, j), cplx{i == 3 && j == 3 ? 1.0 : 0.0});

    EXPECT_THROW(build_world(1, {0, 1}), InvalidInput);
    EXPECT_THROW(build_world(11, {0}), InvalidInput);
    EXPECT_THROW(build_world(0, {0}), InvalidInput);
    EXPECT_THROW(build_world(3, {}), InvalidInput);
    EXPECT_THROW(build_world(3, {1, 1}), InvalidInput);
    EXPECT_THROW(build_world(3, {8}), InvalidInput);

    const DenseWorld w4 = build_world(4, {5});
    EXPECT_NEAR(frobenius_norm(w4.X0), 0.342327, 1e-6);
    EXPECT_NEAR(frobenius_norm(w4.X0), std::sqrt(2.0 * w4.spec.q0 * w4.spec.q0_complement), 1e-12);
}

TEST(DenseWorld, Invariants) {
    for (int n = 1; n <= 7; ++n) {
        const DenseWorld w = build_world(n, n > 2 ? std::vector<std::size_t>{1, 4} : std::vector<std::size_t>{1});
        EXPECT_LE(hermitian_defect(w.H), 1e-15);
        EXPECT_LE(max_abs(w.H * w.H - w.H), 1e-12);
        cplx trace{};
        for (std::size_t i = 0; i < w.size(); ++i) trace += w.H(i, i);
        EXPECT_EQ(trace.real(), static_cast<double>(w.marked.size()));
        EXPECT_LE(skew_defect(w.X0), 1e-15);
        EXPECT_LE(skew_defect(w.Y0), 1e-15);
        EXPECT_NEAR(frobenius_inner(w.X0, w.Y0), 0.0, 1e-12);
        const double norm = std::sqrt(2.0 * w.spec.q0 * w.spec.q0_complement);
        EXPECT_NEAR(frobenius_norm(w.X0), norm, 1e-12);
        EXPECT_NEAR(frobenius_norm(w.Y0), norm, 1e-12);
    }
}

TEST(DenseGates, Examples) {
    const DenseWorld w = build_world(2, {3});
    const DenseState s0 = uniform_state(w);
    const DenseState same = apply_gate_dense(s0, {GateKind::kDiffusion, 0.0}, w);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(same.amplitudes[i], s0.amplitudes[i]);

    const DenseState flipped = apply_gate_dense(s0, {GateKind::kOracle, pi}, w);
    const double want[] = {0.5, 0.5, 0.5, -0.5};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(flipped.amplitudes[i] - want[i]), 0.0, 1e-15);

    const DenseState found = apply_gate_dense(flipped, {GateKind::kDiffusion, pi}, w);
    EXPECT_NEAR(success_prob_dense(w, found), 1.0, 1e-15);
}

TEST(DenseGates, PreserveNorm) {
    std::mt19937_64 rng(41);
    const DenseWorld w = build_world(6, {2, 9, 40});
    for (int trial = 0; trial < 50; ++trial) {
        const ReachableSample s = random_reachable_state(w, rng);
        EXPECT_NEAR(vector_norm(s.state.amplitudes), 1.0, 1e-12);
    }
}

TEST(DenseGradient, Examples) {
    const DenseWorld w = build_world(4, {5, 7});
    EXPECT_LE(max_abs(riemannian_gradient(w, target_state(w))), 1e-12);

    CVector away(w.size());
    away[0] = 1.0;
    EXPECT_EQ(max_abs(riemannian_gradient(w, DenseState{away})), 0.0);

    EXPECT_LE(max_abs(riemannian_gradient(w, uniform_state(w)) - w.X0), 1e-16);
}

TEST(DenseHessian, Examples) {
    const DenseWorld w = build_world(4, {5});
    std::mt19937_64 rng(42);
    const DenseState s = random_reachable_state(w, rng).state;
    EXPECT_EQ(max_abs(hessian_action(w, s, CMatrix(w.size()))), 0.0);

    const CMatrix g = riemannian_gradient(w, s);
    const double q = success_prob_dense(w, s);
    const CMatrix lg = hessian_action(w, s, g);
    EXPECT_LE(frobenius_norm(lg - cplx{1.0 - 2.0 * q} * g), 1e-11);

    const DenseState half = half_state(w);
    EXPECT_NEAR(success_prob_dense(w, half), 0.5, 1e-15);
    EXPECT_LE(frobenius_norm(hessian_action(w, half, riemannian_gradient(w, half))), 1e-11);
}

TEST(DenseHessian, SelfAdjoint) {
    std::mt19937_64 rng(43);
    const DenseWorld w = build_world(4, {1, 12});
    for (int trial = 0; trial < 100; ++trial) {
        const DenseState s = random_pure_state(w.size(), rng);
        const CMatrix xi = random_skew_hermitian(w.size(), rng);
        const CMatrix om = random_skew_hermitian(w.size(), rng);
        const CMatrix l_om = hessian_action(w, s, om);
        EXPECT_LE(skew_defect(l_om), 1e-13);
        EXPECT_NEAR(frobenius_inner(xi, l_om), frobenius_inner(hessian_action(w, s, xi), om), 1e-10);
    }
}

TEST(DenseHessian, GradientIsEigenvectorForArbitraryStates) {
    std::mt19937_64 rng(44);
    for (int n = 2; n <= 6; ++n) {
        const DenseWorld w = build_world(n, {0});
        for (int trial = 0; trial < 10; ++trial) {
            const DenseState s = random_pure_state(w.size(), rng);
            const CMatrix g = riemannian_gradient(w, s);
            const double q = success_prob_dense(w, s);
            EXPECT_LE(frobenius_norm(hessian_action(w, s, g) - cplx{1.0 - 2.0 * q} * g),
                      1e-11 * std::max(1.0, frobenius_norm(g)));
        }
    }
}

TEST(DenseDecomposition, Examples) {
    const DenseWorld w = build_world(4, {3});
    GradientDecomposition d = decompose_gradient(w, w.X0);
    EXPECT_NEAR(d.x, 1.0, 1e-15);
    EXPECT_NEAR(d.y, 0.0, 1e-15);
    EXPECT_NEAR(d.residual, 0.0, 1e-15);

    d = decompose_gradient(w, cplx{0.3} * w.X0 - cplx{0.7} * w.Y0);
    EXPECT_NEAR(d.x, 0.3, 1e-14);
    EXPECT_NEAR(d.y, -0.7, 1e-14);
    EXPECT_NEAR(d.residual, 0.0, 1e-14);
}

TEST(DenseDecomposition, MatchesPlaneCoefficients) {
    std::mt19937_64 rng(45);
    for (int n = 1; n <= 8; ++n) {
        const DenseWorld w = build_world(n, {std::size_t{1} << (n - 1)});
        for (int trial = 0; trial < 10; ++trial) {
            const GateWord word = random_grover_word(rng, 5);
            const DenseState ds = apply_word_dense(uniform_state(w), word, w);
            const GradientDecomposition d = decompose_gradient(w, riemannian_gradient(w, ds));
            const GradCoeffs c = grad_coeffs(apply_word(initial_state(w.spec), word));
            EXPECT_LE(d.residual, 1e-11);
            EXPECT_NEAR(d.x, c.x, 1e-11) << "n=" << n;
            EXPECT_NEAR(d.y, c.y, 1e-11) << "n=" << n;
            EXPECT_NEAR(success_prob_dense(w, ds), c.q, 1e-12);
            EXPECT_LE(plane_residual(w, ds), 1e-11);
        }
    }
}

TEST(DenseDecomposition, ArbitraryStatesLeaveThePlane) {
    std::mt19937_64 rng(46);
    const DenseWorld w = build_world(5, {3});
    const DenseState s = random_pure_state(w.size(), rng);
    EXPECT_GT(plane_residual(w, s), 0.1);
    EXPECT_GT(decompose_gradient(w, riemannian_gradient(w, s)).residual, 1e-3);
}

TEST(DenseNorms, CommutatorIdentitiesAtReachableStates) {
    std::mt19937_64 rng(47);
    for (int n = 2; n <= 7; ++n) {
        const DenseWorld w = build_world(n, {0, 1});
        for (int trial = 0; trial < 10; ++trial) {
            const DenseState s = random_reachable_state(w, rng).state;
            const double q = success_prob_dense(w, s);
            const CMatrix x = riemannian_gradient(w, s);
            const CMatrix y = cplx{0.0, 1.0} * commutator(w.H, x);
            const double want = std::sqrt(2.0 * q * (1.0 - q));
            EXPECT_NEAR(frobenius_norm(x), want, 1e-11);
            EXPECT_NEAR(frobenius_norm(y), want, 1e-11);
            EXPECT_NEAR(frobenius_inner(x, y), 0.0, 1e-11);
        }
    }
}

TEST(DenseExpm, UnitaryAndConsistent) {
    std::mt19937_64 rng(48);
    const CMatrix om = random_skew_hermitian(8, rng);
    const DenseState s = random_pure_state(8, rng);
    EXPECT_NEAR(vector_norm(expm_apply(om, 3.0, s).amplitudes), 1.0, 1e-12);
    const DenseState two = expm_apply(om, 0.4, expm_apply(om, 0.6, s));
    const DenseState one = expm_apply(om, 1.0, s);
    for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(std::abs(two.amplitudes[i] - one.amplitudes[i]), 0.0, 1e-12);
    const DenseState id = expm_apply(CMatrix(8), 1.0, s);
    for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(id.amplitudes[i], s.amplitudes[i]);
}

TEST(DenseTaylor, ExponentialCurveIsThirdOrder) {
    std::mt19937_64 rng(49);
    for (int n = 2; n <= 6; ++n) {
        const DenseWorld w = build_world(n, {0});
        for (int trial = 0; trial < 5; ++trial) {
            const DenseState s = random_reachable_state(w, rng).state;
            const TaylorResiduals a = taylor_check(w, s, 0.6, -0.4, 1e-2);
            const TaylorResiduals b = taylor_check(w, s, 0.6, -0.4, 5e-3);
            const double ratio = a.second_order / b.second_order;
            EXPECT_GE(ratio, 4.8) << "n=" << n;
            EXPECT_LE(ratio, 11.2) << "n=" << n;
        }
    }
}

TEST(DenseTaylor, ZeroDirectionIsConstant) {
    const DenseWorld w = build_world(3, {2});
    const TaylorResiduals r = taylor_check(w, uniform_state(w), 0.0, 0.0, 1e-2);
    EXPECT_EQ(r.first_order, 0.0);
    EXPECT_EQ(r.second_order, 0.0);
    EXPECT_EQ(r.f_t, r.f0);
}

// The gate curve agrees with the exponential only to first order. Its t^2
// deviation is invisible to f along the gradient itself, so the residual is
// t^3 there and t^2 along the orthogonal plane direction.
TEST(DenseTaylor, FiveFactorCurveOrders) {
    std::mt19937_64 rng(50);
    const DenseWorld w = build_world(4, {0});
    for (int trial = 0; trial < 5; ++trial) {
        const DenseState s = random_reachable_state(w, rng).state;
        const GradientDecomposition d = decompose_gradient(w, riemannian_gradient(w, s));
        auto ratio = [&](double x, double y) {
            return taylor_check(w, s, x, y, 2e-3, TaylorCurve::kFiveFactor).second_order /
                   taylor_check(w, s, x, y, 1e-3, TaylorCurve::kFiveFactor).second_order;
        };
        EXPECT_NEAR(ratio(d.x, d.y), 8.0, 0.5);
        EXPECT_NEAR(ratio(-d.y, d.x), 4.0, 0.5);
    }
}

TEST(DenseTaylor, MaximizerDecreasesQuadratically) {
    const DenseWorld w = build_world(4, {6});
    const DenseState star = target_state(w);
    for (auto [x, y] : {std::pair{1.0, 0.0}, std::pair{0.3, -0.8}}) {
        for (TaylorCurve curve : {TaylorCurve::kExponential, TaylorCurve::kFiveFactor}) {
            const TaylorResiduals r = taylor_check(w, star, x, y, 1e-3, curve);
            EXPECT_NEAR(r.slope, 0.0, 1e-15);
            EXPECT_LT(r.curvature, 0.0);
            const double fitted = (r.f_t - r.f0) / 1e-6;
            EXPECT_NEAR(fitted, 0.5 * r.curvature, 1e-4 * std::abs(r.curvature));
        }
    }
}

}  // namespace
}  // namespace groveropt::dense
