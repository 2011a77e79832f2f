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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "groveropt/dense/kernels.h"
#include "groveropt/retraction.h"

namespace groveropt::dense {

DenseWorld build_world(int qubits, std::vector<std::size_t> marked) {
    if (qubits < 1 || qubits > kMaxDenseQubits) {
        throw InvalidInput("dense mode supports 1..10 qubits, got " + std::to_string(qubits));
    }
    const std::size_t n = std::size_t{1} << qubits;
    std::sort(marked.begin(), marked.end());
    if (std::adjacent_find(marked.begin(), marked.end()) != marked.end()) {
        throw InvalidInput("marked set contains duplicate indices");
    }
    if (!marked.empty() && marked.back() >= n) {
        throw InvalidInput("marked index out of range");
    }

    DenseWorld w;
    w.spec = make_spec(qubits, marked.size());  // rejects empty and full sets
    w.marked = std::move(marked);
    w.H = CMatrix(n);
    for (std::size_t i : w.marked) w.H(i, i) = 1.0;
    w.psi0.assign(n, cplx{1.0 / std::sqrt(static_cast<double>(n))});
    w.psi0_proj = CMatrix::outer(w.psi0, w.psi0);
    w.X0 = commutator(w.H, w.psi0_proj);
    w.Y0 = cplx{0.0, 1.0} * commutator(w.H, w.X0);
    return w;
}

DenseState uniform_state(const DenseWorld& world) { return DenseState{world.psi0}; }

DenseState apply_gate_dense(const DenseState& state, const Gate& gate, const DenseWorld& world) {
    DenseState out = state;
    const cplx phase_minus_one = std::exp(cplx{0.0, gate.angle}) - 1.0;
    if (gate.kind == GateKind::kOracle) {
        for (std::size_t i : world.marked) {
            out.amplitudes[i] += phase_minus_one * state.amplitudes[i];
        }
    } else {
        const cplx overlap = simd::dotc(world.psi0, state.amplitudes);
        simd::axpy(phase_minus_one * overlap, world.psi0, out.amplitudes);
    }
    return out;
}

DenseState apply_word_dense(const DenseState& state, const GateWord& word, const DenseWorld& world) {
    DenseState out = state;
    for (const Gate& g : word.gates) {
        out = apply_gate_dense(out, g, world);
    }
    return out;
}

double success_prob_dense(const DenseWorld& world, const DenseState& state) {
    const CVector h_psi = matvec(world.H, state.amplitudes);
    return simd::dotc(state.amplitudes, h_psi).real();
}

CMatrix density(const DenseState& state) { return CMatrix::outer(state.amplitudes, state.amplitudes); }

CMatrix riemannian_gradient(const DenseWorld& world, const DenseState& state) {
    return commutator(world.H, density(state));
}

CMatrix hessian_action(const DenseWorld& world, const DenseState& state, const CMatrix& omega) {
    const CMatrix psi = density(state);
    CMatrix out = commutator(world.H, commutator(omega, psi));
    out += commutator(commutator(world.H, omega), psi);
    out *= 0.5;
    return out;
}

GradientDecomposition decompose_gradient(const DenseWorld& world, const CMatrix& g) {
    GradientDecomposition d;
    d.x = frobenius_inner(world.X0, g) / frobenius_inner(world.X0, world.X0);
    d.y = frobenius_inner(world.Y0, g) / frobenius_inner(world.Y0, world.Y0);
    d.residual = frobenius_norm(g - plane_direction(world, d.x, d.y));
    return d;
}

CMatrix plane_direction(const DenseWorld& world, double x, double y) {
    return cplx{x} * world.X0 + cplx{y} * world.Y0;
}

double plane_residual(const DenseWorld& world, const DenseState& state) {
    CVector u = matvec(world.H, world.psi0);
    CVector v = world.psi0;
    simd::axpy(-1.0, u, v);
    const double nu = vector_norm(u);
    const double nv = vector_norm(v);
    for (auto& e : u) e /= nu;
    for (auto& e : v) e /= nv;
    CVector r = state.amplitudes;
    simd::axpy(-simd::dotc(u, state.amplitudes), u, r);
    simd::axpy(-simd::dotc(v, state.amplitudes), v, r);
    return vector_norm(r);
}

DenseState expm_apply(const CMatrix& omega, double t, const DenseState& state) {
    const double scale = std::abs(t) * frobenius_norm(omega);
    const int substeps = std::max(1, static_cast<int>(std::ceil(scale / 0.5)));
    const double tau = t / substeps;
    CVector acc = state.amplitudes;
    for (int s = 0; s < substeps; ++s) {
        CVector term = acc;
        CVector sum = acc;
        for (int k = 1; k <= 60; ++k) {
            term = matvec(omega, term);
            const cplx factor{tau / k};
            for (auto& e : term) e *= factor;
            simd::axpy(1.0, term, sum);
            if (vector_norm(term) <= 1e-18 * vector_norm(sum)) break;
        }
        acc = std::move(sum);
    }
    return DenseState{std::move(acc)};
}

namespace {

TaylorResiduals taylor_terms(const DenseWorld& world, const DenseState& state, const CMatrix& omega, double t,
                             const DenseState& moved) {
    TaylorResiduals r;
    r.f0 = success_prob_dense(world, state);
    r.f_t = success_prob_dense(world, moved);
    r.slope = frobenius_inner(riemannian_gradient(world, state), omega);
    r.curvature = frobenius_inner(omega, hessian_action(world, state, omega));
    const double linear = r.f_t - r.f0 - t * r.slope;
    r.first_order = std::abs(linear);
    r.second_order = std::abs(linear - 0.5 * t * t * r.curvature);
    return r;
}

}  // namespace

TaylorResiduals taylor_check(const DenseWorld& world, const DenseState& state, double x, double y, double t,
                             TaylorCurve curve) {
    const CMatrix omega = plane_direction(world, x, y);
    if (x == 0.0 && y == 0.0) {
        return taylor_terms(world, state, omega, t, state);
    }
    const DenseState moved = curve == TaylorCurve::kExponential
                                 ? expm_apply(omega, t, state)
                                 : apply_word_dense(state, five_factor_word(t, x, y), world);
    return taylor_terms(world, state, omega, t, moved);
}

TaylorResiduals taylor_check(const DenseWorld& world, const DenseState& state, const CMatrix& omega, double t) {
    return taylor_terms(world, state, omega, t, expm_apply(omega, t, state));
}

double first_order_check_dense(const DenseWorld& world, const DenseState& state, double x, double y, double h) {
    const DenseState moved = apply_word_dense(state, five_factor_word(h, x, y), world);
    const CVector eta = matvec(plane_direction(world, x, y), state.amplitudes);
    CVector r(state.amplitudes.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = (moved.amplitudes[i] - state.amplitudes[i]) / h - eta[i];
    }
    return vector_norm(r);
}

ReachableSample random_reachable_state(const DenseWorld& world, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> length(1, 30);
    ReachableSample s;
    s.word = random_grover_word(rng, length(rng));
    s.state = apply_word_dense(uniform_state(world), s.word, world);
    return s;
}

DenseState random_pure_state(std::size_t size, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    CVector v(size);
    for (auto& e : v) e = {normal(rng), normal(rng)};
    const double nrm = vector_norm(v);
    for (auto& e : v) e /= nrm;
    return DenseState{std::move(v)};
}

CMatrix random_skew_hermitian(std::size_t size, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    CMatrix a(size);
    for (std::size_t i = 0; i < size; ++i) {
        a(i, i) = {0.0, normal(rng)};
        for (std::size_t j = i + 1; j < size; ++j) {
            a(i, j) = {normal(rng), normal(rng)};
            a(j, i) = -std::conj(a(i, j));
        }
    }
    return a;
}

}  // namespace groveropt::dense
