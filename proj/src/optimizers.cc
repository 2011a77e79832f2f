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

#include "groveropt/optimizers.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace groveropt {

std::string_view method_name(Method method) {
    switch (method) {
        case Method::kRga:
            return "rga";
        case Method::kRmn:
            return "rmn";
        case Method::kGroverBaseline:
            return "grover";
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
    if (name == "rga") return Method::kRga;
    if (name == "rmn") return Method::kRmn;
    if (name == "grover") return Method::kGroverBaseline;
    return std::nullopt;
}

std::string_view status_name(RunStatus status) {
    return status == RunStatus::kConverged ? "converged" : "max_iters";
}

void RunConfig::validate() const {
    if (!(eps > 0.0)) throw InvalidInput("eps must be positive");
    if (!(armijo_c > 0.0 && armijo_c < 1.0)) throw InvalidInput("Armijo c must lie in (0, 1)");
    if (!(armijo_rho > 0.0 && armijo_rho < 1.0)) throw InvalidInput("Armijo rho must lie in (0, 1)");
    if (!(delta > 0.0)) throw InvalidInput("damping delta must be positive");
    if (step && !(*step > 0.0 && std::isfinite(*step))) throw InvalidInput("step must be positive and finite");
    if (max_iters && *max_iters < 0) throw InvalidInput("max_iters must be nonnegative");
    if (max_backtracks <= 0) throw InvalidInput("max_backtracks must be positive");
}

GateWord RunResult::schedule() const {
    GateWord all;
    for (const GateWord& w : steps) {
        all.append(w);
    }
    return all;
}

std::uint64_t RunResult::accepted_queries() const {
    std::uint64_t total = 0;
    for (const GateWord& w : steps) {
        total += oracle_count(w);
    }
    return total;
}

double l_rie(const OracleSpec& spec) {
    const double n = static_cast<double>(spec.size);
    const double m = static_cast<double>(spec.marked);
    const double rest = static_cast<double>(spec.size - spec.marked);
    return 2.0 + n / std::sqrt(2.0 * m * rest);
}

std::int64_t rga_iteration_bound(const OracleSpec& spec, double eps) {
    return static_cast<std::int64_t>(std::ceil(6.0 * l_rie(spec) * std::log(1.0 / eps)));
}

std::int64_t default_max_iters(const OracleSpec& spec, double eps) {
    const double log_term = std::max(0.0, std::log(1.0 / eps));
    return static_cast<std::int64_t>(std::ceil(20.0 * l_rie(spec) * log_term)) + 100;
}

double rmn_gamma(double q, double delta) { return 1.0 / std::max(delta, 2.0 * q - 1.0); }

namespace {

const FiveFactorRetraction kFiveFactor;

IterRecord make_record(std::int64_t k, const PlaneState& s, std::uint64_t queries) {
    IterRecord r;
    r.k = k;
    const GradCoeffs c = grad_coeffs(s);
    r.q = c.q;
    r.err = failure_prob(s);
    r.grad_norm = grad_norm(r.q, r.err);
    r.x = c.x;
    r.y = c.y;
    r.oracle_queries = queries;
    return r;
}

std::int64_t resolve_max_iters(const OracleSpec& spec, const RunConfig& cfg) {
    return cfg.max_iters ? *cfg.max_iters : default_max_iters(spec, cfg.eps);
}

}  // namespace

ArmijoOutcome armijo_search(const PlaneState& state, const GradCoeffs& coeffs, double gamma, const RunConfig& cfg,
                            const Retraction& retraction) {
    const double err = failure_prob(state);
    const double g_sq = 2.0 * coeffs.q * err;
    if (!(gamma > 0.0) || !(g_sq > 0.0)) {
        throw InvalidInput("line search needs gamma > 0 and a nonzero gradient");
    }
    double t = 1.0;
    for (int m = 0; m <= cfg.max_backtracks; ++m) {
        GateWord word = retraction.word(t * gamma, coeffs.x, coeffs.y);
        PlaneState trial = apply_word(state, word);
        const double err_trial = failure_prob(trial);
        if (err_trial <= err - cfg.armijo_c * t * gamma * g_sq) {
            return {t, trial, success_prob(trial), err_trial, m, std::move(word)};
        }
        t *= cfg.armijo_rho;
    }
    throw BacktrackExhausted("Armijo line search exceeded " + std::to_string(cfg.max_backtracks) +
                             " backtracks (q = " + std::to_string(coeffs.q) + ")");
}

ArmijoOutcome armijo_search(const PlaneState& state, const GradCoeffs& coeffs, double gamma, const RunConfig& cfg) {
    return armijo_search(state, coeffs, gamma, cfg, kFiveFactor);
}

RunResult run_rga(const OracleSpec& spec, const RunConfig& cfg, const Retraction& retraction) {
    cfg.validate();
    const double step = cfg.step ? *cfg.step : 1.0 / l_rie(spec);
    const std::int64_t max_iters = resolve_max_iters(spec, cfg);

    RunResult out;
    out.spec = spec;
    out.method = Method::kRga;
    PlaneState state = initial_state(spec);
    std::uint64_t queries = 0;
    std::int64_t k = 0;
    out.trace.records.push_back(make_record(k, state, queries));
    while (out.trace.records.back().grad_norm > cfg.eps && k < max_iters) {
        IterRecord& cur = out.trace.records.back();
        GateWord word = retraction.word(step, cur.x, cur.y);
        cur.t = step;
        state = apply_word(state, word);
        queries += oracle_count(word);
        out.steps.push_back(std::move(word));
        ++k;
        out.trace.records.push_back(make_record(k, state, queries));
    }
    out.trace.status = out.trace.records.back().grad_norm <= cfg.eps ? RunStatus::kConverged : RunStatus::kMaxIters;
    out.final_state = state;
    return out;
}

RunResult run_rga(const OracleSpec& spec, const RunConfig& cfg) { return run_rga(spec, cfg, kFiveFactor); }

RunResult run_rmn(const OracleSpec& spec, const RunConfig& cfg, const Retraction& retraction) {
    cfg.validate();
    const std::int64_t max_iters = resolve_max_iters(spec, cfg);

    RunResult out;
    out.spec = spec;
    out.method = Method::kRmn;
    PlaneState state = initial_state(spec);
    std::uint64_t queries = 0;
    std::int64_t k = 0;
    out.trace.records.push_back(make_record(k, state, queries));
    out.trace.records.back().gamma = rmn_gamma(out.trace.records.back().q, cfg.delta);
    while (out.trace.records.back().grad_norm > cfg.eps && k < max_iters) {
        IterRecord& cur = out.trace.records.back();
        const GradCoeffs coeffs{cur.x, cur.y, cur.q};
        ArmijoOutcome step = armijo_search(state, coeffs, cur.gamma, cfg, retraction);
        cur.t = step.t;
        cur.backtracks = step.backtracks;
        const std::uint64_t per_trial = oracle_count(step.word);
        queries += per_trial * static_cast<std::uint64_t>(step.backtracks + 1);
        out.trial_queries += per_trial * static_cast<std::uint64_t>(step.backtracks);
        state = step.state;
        out.steps.push_back(std::move(step.word));
        ++k;
        out.trace.records.push_back(make_record(k, state, queries));
        out.trace.records.back().gamma = rmn_gamma(out.trace.records.back().q, cfg.delta);
    }
    out.trace.status = out.trace.records.back().grad_norm <= cfg.eps ? RunStatus::kConverged : RunStatus::kMaxIters;
    out.final_state = state;
    return out;
}

RunResult run_rmn(const OracleSpec& spec, const RunConfig& cfg) { return run_rmn(spec, cfg, kFiveFactor); }

RunResult run_grover_baseline(const OracleSpec& spec, std::int64_t iters) {
    if (iters < 0) throw InvalidInput("iteration count must be nonnegative");
    GateWord grover_step;
    grover_step.push_oracle(std::numbers::pi);
    grover_step.push_diffusion(std::numbers::pi);

    RunResult out;
    out.spec = spec;
    out.method = Method::kGroverBaseline;
    PlaneState state = initial_state(spec);
    std::uint64_t queries = 0;
    out.trace.records.push_back(make_record(0, state, queries));
    for (std::int64_t k = 1; k <= iters; ++k) {
        state = apply_word(state, grover_step);
        queries += oracle_count(grover_step);
        out.steps.push_back(grover_step);
        out.trace.records.push_back(make_record(k, state, queries));
    }
    out.trace.status = RunStatus::kConverged;
    out.final_state = state;
    return out;
}

}  // namespace groveropt
