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

#ifndef GROVEROPT_OPTIMIZERS_H_
#define GROVEROPT_OPTIMIZERS_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "groveropt/gate_word.h"
#include "groveropt/oracle_spec.h"
#include "groveropt/plane.h"
#include "groveropt/retraction.h"

namespace groveropt {

enum class Method { kRga, kRmn, kGroverBaseline };

std::string_view method_name(Method method);
std::optional<Method> parse_method(std::string_view name);

/// Iteration settings. Unset `step` means 1/L_Rie; unset `max_iters` means
/// ceil(20 L_Rie log(1/eps)) + 100, well above the proven RGA bound.
struct RunConfig {
    Method method = Method::kRmn;
    double eps = 1e-10;
    std::optional<double> step;
    double delta = 1e-3;
    double armijo_c = 1e-4;
    double armijo_rho = 0.5;
    std::optional<std::int64_t> max_iters;
    int max_backtracks = 60;

    /// Throws InvalidInput on eps <= 0, c or rho outside (0, 1), delta <= 0,
    /// a nonpositive step, or nonpositive limits.
    void validate() const;
};

/// One row per visited state. Row k carries q_k and the gradient data at
/// state k, the step (t, gamma, backtracks) taken from it, and the oracle
/// queries spent to reach it. The last row has t = 0.
struct IterRecord {
    std::int64_t k = 0;
    double q = 0.0;
    double err = 0.0;
    double grad_norm = 0.0;
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;
    double gamma = 1.0;
    int backtracks = 0;
    std::uint64_t oracle_queries = 0;
};

enum class RunStatus { kConverged, kMaxIters };

std::string_view status_name(RunStatus status);

struct IterTrace {
    std::vector<IterRecord> records;
    RunStatus status = RunStatus::kConverged;
};

struct RunResult {
    OracleSpec spec;
    Method method = Method::kRmn;
    IterTrace trace;
    /// Accepted gate words, one per iteration, in circuit order.
    std::vector<GateWord> steps;
    /// Oracle queries spent on rejected line-search trials.
    std::uint64_t trial_queries = 0;
    PlaneState final_state;

    std::size_t iterations() const { return steps.size(); }
    bool converged() const { return trace.status == RunStatus::kConverged; }
    /// All accepted words concatenated.
    GateWord schedule() const;
    /// Queries in the accepted words only.
    std::uint64_t accepted_queries() const;
};

/// 2 + N / sqrt(2 M (N - M)).
double l_rie(const OracleSpec& spec);

/// ceil(6 L_Rie log(1/eps)): the RGA iteration bound at step 1/L_Rie.
std::int64_t rga_iteration_bound(const OracleSpec& spec, double eps);

std::int64_t default_max_iters(const OracleSpec& spec, double eps);

/// 1 / max(delta, 2q - 1).
double rmn_gamma(double q, double delta);

class BacktrackExhausted : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct ArmijoOutcome {
    double t = 1.0;
    PlaneState state;
    double q = 0.0;
    double err = 0.0;
    int backtracks = 0;
    /// The accepted word V(t gamma; x, y).
    GateWord word;
};

/// Smallest m >= 0 with t = rho^m meeting the sufficient-increase test
/// q_trial >= q + c t gamma G, G = 2q(1-q). The test is evaluated in the
/// equivalent form err_trial <= err - c t gamma G on the failure
/// probabilities, which stay resolvable after q rounds to 1.
/// Throws BacktrackExhausted past cfg.max_backtracks.
ArmijoOutcome armijo_search(const PlaneState& state, const GradCoeffs& coeffs, double gamma, const RunConfig& cfg,
                            const Retraction& retraction);
ArmijoOutcome armijo_search(const PlaneState& state, const GradCoeffs& coeffs, double gamma, const RunConfig& cfg);

/// Gradient ascent with a fixed step.
RunResult run_rga(const OracleSpec& spec, const RunConfig& cfg, const Retraction& retraction);
RunResult run_rga(const OracleSpec& spec, const RunConfig& cfg);

/// Modified Newton: direction gamma_k * grad with Armijo backtracking.
RunResult run_rmn(const OracleSpec& spec, const RunConfig& cfg, const Retraction& retraction);
RunResult run_rmn(const OracleSpec& spec, const RunConfig& cfg);

/// Fixed-angle Grover iteration [Oracle(pi), Diffusion(pi)] repeated `iters`
/// times. Always reports kConverged.
RunResult run_grover_baseline(const OracleSpec& spec, std::int64_t iters);

}  // namespace groveropt

#endif  // GROVEROPT_OPTIMIZERS_H_
