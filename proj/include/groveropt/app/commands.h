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

#ifndef GROVEROPT_APP_COMMANDS_H_
#define GROVEROPT_APP_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "groveropt/optimizers.h"

namespace groveropt::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNonConvergence = 3;
inline constexpr int kExitCrosscheckFailed = 4;

/// Per-step agreement required between the plane and dense simulations.
inline constexpr double kCrosscheckTolerance = 1e-12;

struct RunOptions {
    Method method = Method::kRmn;
    int qubits = 4;
    std::uint64_t marked = 1;
    double eps = 1e-10;
    std::string step = "auto";  // "auto" = 1/L_Rie, otherwise a positive real
    double delta = 1e-3;
    std::optional<std::int64_t> max_iters;
    std::int64_t iters = 0;  // grover baseline only
    std::string trace_path;
    std::string schedule_path;
};

struct ScalingOptions {
    Method method = Method::kRmn;
    int n_min = 2;
    int n_max = 20;
    std::uint64_t marked = 1;
    double eps = 1e-6;
    std::string step = "auto";
    double delta = 1e-3;
    std::string csv_path;  // empty: CSV goes to stdout
    unsigned jobs = 0;     // 0: hardware concurrency
};

struct CrosscheckOptions {
    int qubits = 4;
    std::uint64_t marked = 1;
    double eps = 1e-10;
    std::string step = "auto";
    double delta = 1e-3;
    std::optional<std::int64_t> max_iters;
    std::optional<std::uint64_t> seed;  // randomizes which indices are marked
    std::string csv_path;
};

struct ReplayOptions {
    std::string schedule_path;
};

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err);
int cmd_export_schedule(const RunOptions& opts, std::ostream& out, std::ostream& err);
int cmd_scaling(const ScalingOptions& opts, std::ostream& out, std::ostream& err);
int cmd_crosscheck(const CrosscheckOptions& opts, std::ostream& out, std::ostream& err);
int cmd_replay(const ReplayOptions& opts, std::ostream& out, std::ostream& err);

/// Parses argv (program name first) and dispatches to a subcommand.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Ordinary least squares y ~ slope * x + intercept. Needs at least two
/// distinct x values.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

/// Per-iteration plane-vs-dense discrepancy for one method.
struct CrosscheckRow {
    std::int64_t k = 0;
    double dq = 0.0;
    double dx = 0.0;
    double dy = 0.0;
};

/// Runs the plane optimizer, then replays the accepted words on the dense
/// world (marked indices as given) and compares q, x, y after every step.
std::vector<CrosscheckRow> mirror_run(const RunResult& run, const std::vector<std::size_t>& marked);

}  // namespace groveropt::app

#endif  // GROVEROPT_APP_COMMANDS_H_
