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

#include "groveropt/app/commands.h"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "groveropt/dense/world.h"
#include "groveropt/io/schedule_json.h"
#include "groveropt/io/trace_csv.h"

namespace groveropt::app {
namespace {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::optional<double> parse_step(const std::string& step) {
    if (step == "auto") return std::nullopt;
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(step, &used);
    } catch (const std::exception&) {
        throw UsageError("--step must be 'auto' or a positive real, got '" + step + "'");
    }
    if (used != step.size() || !(value > 0.0) || !std::isfinite(value)) {
        throw UsageError("--step must be 'auto' or a positive real, got '" + step + "'");
    }
    return value;
}

RunConfig make_config(Method method, double eps, const std::string& step, double delta,
                      std::optional<std::int64_t> max_iters) {
    RunConfig cfg;
    cfg.method = method;
    cfg.eps = eps;
    cfg.step = parse_step(step);
    cfg.delta = delta;
    cfg.max_iters = max_iters;
    cfg.validate();
    return cfg;
}

RunResult execute(const OracleSpec& spec, const RunOptions& opts) {
    if (opts.method == Method::kGroverBaseline) {
        return run_grover_baseline(spec, opts.iters);
    }
    const RunConfig cfg = make_config(opts.method, opts.eps, opts.step, opts.delta, opts.max_iters);
    return opts.method == Method::kRga ? run_rga(spec, cfg) : run_rmn(spec, cfg);
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot open '" + path + "' for writing");
    f << contents;
    f.flush();
    if (!f) throw UsageError("failed writing '" + path + "'");
}

void print_summary(std::ostream& out, const RunResult& r) {
    const IterRecord& last = r.trace.records.back();
    out << fmt::format(
        "method={} n={} M={} iterations={} q={:.17g} err={:.6e} grad_norm={:.6e} oracle_queries={} "
        "trial_queries={} status={}\n",
        method_name(r.method), r.spec.qubits, r.spec.marked, r.iterations(), last.q, last.err, last.grad_norm,
        last.oracle_queries, r.trial_queries, status_name(r.trace.status));
}

// Maps library and usage failures onto exit codes.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BacktrackExhausted& e) {
        err << "error: " << e.what() << '\n';
        return kExitNonConvergence;
    }
}

}  // namespace

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const OracleSpec spec = make_spec(opts.qubits, opts.marked);
        const RunResult r = execute(spec, opts);
        if (!opts.trace_path.empty()) write_file(opts.trace_path, io::trace_csv(r.trace));
        if (!opts.schedule_path.empty()) {
            write_file(opts.schedule_path, io::schedule_to_json(io::make_schedule(r)));
        }
        print_summary(out, r);
        return r.converged() ? kExitOk : kExitNonConvergence;
    });
}

int cmd_export_schedule(const RunOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opts.schedule_path.empty()) throw UsageError("export-schedule needs --schedule <path.json>");
        const OracleSpec spec = make_spec(opts.qubits, opts.marked);
        const RunResult r = execute(spec, opts);
        const io::Schedule schedule = io::make_schedule(r);
        write_file(opts.schedule_path, io::schedule_to_json(schedule));
        if (!opts.trace_path.empty()) write_file(opts.trace_path, io::trace_csv(r.trace));
        std::size_t gates = 0;
        for (const GateWord& w : schedule.iterations) gates += w.size();
        out << fmt::format("wrote {}: {} iterations, {} gates, total_oracle_queries={} trial_queries={}\n",
                           opts.schedule_path, schedule.iterations.size(), gates, schedule.total_oracle_queries,
                           schedule.trial_queries);
        return r.converged() ? kExitOk : kExitNonConvergence;
    });
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw InvalidInput("fit_line needs two or more points");
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (!(sxx > 0.0)) throw InvalidInput("fit_line needs distinct x values");
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return f;
}

int cmd_scaling(const ScalingOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opts.n_min < 2 || opts.n_max < opts.n_min || opts.n_max > 40) {
            throw UsageError("scaling needs 2 <= n-min <= n-max <= 40");
        }
        if (opts.method == Method::kGroverBaseline) throw UsageError("scaling supports rga and rmn only");
        const RunConfig cfg = make_config(opts.method, opts.eps, opts.step, opts.delta, std::nullopt);
        const std::size_t count = static_cast<std::size_t>(opts.n_max - opts.n_min + 1);

        struct Row {
            std::size_t iterations = 0;
            std::uint64_t queries = 0;
            bool converged = false;
            std::exception_ptr error;
        };
        std::vector<Row> rows(count);
        std::atomic<std::size_t> next{0};
        unsigned workers = opts.jobs != 0 ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
        workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
        auto work = [&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    const OracleSpec spec = make_spec(opts.n_min + static_cast<int>(i), opts.marked);
                    const RunResult r = cfg.method == Method::kRga ? run_rga(spec, cfg) : run_rmn(spec, cfg);
                    rows[i] = {r.iterations(), r.trace.records.back().oracle_queries, r.converged(), nullptr};
                } catch (...) {
                    rows[i].error = std::current_exception();
                }
            }
        };
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        }

        std::ostringstream csv;
        csv << "n,sqrtN,iterations,oracle_queries\n";
        std::vector<double> xs, ys;
        bool failed = false;
        for (std::size_t i = 0; i < count; ++i) {
            const int n = opts.n_min + static_cast<int>(i);
            if (rows[i].error) {
                try {
                    std::rethrow_exception(rows[i].error);
                } catch (const std::exception& e) {
                    err << fmt::format("n={}: {}\n", n, e.what());
                }
                failed = true;
                continue;
            }
            if (!rows[i].converged) {
                err << fmt::format("n={}: did not converge within the iteration limit\n", n);
                failed = true;
            }
            const double sqrt_n = std::sqrt(std::ldexp(1.0, n));
            csv << fmt::format("{},{:.16e},{},{}\n", n, sqrt_n, rows[i].iterations, rows[i].queries);
            xs.push_back(sqrt_n);
            ys.push_back(static_cast<double>(rows[i].iterations));
        }
        if (opts.csv_path.empty()) {
            out << csv.str();
        } else {
            write_file(opts.csv_path, csv.str());
        }
        if (xs.size() >= 2) {
            const LinearFit f = fit_line(xs, ys);
            out << fmt::format("fit: iterations = {:.6g} * sqrtN + {:.6g}, R^2 = {:.6f}\n", f.slope, f.intercept,
                               f.r_squared);
        }
        return failed ? kExitNonConvergence : kExitOk;
    });
}

std::vector<CrosscheckRow> mirror_run(const RunResult& run, const std::vector<std::size_t>& marked) {
    const dense::DenseWorld world = dense::build_world(run.spec.qubits, marked);
    dense::DenseState state = dense::uniform_state(world);
    std::vector<CrosscheckRow> rows;
    rows.reserve(run.trace.records.size());
    for (std::size_t k = 0; k < run.trace.records.size(); ++k) {
        if (k > 0) state = dense::apply_word_dense(state, run.steps[k - 1], world);
        const IterRecord& rec = run.trace.records[k];
        const dense::GradientDecomposition d =
            dense::decompose_gradient(world, dense::riemannian_gradient(world, state));
        rows.push_back({rec.k, std::abs(rec.q - dense::success_prob_dense(world, state)), std::abs(rec.x - d.x),
                        std::abs(rec.y - d.y)});
    }
    return rows;
}

int cmd_crosscheck(const CrosscheckOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opts.qubits > dense::kMaxDenseQubits) {
            throw UsageError(fmt::format("crosscheck runs the dense simulator and needs --qubits <= {}",
                                         dense::kMaxDenseQubits));
        }
        const OracleSpec spec = make_spec(opts.qubits, opts.marked);
        std::vector<std::size_t> marked(spec.size);
        std::iota(marked.begin(), marked.end(), std::size_t{0});
        if (opts.seed) {
            std::mt19937_64 rng(*opts.seed);
            std::shuffle(marked.begin(), marked.end(), rng);
        }
        marked.resize(spec.marked);

        std::ostringstream csv;
        csv << "method,k,abs_err_q,abs_err_x,abs_err_y\n";
        bool breach = false;
        for (Method method : {Method::kRga, Method::kRmn}) {
            const RunConfig cfg = make_config(method, opts.eps, opts.step, opts.delta, opts.max_iters);
            const RunResult r = method == Method::kRga ? run_rga(spec, cfg) : run_rmn(spec, cfg);
            double worst = 0.0;
            for (const CrosscheckRow& row : mirror_run(r, marked)) {
                csv << fmt::format("{},{},{:.16e},{:.16e},{:.16e}\n", method_name(method), row.k, row.dq, row.dx,
                                   row.dy);
                worst = std::max({worst, row.dq, row.dx, row.dy});
            }
            const bool ok = worst <= kCrosscheckTolerance;
            breach = breach || !ok;
            out << fmt::format("{}: iterations={} max_abs_err={:.3e} {}\n", method_name(method), r.iterations(), worst,
                               ok ? "ok" : "FAIL");
        }
        if (!opts.csv_path.empty()) write_file(opts.csv_path, csv.str());
        return breach ? kExitCrosscheckFailed : kExitOk;
    });
}

int cmd_replay(const ReplayOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::ifstream f(opts.schedule_path, std::ios::binary);
        if (!f) throw UsageError("cannot read '" + opts.schedule_path + "'");
        std::stringstream buf;
        buf << f.rdbuf();
        const io::Schedule s = io::schedule_from_json(buf.str());
        const PlaneState final_state = io::replay_schedule(s);
        out << fmt::format("method={} n={} M={} iterations={} q={:.17g} err={:.6e} oracle_queries={}\n",
                           method_name(s.method), s.spec.qubits, s.spec.marked, s.iterations.size(),
                           success_prob(final_state), failure_prob(final_state), s.total_oracle_queries);
        return kExitOk;
    });
}

namespace {

void add_run_flags(CLI::App* sub, RunOptions& o, std::string& method) {
    sub->add_option("--method", method, "rga | rmn | grover")->required();
    sub->add_option("--qubits", o.qubits, "number of qubits n (N = 2^n)")->required();
    sub->add_option("--marked", o.marked, "number of marked items M")->capture_default_str();
    sub->add_option("--eps", o.eps, "gradient-norm tolerance")->capture_default_str();
    sub->add_option("--step", o.step, "RGA step: auto (1/L_Rie) or a positive real")->capture_default_str();
    sub->add_option("--delta", o.delta, "RMN damping")->capture_default_str();
    sub->add_option("--max-iters", o.max_iters, "iteration cap");
    sub->add_option("--iters", o.iters, "Grover baseline iterations")->capture_default_str();
    sub->add_option("--trace", o.trace_path, "write the iteration trace CSV here");
    sub->add_option("--schedule", o.schedule_path, "write the gate schedule JSON here");
}

Method method_or_throw(const std::string& name) {
    const auto m = parse_method(name);
    if (!m) throw CLI::ValidationError("--method", "expected rga, rmn or grover, got '" + name + "'");
    return *m;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Grover-compatible Riemannian search optimizers"};
    app.require_subcommand(1);

    RunOptions run_opts;
    std::string run_method;
    CLI::App* run = app.add_subcommand("run", "run one optimizer and report the result");
    add_run_flags(run, run_opts, run_method);

    RunOptions export_opts;
    std::string export_method;
    CLI::App* exp = app.add_subcommand("export-schedule", "run one optimizer and write its gate schedule");
    add_run_flags(exp, export_opts, export_method);

    ScalingOptions scaling_opts;
    std::string scaling_method = "rmn";
    CLI::App* scaling = app.add_subcommand("scaling", "iterations versus sqrt(N) over a range of qubit counts");
    scaling->add_option("--method", scaling_method, "rga | rmn")->capture_default_str();
    scaling->add_option("--n-min", scaling_opts.n_min)->capture_default_str();
    scaling->add_option("--n-max", scaling_opts.n_max)->capture_default_str();
    scaling->add_option("--marked", scaling_opts.marked)->capture_default_str();
    scaling->add_option("--eps", scaling_opts.eps)->capture_default_str();
    scaling->add_option("--step", scaling_opts.step)->capture_default_str();
    scaling->add_option("--delta", scaling_opts.delta)->capture_default_str();
    scaling->add_option("--csv", scaling_opts.csv_path, "write the table here instead of stdout");
    scaling->add_option("--jobs", scaling_opts.jobs, "worker threads (0 = all cores)")->capture_default_str();

    CrosscheckOptions cross_opts;
    CLI::App* cross = app.add_subcommand("crosscheck", "compare the 2x2 simulation with full N x N matrices");
    cross->add_option("--qubits", cross_opts.qubits)->capture_default_str();
    cross->add_option("--marked", cross_opts.marked)->capture_default_str();
    cross->add_option("--eps", cross_opts.eps)->capture_default_str();
    cross->add_option("--step", cross_opts.step)->capture_default_str();
    cross->add_option("--delta", cross_opts.delta)->capture_default_str();
    cross->add_option("--max-iters", cross_opts.max_iters);
    cross->add_option("--seed", cross_opts.seed, "shuffle the marked indices with this seed");
    cross->add_option("--csv", cross_opts.csv_path, "write per-iteration absolute errors here");

    ReplayOptions replay_opts;
    CLI::App* replay = app.add_subcommand("replay", "replay an exported schedule and print the final q");
    replay->add_option("--schedule", replay_opts.schedule_path)->required();

    try {
        app.parse(argc, argv);
        if (run->parsed()) run_opts.method = method_or_throw(run_method);
        if (exp->parsed()) export_opts.method = method_or_throw(export_method);
        if (scaling->parsed()) scaling_opts.method = method_or_throw(scaling_method);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    if (run->parsed()) return cmd_run(run_opts, out, err);
    if (exp->parsed()) return cmd_export_schedule(export_opts, out, err);
    if (scaling->parsed()) return cmd_scaling(scaling_opts, out, err);
    if (cross->parsed()) return cmd_crosscheck(cross_opts, out, err);
    return cmd_replay(replay_opts, out, err);
}

}  // namespace groveropt::app
