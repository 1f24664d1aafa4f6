/*
   Copyright 2026 hyperpol developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

/// Subcommand handlers and the argv entry point.
///
/// Exit codes: 0 when at least one result row succeeded (an empty sweep grid
/// also exits 0), 2 when the experiment spec failed validation, 3 on a
/// runtime numeric failure — including runs whose rows all failed. Every
/// failure writes one machine-readable record to the error stream.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "hyperpol/cli/emit.hpp"
#include "hyperpol/cli/spec.hpp"
#include "hyperpol/convergence.hpp"
#include "hyperpol/deviation.hpp"
#include "hyperpol/ensemble.hpp"
#include "hyperpol/errors.hpp"
#include "hyperpol/phase.hpp"
#include "hyperpol/prob_pair.hpp"
#include "hyperpol/profile.hpp"
#include "hyperpol/regime.hpp"
#include "hyperpol/rng.hpp"
#include "hyperpol/transform.hpp"

namespace hyperpol::cli {

namespace detail {

inline int failure_exit(const Error& error) {
    return error.code() == Errc::NumericFailure ? 3 : 2;
}

/// Second component defaults to the complement so --p1 alone names a pair.
inline ProbPair make_prob(const std::optional<double>& first,
                          const std::optional<double>& second) {
    if (second.has_value()) return ProbPair(*first, *second);
    return ProbPair::from_p1(*first);
}

inline FlipProcedure resolve_procedure(const ExperimentSpec& spec, const ProbPair& p) {
    if (spec.target1.has_value()) {
        const ProbPair target = make_prob(spec.target1, spec.target2);
        return synthesize_flip(p, target);
    }
    return FlipProcedure{spec.procedure.q12.value_or(0.0), spec.procedure.q21.value_or(0.0)};
}

inline DeviationProfile resolve_profile(const ProfileSpec& profile) {
    const std::string& kind = *profile.kind;
    if (kind == "cosine") {
        if (profile.domain_lo.has_value()) {
            return DeviationProfile::cosine({*profile.domain_lo, *profile.domain_hi});
        }
        return DeviationProfile::cosine();
    }
    if (kind == "cosh") {
        if (profile.domain_lo.has_value()) {
            return DeviationProfile::hyperbolic({*profile.domain_lo, *profile.domain_hi});
        }
        return DeviationProfile::hyperbolic();
    }
    return DeviationProfile::tabulated(*profile.nodes);
}

inline std::vector<double> resolve_grid(const GridSpec& grid) {
    if (grid.list.has_value()) return *grid.list;
    const std::int64_t steps = *grid.steps;
    std::vector<double> points;
    if (steps <= 0) return points;
    points.reserve(static_cast<std::size_t>(steps));
    const double lo = *grid.lo;
    const double hi = *grid.hi;
    if (steps == 1) {
        points.push_back(lo);
        return points;
    }
    for (std::int64_t i = 0; i < steps; ++i) {
        // Endpoints land exactly on lo and hi so a grid that touches a profile
        // domain boundary never falls out of it by one rounding step.
        points.push_back(i == steps - 1
                             ? hi
                             : lo + (hi - lo) * static_cast<double>(i) /
                                        static_cast<double>(steps - 1));
    }
    return points;
}

inline BuildMode resolve_mode(const ExperimentSpec& spec) {
    return spec.mode.value_or("sampled") == "exact" ? BuildMode::Exact : BuildMode::Sampled;
}

inline const std::vector<std::string>& pair_record_columns() {
    static const std::vector<std::string> columns = {
        "p1_in",  "p2_in",  "p1_out",      "p2_out",      "lambda1",       "lambda2", "regime",
        "theta1", "theta2", "theta1_half", "theta2_half", "index_swapped", "residual"};
    return columns;
}

inline void write_pair_record(RecordWriter& writer, const ProbPair& p_in, const ProbPair& p_out,
                              const DeviationCoefficients& lam, const PhaseRepresentation& rep) {
    writer.write({p_in.p1(), p_in.p2(), p_out.p1(), p_out.p2(), lam.lambda1, lam.lambda2,
                  regime_name(rep.regime), rep.theta1, rep.theta2, rep.theta1 / 2.0,
                  rep.theta2 / 2.0, rep.index_swapped,
                  orthogonality_residual(p_in, lam)});
}

}  // namespace detail

inline int cmd_transform(const ExperimentSpec& spec, std::ostream& sink, std::ostream& err,
                         OutputFormat format) {
    const double eps = spec.eps.value_or(kDefaultClassicalEps);
    try {
        const ProbPair p = detail::make_prob(spec.p1, spec.p2);
        DeviationCoefficients lam;
        std::optional<ProbPair> out;
        if (spec.lambda1.has_value()) {
            lam = {*spec.lambda1, *spec.lambda2};
            out = forward_transform(p, lam);
        } else {
            const bool hyper = (*spec.phase_regime == "hyper");
            const double theta = *spec.theta1;
            out = hyper ? hyper_rule(p, theta) : trig_rule(p, theta);
            // Mirror the rule internals so the emitted coefficients carry the
            // same boundary clamping the output pair received.
            lam.lambda1 = hyper ? std::cosh(theta) : std::cos(theta);
            lam.lambda2 = p.p2() > 0.0
                              ? std::fmax(-1.0, -p.p1() * lam.lambda1 / p.p2())
                              : 0.0;
            if (!hyper) lam.lambda2 = std::fmin(1.0, lam.lambda2);
        }
        const PhaseRepresentation rep = extract_phases(p, lam, eps);
        RecordWriter writer(sink, format, detail::pair_record_columns());
        detail::write_pair_record(writer, p, *out, lam, rep);
        return 0;
    } catch (const Error& e) {
        write_error_record(err, e);
        return detail::failure_exit(e);
    }
}

inline int cmd_invert(const ExperimentSpec& spec, std::ostream& sink, std::ostream& err,
                      OutputFormat format) {
    const double eps = spec.eps.value_or(kDefaultClassicalEps);
    try {
        const ProbPair p_in = detail::make_prob(spec.p1, spec.p2);
        const ProbPair p_out = detail::make_prob(spec.p_out1, spec.p_out2);
        const DeviationCoefficients lam = extract_deviations(p_in, p_out);
        const PhaseRepresentation rep = extract_phases(p_in, lam, eps);
        RecordWriter writer(sink, format, detail::pair_record_columns());
        detail::write_pair_record(writer, p_in, p_out, lam, rep);
        return 0;
    } catch (const Error& e) {
        write_error_record(err, e);
        return detail::failure_exit(e);
    }
}

inline int cmd_simulate(const ExperimentSpec& spec, std::ostream& sink, std::ostream& err,
                        OutputFormat format) {
    const double eps = spec.eps.value_or(kDefaultClassicalEps);
    std::optional<ProbPair> p;
    std::optional<FlipProcedure> proc;
    DeviationCoefficients expected;
    try {
        p = detail::make_prob(spec.p1, spec.p2);
        proc = detail::resolve_procedure(spec, *p);
        expected = expected_deviations(*p, *proc);
    } catch (const Error& e) {
        write_error_record(err, e);
        return detail::failure_exit(e);
    }

    const std::int64_t size = *spec.size;
    const int replicas = spec.replicas.value_or(1);
    const BuildMode mode = detail::resolve_mode(spec);
    const SeedSpec base{spec.seed.value_or(0), spec.stream.value_or(0)};
    static const std::vector<std::string> columns = {
        "replica", "n1_before",   "n2_before",   "n1_after", "n2_after",
        "lambda1_hat", "lambda2_hat", "delta1",  "delta2",
        "lambda1_expected", "lambda2_expected", "regime", "status"};
    try {
        RecordWriter writer(sink, format, columns);
        int ok_rows = 0;
        for (int r = 0; r < replicas; ++r) {
            Engine engine =
                make_engine({base.seed, base.stream + static_cast<std::uint64_t>(r)});
            const Ensemble before = build_ensemble(size, *p, mode, engine);
            const Ensemble after = apply_procedure(before, *proc, engine);
            try {
                const DeviationEstimate est = estimate_deviations(before, after);
                const Regime regime = classify({est.lambda_hat1, est.lambda_hat2}, eps);
                writer.write({r, before.n1, before.n2, after.n1, after.n2, est.lambda_hat1,
                              est.lambda_hat2, est.delta1, est.delta2, expected.lambda1,
                              expected.lambda2, regime_name(regime), "ok"});
                ++ok_rows;
            } catch (const Error& row_error) {
                writer.write({r, before.n1, before.n2, after.n1, after.n2, Cell{}, Cell{},
                              Cell{}, Cell{}, expected.lambda1, expected.lambda2, Cell{},
                              errc_name(row_error.code())});
            }
        }
        if (ok_rows > 0) return 0;
        write_error_record(err, "degenerate_input", "no replica produced a deviation estimate");
        return 3;
    } catch (const Error& e) {
        write_error_record(err, e);
        return 3;
    }
}

inline int cmd_sweep(const ExperimentSpec& spec, std::ostream& sink, std::ostream& err,
                     OutputFormat format) {
    const double eps = spec.eps.value_or(kDefaultClassicalEps);
    std::optional<ProbPair> p;
    std::optional<DeviationProfile> profile;
    std::vector<double> grid;
    try {
        p = detail::make_prob(spec.p1, spec.p2);
        profile = detail::resolve_profile(spec.profile);
        grid = detail::resolve_grid(spec.grid);
    } catch (const Error& e) {
        write_error_record(err, e);
        return detail::failure_exit(e);
    }

    static const std::vector<std::string> columns = {"theta",  "theta_half", "p1_out",
                                                     "p2_out", "regime",     "status"};
    try {
        RecordWriter writer(sink, format, columns);
        int ok_rows = 0;
        for (const double theta : grid) {
            try {
                const ProbPair out = family_transform(*p, *profile, theta);
                DeviationCoefficients dev = family_deviations(*p, *profile, theta);
                // family_transform has already vetted feasibility; drop any
                // one-ulp undershoot below -1 before classification.
                dev.lambda2 = std::fmax(-1.0, dev.lambda2);
                const Regime regime = classify(dev, eps);
                writer.write(
                    {theta, theta / 2.0, out.p1(), out.p2(), regime_name(regime), "ok"});
                ++ok_rows;
            } catch (const Error& row_error) {
                writer.write({theta, theta / 2.0, Cell{}, Cell{}, Cell{},
                              errc_name(row_error.code())});
            }
        }
        if (grid.empty() || ok_rows > 0) return 0;
        write_error_record(err, "infeasible_phase", "every grid point failed");
        return 3;
    } catch (const Error& e) {
        write_error_record(err, e);
        return 3;
    }
}

inline int cmd_converge(const ExperimentSpec& spec, std::ostream& sink, std::ostream& err,
                        OutputFormat format) {
    std::optional<ProbPair> p;
    std::optional<FlipProcedure> proc;
    DeviationCoefficients expected;
    try {
        p = detail::make_prob(spec.p1, spec.p2);
        proc = detail::resolve_procedure(spec, *p);
        expected = expected_deviations(*p, *proc);
    } catch (const Error& e) {
        write_error_record(err, e);
        return detail::failure_exit(e);
    }

    const SeedSpec base{spec.seed.value_or(0), spec.stream.value_or(0)};
    static const std::vector<std::string> columns = {
        "kind",         "size",         "replicas_used",  "excluded",
        "mean_lambda1", "mean_lambda2", "stddev_lambda1", "stddev_lambda2"};
    try {
        const std::vector<ConvergenceRow> rows =
            convergence_study(*p, *proc, std::span<const std::int64_t>(*spec.sizes),
                              *spec.replicas, base, detail::resolve_mode(spec));
        RecordWriter writer(sink, format, columns);
        for (const ConvergenceRow& row : rows) {
            writer.write({"estimate", row.size, row.replicas_used, row.excluded,
                          row.mean_lambda1, row.mean_lambda2, row.stddev_lambda1,
                          row.stddev_lambda2});
        }
        writer.write({"analytic", std::int64_t{0}, 0, 0, expected.lambda1, expected.lambda2,
                      0.0, 0.0});
        return 0;
    } catch (const Error& e) {
        write_error_record(err, e);
        return 3;
    }
}

inline int dispatch(Command cmd, const ExperimentSpec& spec, std::ostream& out,
                    std::ostream& err) {
    const OutputFormat format =
        spec.format.value_or("csv") == "json" ? OutputFormat::Json : OutputFormat::Csv;

    std::ofstream file;
    std::ostream* sink = &out;
    if (spec.out.has_value() && *spec.out != "-") {
        file.open(*spec.out, std::ios::binary);
        if (!file) {
            const Error e(Errc::InvalidSpec, "cannot open output path: " + *spec.out);
            write_error_record(err, e);
            return 2;
        }
        sink = &file;
    }

    switch (cmd) {
        case Command::Transform: return cmd_transform(spec, *sink, err, format);
        case Command::Invert: return cmd_invert(spec, *sink, err, format);
        case Command::Simulate: return cmd_simulate(spec, *sink, err, format);
        case Command::Sweep: return cmd_sweep(spec, *sink, err, format);
        case Command::Converge: return cmd_converge(spec, *sink, err, format);
    }
    return 2;
}

/// Parses argv (program name excluded), merges --spec document and flag
/// overrides, validates, and runs the subcommand. All output lands on the
/// given streams so callers can capture runs in-process.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Toolkit for probability transforms on two-outcome ensembles"};
    app.name("hyperpol");
    app.require_subcommand(1);

    ExperimentSpec flags;
    std::string spec_path;
    std::vector<std::int64_t> sizes_flag;
    std::vector<double> thetas_flag;
    std::string nodes_flag;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--spec", spec_path, "JSON experiment-spec file");
        sub->add_option("--p1", flags.p1, "input probability of outcome 1");
        sub->add_option("--p2", flags.p2, "input probability of outcome 2 (default: 1 - p1)");
        sub->add_option("--seed", flags.seed, "RNG seed (default 0)");
        sub->add_option("--stream", flags.stream, "RNG stream offset (default 0)");
        sub->add_option("--format", flags.format, "output format: csv or json (default csv)");
        sub->add_option("--out", flags.out, "output path, or - for stdout (default -)");
        sub->add_flag("--degrees", "interpret angle inputs as degrees");
    };
    const auto add_eps = [&](CLI::App* sub) {
        sub->add_option("--eps", flags.eps,
                        "threshold below which coefficients count as Classical (default 1e-9)");
    };
    const auto add_procedure = [&](CLI::App* sub) {
        sub->add_option("--q12", flags.procedure.q12, "flip probability outcome 1 -> 2");
        sub->add_option("--q21", flags.procedure.q21, "flip probability outcome 2 -> 1");
        sub->add_option("--target1", flags.target1,
                        "first component of a target pair to synthesize a procedure for");
        sub->add_option("--target2", flags.target2,
                        "second target component (default: 1 - target1)");
        sub->add_option("--mode", flags.mode,
                        "ensemble build mode: exact or sampled (default sampled)");
    };

    CLI::App* transform =
        app.add_subcommand("transform", "Apply deviation coefficients or a phase to a pair");
    add_common(transform);
    add_eps(transform);
    transform->add_option("--lambda1", flags.lambda1, "deviation coefficient of outcome 1");
    transform->add_option("--lambda2", flags.lambda2, "deviation coefficient of outcome 2");
    transform->add_option("--regime", flags.phase_regime, "phase form: trig or hyper");
    transform->add_option("--theta", flags.theta1, "full phase angle theta1 (radians)");

    CLI::App* invert =
        app.add_subcommand("invert", "Recover coefficients and phases from an input/output pair");
    add_common(invert);
    add_eps(invert);
    invert->add_option("--pout1", flags.p_out1, "output probability of outcome 1");
    invert->add_option("--pout2", flags.p_out2, "output probability of outcome 2 (default: 1 - pout1)");

    CLI::App* simulate =
        app.add_subcommand("simulate", "Run seeded flip-procedure replicas on a finite ensemble");
    add_common(simulate);
    add_eps(simulate);
    add_procedure(simulate);
    simulate->add_option("--size", flags.size, "ensemble population size");
    simulate->add_option("--replicas", flags.replicas, "independent replicas (default 1)");

    CLI::App* sweep =
        app.add_subcommand("sweep", "Evaluate a deviation profile over a phase grid");
    add_common(sweep);
    add_eps(sweep);
    sweep->add_option("--profile", flags.profile.kind, "profile kind: cosine, cosh, or table");
    sweep->add_option("--domain-lo", flags.profile.domain_lo, "profile domain lower end");
    sweep->add_option("--domain-hi", flags.profile.domain_hi, "profile domain upper end");
    sweep->add_option("--nodes", nodes_flag,
                      "table profile nodes as theta:value[,theta:value...]");
    sweep->add_option("--grid-lo", flags.grid.lo, "grid start angle");
    sweep->add_option("--grid-hi", flags.grid.hi, "grid end angle");
    sweep->add_option("--steps", flags.grid.steps, "number of grid points");
    sweep->add_option("--thetas", thetas_flag, "explicit grid angles")->delimiter(',');

    CLI::App* converge = app.add_subcommand(
        "converge", "Estimate deviation statistics across increasing ensemble sizes");
    add_common(converge);
    add_procedure(converge);
    converge->add_option("--sizes", sizes_flag, "ensemble sizes, strictly increasing")
        ->delimiter(',');
    converge->add_option("--replicas", flags.replicas, "replicas per size");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        write_error_record(err, "invalid_spec", e.what());
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    Command cmd = Command::Transform;
    if (sub == invert) cmd = Command::Invert;
    if (sub == simulate) cmd = Command::Simulate;
    if (sub == sweep) cmd = Command::Sweep;
    if (sub == converge) cmd = Command::Converge;

    try {
        ExperimentSpec merged;
        if (sub->count("--spec") > 0) merged = load_spec_file(spec_path);
        if (sub == converge && sub->count("--sizes") > 0) flags.sizes = sizes_flag;
        if (sub == sweep && sub->count("--thetas") > 0) flags.grid.list = thetas_flag;
        if (sub == sweep && sub->count("--nodes") > 0) {
            flags.profile.nodes = parse_node_list(nodes_flag);
        }
        if (sub->count("--degrees") > 0) flags.degrees = true;
        overlay(merged, flags);
        finalize_spec(merged, cmd);
        return dispatch(cmd, merged, out, err);
    } catch (const Error& e) {
        write_error_record(err, e);
        return detail::failure_exit(e);
    } catch (const std::exception& e) {
        write_error_record(err, "numeric_failure", e.what());
        return 3;
    }
}

}  // namespace hyperpol::cli
