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

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "hyperpol/ensemble.hpp"

namespace hyperpol {

namespace detail {

inline double mean(const std::vector<double>& values) {
    if (values.empty()) return 0.0;
    double sum = 0.0;
    for (const double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
inline double sample_stddev(const std::vector<double>& values, double mean_value) {
    if (values.size() < 2) return 0.0;
    double sum_sq = 0.0;
    for (const double v : values) sum_sq += (v - mean_value) * (v - mean_value);
    return std::sqrt(sum_sq / static_cast<double>(values.size() - 1));
}

}  // namespace detail

/// Aggregates of the deviation estimates over the replicas at one ensemble
/// size. Replicas whose input ensemble came up with an empty outcome class
/// are excluded from the aggregates and counted instead.
struct ConvergenceRow {
    std::int64_t size = 0;
    int replicas_used = 0;
    int excluded = 0;
    double mean_lambda1 = 0.0;
    double mean_lambda2 = 0.0;
    double stddev_lambda1 = 0.0;
    double stddev_lambda2 = 0.0;
};

/// Runs `replicas` independent build + flip simulations at each ensemble size
/// and reports the sample mean and standard deviation of the deviation
/// estimates. Replica r at size index s owns the stream
/// (seed.stream + s*replicas + r), consumed in build-then-apply order, so the
/// whole table is a pure function of (inputs, seed).
inline std::vector<ConvergenceRow> convergence_study(const ProbPair& p, const FlipProcedure& proc,
                                                     std::span<const std::int64_t> sizes,
                                                     int replicas, const SeedSpec& seed,
                                                     BuildMode mode = BuildMode::Sampled) {
    if (replicas < 1) {
        throw Error(Errc::OutOfRange, "replica count must be >= 1");
    }
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1 || (i > 0 && sizes[i] <= sizes[i - 1])) {
            throw Error(Errc::OutOfRange, "ensemble sizes must be positive and increasing");
        }
    }

    std::vector<ConvergenceRow> table;
    table.reserve(sizes.size());
    for (std::size_t s = 0; s < sizes.size(); ++s) {
        ConvergenceRow row;
        row.size = sizes[s];
        std::vector<double> lam1;
        std::vector<double> lam2;
        lam1.reserve(static_cast<std::size_t>(replicas));
        lam2.reserve(static_cast<std::size_t>(replicas));
        for (int r = 0; r < replicas; ++r) {
            const std::uint64_t stream =
                seed.stream + static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(replicas) +
                static_cast<std::uint64_t>(r);
            Engine engine = make_engine({seed.seed, stream});
            const Ensemble before = build_ensemble(sizes[s], p, mode, engine);
            const Ensemble after = apply_procedure(before, proc, engine);
            try {
                const DeviationEstimate est = estimate_deviations(before, after);
                lam1.push_back(est.lambda_hat1);
                lam2.push_back(est.lambda_hat2);
            } catch (const Error& err) {
                if (err.code() != Errc::DegenerateInput) throw;
                ++row.excluded;
            }
        }
        row.replicas_used = static_cast<int>(lam1.size());
        row.mean_lambda1 = detail::mean(lam1);
        row.mean_lambda2 = detail::mean(lam2);
        row.stddev_lambda1 = detail::sample_stddev(lam1, row.mean_lambda1);
        row.stddev_lambda2 = detail::sample_stddev(lam2, row.mean_lambda2);
        table.push_back(row);
    }
    return table;
}

}  // namespace hyperpol
