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
#include <string>

#include "hyperpol/deviation.hpp"
#include "hyperpol/errors.hpp"
#include "hyperpol/prob_pair.hpp"
#include "hyperpol/rng.hpp"

namespace hyperpol {

/// A finite population of dichotomic systems, stored as the two outcome
/// counts. Procedures never change the population size.
struct Ensemble {
    Ensemble(std::int64_t count1, std::int64_t count2) : n1(count1), n2(count2) {
        if (n1 < 0 || n2 < 0 || n1 + n2 < 1) {
            throw Error(Errc::OutOfRange, "ensemble counts must be non-negative with total >= 1");
        }
    }

    std::int64_t n1;
    std::int64_t n2;

    std::int64_t total() const noexcept { return n1 + n2; }
    double frequency1() const noexcept { return static_cast<double>(n1) / static_cast<double>(total()); }
    double frequency2() const noexcept { return static_cast<double>(n2) / static_cast<double>(total()); }

    friend bool operator==(const Ensemble&, const Ensemble&) = default;
};

/// A concrete stochastic preparation procedure: each member flips its outcome
/// independently, a1 -> a2 with probability q12 and a2 -> a1 with q21. This
/// microdynamic preserves the population size by construction and realizes
/// every coefficient pair reachable from a given input distribution.
struct FlipProcedure {
    FlipProcedure(double flip12, double flip21) : q12(flip12), q21(flip21) {
        if (!(q12 >= 0.0 && q12 <= 1.0) || !(q21 >= 0.0 && q21 <= 1.0)) {
            throw Error(Errc::OutOfRange, "flip probabilities must lie in [0, 1]");
        }
    }

    double q12;
    double q21;

    bool identity() const noexcept { return q12 == 0.0 && q21 == 0.0; }
};

enum class BuildMode {
    Exact,    // n1 = round(p1 * total), halves rounding up
    Sampled,  // n1 ~ Binomial(total, p1)
};

/// Populates an ensemble of `total` members according to p. Exact mode is
/// deterministic; Sampled mode draws n1 binomially from the engine stream.
inline Ensemble build_ensemble(std::int64_t total, const ProbPair& p, BuildMode mode,
                               Engine& engine) {
    if (total < 1) {
        throw Error(Errc::OutOfRange, "ensemble size must be >= 1");
    }
    std::int64_t n1 = 0;
    switch (mode) {
        case BuildMode::Exact:
            n1 = static_cast<std::int64_t>(std::floor(p.p1() * static_cast<double>(total) + 0.5));
            break;
        case BuildMode::Sampled:
            n1 = binomial_count(engine, total, p.p1());
            break;
    }
    return Ensemble(n1, total - n1);
}

inline Ensemble build_ensemble(std::int64_t total, const ProbPair& p, BuildMode mode,
                               const SeedSpec& seed) {
    Engine engine = make_engine(seed);
    return build_ensemble(total, p, mode, engine);
}

/// Applies one flip procedure: n1' = n1 - Binomial(n1, q12) + Binomial(n2, q21).
/// The a1 -> a2 flips are drawn first; the stream order is part of the
/// reproducibility contract.
inline Ensemble apply_procedure(const Ensemble& e, const FlipProcedure& proc, Engine& engine) {
    const std::int64_t flips12 = binomial_count(engine, e.n1, proc.q12);
    const std::int64_t flips21 = binomial_count(engine, e.n2, proc.q21);
    const std::int64_t n1 = e.n1 - flips12 + flips21;
    return Ensemble(n1, e.total() - n1);
}

inline Ensemble apply_procedure(const Ensemble& e, const FlipProcedure& proc,
                                const SeedSpec& seed) {
    Engine engine = make_engine(seed);
    return apply_procedure(e, proc, engine);
}

/// Finite-sample deviation estimates lambda_hat_i = (n_i' - n_i) / n_i and
/// frequency shifts delta_i = (n_i' - n_i) / N between two snapshots of the
/// same population.
inline DeviationEstimate estimate_deviations(const Ensemble& before, const Ensemble& after) {
    if (before.total() != after.total()) {
        throw Error(Errc::SizeMismatch, "ensembles have different population sizes (" +
                                            std::to_string(before.total()) + " vs " +
                                            std::to_string(after.total()) + ")");
    }
    if (before.n1 == 0 || before.n2 == 0) {
        throw Error(Errc::DegenerateInput,
                    "deviation estimate undefined: an input outcome count is zero");
    }
    const double size = static_cast<double>(before.total());
    DeviationEstimate est;
    est.lambda_hat1 = static_cast<double>(after.n1 - before.n1) / static_cast<double>(before.n1);
    est.lambda_hat2 = static_cast<double>(after.n2 - before.n2) / static_cast<double>(before.n2);
    est.delta1 = static_cast<double>(after.n1 - before.n1) / size;
    est.delta2 = static_cast<double>(after.n2 - before.n2) / size;
    est.sample_size = before.total();
    return est;
}

/// Infinite-population limit of the flip procedure's deviations:
///   lambda1 = (q21*p2 - q12*p1) / p1,  lambda2 = -(q21*p2 - q12*p1) / p2.
/// The shared numerator keeps the orthogonality residual at rounding level.
inline DeviationCoefficients expected_deviations(const ProbPair& p, const FlipProcedure& proc) {
    if (p.degenerate()) {
        throw Error(Errc::DegenerateInput,
                    "expected deviations are undefined for a zero input probability");
    }
    const double net_gain1 = proc.q21 * p.p2() - proc.q12 * p.p1();
    return {net_gain1 / p.p1(), -net_gain1 / p.p2()};
}

/// Minimal-disturbance procedure reaching any target distribution: only the
/// outcome that must shrink is flipped. Feasible for every target, which is
/// what lets a classical flip procedure land anywhere in [0, 1] — including
/// targets whose deviations classify as hyper-trigonometric.
inline FlipProcedure synthesize_flip(const ProbPair& p_in, const ProbPair& p_target) {
    if (p_in.degenerate()) {
        throw Error(Errc::DegenerateInput, "flip synthesis needs both input outcomes populated");
    }
    auto clamp_unit = [](double q) { return std::fmax(0.0, std::fmin(1.0, q)); };
    if (p_target.p1() >= p_in.p1()) {
        return FlipProcedure(0.0, clamp_unit((p_target.p1() - p_in.p1()) / p_in.p2()));
    }
    return FlipProcedure(clamp_unit((p_in.p1() - p_target.p1()) / p_in.p1()), 0.0);
}

}  // namespace hyperpol
