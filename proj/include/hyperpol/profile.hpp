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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperpol/deviation.hpp"
#include "hyperpol/errors.hpp"
#include "hyperpol/prob_pair.hpp"
#include "hyperpol/regime.hpp"
#include "hyperpol/transform.hpp"

namespace hyperpol {

/// Closed interval of phases [lo, hi].
struct PhaseInterval {
    double lo = 0.0;
    double hi = 0.0;
};

enum class ProfileKind {
    Cosine,  // lambda1 = cos(theta)
    Cosh,    // lambda1 = cosh(theta)
    Custom,  // lambda1 = piecewise-linear table, |f| <= 1
};

inline const char* profile_kind_name(ProfileKind kind) {
    switch (kind) {
        case ProfileKind::Cosine: return "cosine";
        case ProfileKind::Cosh: return "cosh";
        case ProfileKind::Custom: return "custom";
    }
    return "unknown";
}

/// Largest phase admitted for cosh profiles; keeps cosh(theta) finite.
inline constexpr double kCoshDomainMax = 700.0;

/// A phase-parameterized family of preparation procedures: the positive
/// deviation coefficient is lambda1 = f(theta) and the partner coefficient
/// follows from orthogonality. Custom profiles are tabulated (theta, f) nodes
/// with linear interpolation, so a profile is a plain serializable value
/// rather than arbitrary code.
class DeviationProfile {
  public:
    static DeviationProfile cosine(PhaseInterval domain = {0.0, std::numbers::pi}) {
        check_domain(domain);
        return DeviationProfile(ProfileKind::Cosine, domain, {});
    }

    static DeviationProfile hyperbolic(PhaseInterval domain = {0.0, kCoshDomainMax}) {
        check_domain(domain);
        if (domain.lo < 0.0 || domain.hi > kCoshDomainMax) {
            throw Error(Errc::DomainError, "cosh profile domain must lie inside [0, " +
                                               std::to_string(kCoshDomainMax) + "]");
        }
        return DeviationProfile(ProfileKind::Cosh, domain, {});
    }

    /// Nodes must be strictly increasing in theta with |f| <= 1 everywhere;
    /// linearity makes the node bound cover the whole domain.
    static DeviationProfile tabulated(std::vector<std::pair<double, double>> nodes) {
        if (nodes.size() < 2) {
            throw Error(Errc::DomainError, "custom profile needs at least two nodes");
        }
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (i > 0 && !(nodes[i].first > nodes[i - 1].first)) {
                throw Error(Errc::DomainError, "custom profile nodes must be strictly increasing in theta");
            }
            if (!(std::fabs(nodes[i].second) <= 1.0)) {
                throw Error(Errc::DomainError,
                            "custom profile value " + std::to_string(nodes[i].second) +
                                " at theta = " + std::to_string(nodes[i].first) + " exceeds |f| <= 1");
            }
        }
        const PhaseInterval domain{nodes.front().first, nodes.back().first};
        return DeviationProfile(ProfileKind::Custom, domain, std::move(nodes));
    }

    ProfileKind kind() const noexcept { return kind_; }
    PhaseInterval domain() const noexcept { return domain_; }
    const std::vector<std::pair<double, double>>& nodes() const noexcept { return nodes_; }

    bool contains(double theta) const noexcept {
        return theta >= domain_.lo && theta <= domain_.hi;
    }

    /// lambda1 = f(theta). Throws DomainError outside the profile domain.
    double evaluate(double theta) const {
        if (!contains(theta)) {
            throw Error(Errc::DomainError, "theta = " + std::to_string(theta) + " outside domain [" +
                                               std::to_string(domain_.lo) + ", " +
                                               std::to_string(domain_.hi) + "]");
        }
        switch (kind_) {
            case ProfileKind::Cosine: return std::cos(theta);
            case ProfileKind::Cosh: return std::cosh(theta);
            case ProfileKind::Custom: return interpolate(theta);
        }
        return 0.0;
    }

  private:
    DeviationProfile(ProfileKind kind, PhaseInterval domain,
                     std::vector<std::pair<double, double>> nodes)
        : kind_(kind), domain_(domain), nodes_(std::move(nodes)) {}

    static void check_domain(PhaseInterval domain) {
        if (!(domain.lo <= domain.hi)) {
            throw Error(Errc::DomainError, "profile domain has lo > hi");
        }
    }

    double interpolate(double theta) const {
        const auto it = std::lower_bound(
            nodes_.begin(), nodes_.end(), theta,
            [](const std::pair<double, double>& node, double value) { return node.first < value; });
        if (it == nodes_.begin()) return it->second;
        if (it == nodes_.end()) return nodes_.back().second;
        const auto& [t1, f1] = *it;
        const auto& [t0, f0] = *(it - 1);
        const double w = (theta - t0) / (t1 - t0);
        return f0 + w * (f1 - f0);
    }

    ProfileKind kind_;
    PhaseInterval domain_;
    std::vector<std::pair<double, double>> nodes_;
};

/// Transform induced by the family member at phase theta:
/// lambda1 = f(theta), lambda2 = -p1*lambda1/p2, then the forward transform.
inline ProbPair family_transform(const ProbPair& p, const DeviationProfile& profile, double theta) {
    if (p.degenerate()) {
        throw Error(Errc::DegenerateInput, "family transform needs both input outcomes populated");
    }
    const double lambda1 = profile.evaluate(theta);
    if (p.p1() * lambda1 - p.p2() > kFeasibilityTol) {
        throw Error(Errc::InfeasiblePhase,
                    "theta = " + std::to_string(theta) + " induces lambda2 < -1 (f(theta) = " +
                        std::to_string(lambda1) + " > p2/p1)");
    }
    const double lambda2 = std::fmax(-1.0, -p.p1() * lambda1 / p.p2());
    return forward_transform(p, {lambda1, lambda2});
}

/// The coefficients induced at phase theta without applying the transform.
inline DeviationCoefficients family_deviations(const ProbPair& p, const DeviationProfile& profile,
                                               double theta) {
    if (p.degenerate()) {
        throw Error(Errc::DegenerateInput, "family deviations need both input outcomes populated");
    }
    const double lambda1 = profile.evaluate(theta);
    return {lambda1, -p.p1() * lambda1 / p.p2()};
}

namespace detail {

// Feasibility means p1*f(theta) <= p2; the lower constraint f >= -1 holds for
// every supported profile kind. Returns the longest contiguous feasible
// sub-interval of `domain` for the cosine profile, where the feasible set is
// the periodic union of [acos(r) + 2k*pi, 2*pi - acos(r) + 2k*pi].
inline PhaseInterval longest_cosine_interval(PhaseInterval domain, double ratio) {
    const double two_pi = 2.0 * std::numbers::pi;
    const double m = std::acos(std::fmin(1.0, ratio));
    PhaseInterval best{0.0, -1.0};
    const long k_lo = static_cast<long>(std::floor((domain.lo - two_pi) / two_pi));
    const long k_hi = static_cast<long>(std::ceil(domain.hi / two_pi));
    for (long k = k_lo; k <= k_hi; ++k) {
        const double lo = std::fmax(domain.lo, m + static_cast<double>(k) * two_pi);
        const double hi = std::fmin(domain.hi, two_pi - m + static_cast<double>(k) * two_pi);
        if (hi >= lo && hi - lo > best.hi - best.lo) best = {lo, hi};
    }
    if (best.hi < best.lo) {
        throw Error(Errc::EmptyRange, "no feasible phase in the profile domain");
    }
    return best;
}

}  // namespace detail

/// Largest sub-interval of the profile domain on which the induced output
/// probabilities stay inside [0, 1]. Exact for cosine and cosh profiles; for
/// custom profiles the range is the longest run of feasible tabulation nodes
/// (exact at the nodes, conservative at the run boundaries).
inline PhaseInterval feasible_phase_range(const ProbPair& p, const DeviationProfile& profile) {
    if (p.degenerate()) {
        throw Error(Errc::DegenerateInput, "feasibility range needs both input outcomes populated");
    }
    const double ratio = p.p2() / p.p1();
    const PhaseInterval domain = profile.domain();
    switch (profile.kind()) {
        case ProfileKind::Cosine: {
            if (ratio >= 1.0) return domain;  // |f| <= 1 <= p2/p1 everywhere
            return detail::longest_cosine_interval(domain, ratio);
        }
        case ProfileKind::Cosh: {
            if (ratio < 1.0) {
                throw Error(Errc::EmptyRange,
                            "cosh profile infeasible: cosh(theta) >= 1 > p2/p1 for all theta");
            }
            const double bound = std::acosh(ratio);
            const double lo = std::fmax(domain.lo, -bound);
            const double hi = std::fmin(domain.hi, bound);
            if (hi < lo) {
                throw Error(Errc::EmptyRange, "cosh feasibility interval misses the profile domain");
            }
            return {lo, hi};
        }
        case ProfileKind::Custom: {
            PhaseInterval best{0.0, -1.0};
            std::size_t i = 0;
            const auto& nodes = profile.nodes();
            while (i < nodes.size()) {
                if (p.p1() * nodes[i].second - p.p2() > kFeasibilityTol) {
                    ++i;
                    continue;
                }
                std::size_t j = i;
                while (j + 1 < nodes.size() &&
                       p.p1() * nodes[j + 1].second - p.p2() <= kFeasibilityTol) {
                    ++j;
                }
                if (nodes[j].first - nodes[i].first > best.hi - best.lo) {
                    best = {nodes[i].first, nodes[j].first};
                }
                i = j + 1;
            }
            if (best.hi < best.lo) {
                throw Error(Errc::EmptyRange, "no feasible node in the custom profile table");
            }
            return best;
        }
    }
    throw Error(Errc::NumericFailure, "unreachable profile kind");
}

/// One sweep sample: the phase, the transformed distribution, and its regime.
struct SweepPoint {
    double theta = 0.0;
    ProbPair output{1.0, 0.0};
    Regime regime = Regime::Classical;
};

/// Pointwise family_transform + classify over an ordered phase grid. An
/// infeasible or out-of-domain grid point aborts the sweep with the offending
/// theta named in the error.
inline std::vector<SweepPoint> sweep(const ProbPair& p, const DeviationProfile& profile,
                                     std::span<const double> thetas,
                                     double eps_classical = kDefaultClassicalEps) {
    std::vector<SweepPoint> points;
    points.reserve(thetas.size());
    for (const double theta : thetas) {
        const ProbPair out = family_transform(p, profile, theta);
        DeviationCoefficients dev = family_deviations(p, profile, theta);
        // family_transform vetted feasibility; drop the sub-tolerance overshoot.
        dev.lambda2 = std::fmax(-1.0, dev.lambda2);
        points.push_back({theta, out, classify(dev, eps_classical)});
    }
    return points;
}

}  // namespace hyperpol
