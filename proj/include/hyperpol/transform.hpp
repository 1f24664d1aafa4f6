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
#include <string>

#include "hyperpol/deviation.hpp"
#include "hyperpol/errors.hpp"
#include "hyperpol/prob_pair.hpp"

namespace hyperpol {

/// Maximum |lambda1*p1 + lambda2*p2| accepted when a coefficient pair claims
/// to belong to a distribution. Looser than kNormalizationTol so that
/// coefficients recovered through cos/cosh round trips still pass the gate;
/// the output pair is then re-validated at the strict tolerance.
inline constexpr double kOrthogonalityTol = 1e-9;

/// Absolute slack, on the probability scale, granted to phase feasibility
/// checks so that a range endpoint computed to the nearest ulp stays feasible.
inline constexpr double kFeasibilityTol = 1e-12;

/// Applies the transform p_i' = p_i * (1 + lambda_i).
///
/// The coefficient pair must satisfy the orthogonality relation with p (that
/// is what makes the output sum to one) and must keep every component inside
/// [0, 1]. Throws NonNormalizable when the residual exceeds kOrthogonalityTol
/// or when the output fails normalization, OutOfRange when a component leaves
/// [0, 1] beyond kComponentTol.
inline ProbPair forward_transform(const ProbPair& p, const DeviationCoefficients& lam) {
    const double residual = orthogonality_residual(p, lam);
    if (!(std::fabs(residual) <= kOrthogonalityTol)) {
        throw Error(Errc::NonNormalizable,
                    "orthogonality residual lambda1*p1 + lambda2*p2 = " +
                        std::to_string(residual) + " exceeds tolerance");
    }
    return ProbPair(p.p1() * (1.0 + lam.lambda1), p.p2() * (1.0 + lam.lambda2));
}

/// Recovers the deviation coefficients lambda_i = p_out_i / p_in_i - 1 that
/// map p_in onto p_out. Both input components must be nonzero.
inline DeviationCoefficients extract_deviations(const ProbPair& p_in, const ProbPair& p_out) {
    if (p_in.degenerate()) {
        throw Error(Errc::DegenerateInput,
                    "deviation coefficients are undefined for a zero input probability");
    }
    return {p_out.p1() / p_in.p1() - 1.0, p_out.p2() / p_in.p2() - 1.0};
}

/// Trigonometric rule: p1' = 2*p1*cos^2(theta1/2), with the partner
/// coefficient lambda2 = -p1*cos(theta1)/p2 fixed by orthogonality.
/// Requires |p1*cos(theta1)| <= p2, i.e. lambda2 must itself be a cosine.
inline ProbPair trig_rule(const ProbPair& p, double theta1) {
    if (p.degenerate()) {
        throw Error(Errc::DegenerateInput, "trigonometric rule needs both input outcomes populated");
    }
    const double c = std::cos(theta1);
    if (std::fabs(p.p1() * c) - p.p2() > kFeasibilityTol) {
        throw Error(Errc::InfeasiblePhase,
                    "theta1 = " + std::to_string(theta1) + " gives |lambda2| > 1 for p1 = " +
                        std::to_string(p.p1()));
    }
    const double lambda2 = std::fmax(-1.0, std::fmin(1.0, -p.p1() * c / p.p2()));
    const double half = std::cos(theta1 / 2.0);
    return ProbPair(2.0 * p.p1() * half * half, p.p2() * (1.0 + lambda2));
}

/// Hyperbolic/trigonometric rule: p1' = 2*p1*cosh^2(theta1/2), with
/// lambda2 = -p1*cosh(theta1)/p2. Requires cosh(theta1) <= p2/p1 so that the
/// shrinking outcome stays non-negative.
inline ProbPair hyper_rule(const ProbPair& p, double theta1) {
    if (p.degenerate()) {
        throw Error(Errc::DegenerateInput, "hyperbolic rule needs both input outcomes populated");
    }
    const double ch = std::cosh(theta1);
    if (p.p1() * ch - p.p2() > kFeasibilityTol) {
        throw Error(Errc::InfeasiblePhase,
                    "cosh(theta1) = " + std::to_string(ch) + " exceeds p2/p1 = " +
                        std::to_string(p.p2() / p.p1()));
    }
    const double lambda2 = std::fmax(-1.0, -p.p1() * ch / p.p2());
    const double half = std::cosh(theta1 / 2.0);
    return ProbPair(2.0 * p.p1() * half * half, p.p2() * (1.0 + lambda2));
}

/// Polarizer transmission probabilities (cos^2 a, sin^2 a): the trigonometric
/// rule at p = (1/2, 1/2) with full angle theta1 = 2a.
inline ProbPair malus(double alpha) {
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    return ProbPair(c * c, s * s);
}

}  // namespace hyperpol
