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
#include "hyperpol/regime.hpp"
#include "hyperpol/transform.hpp"

namespace hyperpol {

/// Phase form of a deviation pair, full-angle convention:
///   Trigonometric:      lambda1 = cos(theta1),  theta1 in [0, pi]
///   HyperTrigonometric: lambda1 = cosh(theta1), theta1 >= 0
/// and in either case lambda2 = cos(theta2) with theta2 in [pi/2, pi].
/// index_swapped records that the outcomes were reordered to put the
/// non-negative coefficient first; callers keep their own labeling.
struct PhaseRepresentation {
    Regime regime = Regime::Classical;
    double theta1 = 0.0;
    double theta2 = 0.0;
    bool index_swapped = false;
};

/// Converts a coefficient pair consistent with p into its phase form. The
/// identity transform maps to theta1 = theta2 = pi/2 (both cosines vanish).
inline PhaseRepresentation extract_phases(const ProbPair& p, DeviationCoefficients lam,
                                          double eps_classical = kDefaultClassicalEps) {
    const double residual = orthogonality_residual(p, lam);
    if (!(std::fabs(residual) <= kOrthogonalityTol)) {
        throw Error(Errc::NonNormalizable,
                    "orthogonality residual " + std::to_string(residual) +
                        " exceeds tolerance; coefficients are not paired with p");
    }
    const Regime regime = classify(lam, eps_classical);
    const bool swapped = detail::normalize_indices(lam, eps_classical);

    PhaseRepresentation rep;
    rep.regime = regime;
    rep.index_swapped = swapped;
    rep.theta1 = lam.lambda1 <= 1.0 ? std::acos(lam.lambda1) : std::acosh(lam.lambda1);
    // classify() bounded lambda2 from below; classical noise may leave it a
    // hair above zero, which acos handles without leaving [0, pi].
    rep.theta2 = std::acos(std::fmin(1.0, lam.lambda2));
    return rep;
}

}  // namespace hyperpol
