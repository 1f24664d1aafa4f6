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

#include <cstdint>

#include "hyperpol/prob_pair.hpp"

namespace hyperpol {

/// Relative statistical deviations (lambda1, lambda2) of a probability
/// transform: p_i' = p_i * (1 + lambda_i). A pair is consistent with an input
/// distribution p when lambda1*p1 + lambda2*p2 = 0; that single constraint is
/// what keeps the output normalized.
///
/// No invariant is enforced at construction: consumers validate the ranges
/// they need (e.g. lambda2 >= -1) so that out-of-convention pairs can still be
/// named in error paths.
struct DeviationCoefficients {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

/// Finite-sample estimates of the deviation coefficients, from outcome counts
/// of an ensemble of sample_size members before and after a procedure:
///   lambda_hat_i = (n_i' - n_i) / n_i      relative deviation
///   delta_i      = (n_i' - n_i) / N        absolute frequency shift
/// so delta_i = (n_i / N) * lambda_hat_i by construction.
struct DeviationEstimate {
    double lambda_hat1 = 0.0;
    double lambda_hat2 = 0.0;
    double delta1 = 0.0;
    double delta2 = 0.0;
    std::int64_t sample_size = 0;
};

/// Signed residual lambda1*p1 + lambda2*p2. Zero for every coefficient pair
/// that maps p to a normalized output; the caller compares against its own
/// tolerance.
inline double orthogonality_residual(const ProbPair& p, const DeviationCoefficients& lam) {
    return lam.lambda1 * p.p1() + lam.lambda2 * p.p2();
}

}  // namespace hyperpol
