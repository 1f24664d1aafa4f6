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
#include <utility>

#include "hyperpol/deviation.hpp"
#include "hyperpol/errors.hpp"

namespace hyperpol {

/// The three families of probability transforms, keyed by the magnitude of
/// the positive deviation coefficient after index normalization:
///   Classical          max(|lambda1|, |lambda2|) <= eps   (identity transform)
///   Trigonometric      lambda1 <= 1, both representable as cos(theta)
///   HyperTrigonometric lambda1 > 1, representable only as cosh(theta1)
enum class Regime {
    Classical,
    Trigonometric,
    HyperTrigonometric,
};

inline const char* regime_name(Regime regime) {
    switch (regime) {
        case Regime::Classical: return "Classical";
        case Regime::Trigonometric: return "Trigonometric";
        case Regime::HyperTrigonometric: return "HyperTrigonometric";
    }
    return "unknown";
}

/// Threshold under which a coefficient pair counts as Classical for analytic
/// inputs. Finite-sample estimates should pass a caller-chosen threshold.
inline constexpr double kDefaultClassicalEps = 1e-9;

namespace detail {

/// Reorders (lambda1, lambda2) so the non-negative coefficient comes first.
/// Returns true when the indices were swapped. Coefficients of a consistent
/// pair always carry opposite signs, so a pair that is strictly positive (or
/// strictly negative) on both sides beyond eps is rejected.
inline bool normalize_indices(DeviationCoefficients& lam, double eps) {
    if (lam.lambda1 >= 0.0 && lam.lambda2 <= 0.0) return false;
    if (lam.lambda2 >= 0.0 && lam.lambda1 <= 0.0) {
        std::swap(lam.lambda1, lam.lambda2);
        return true;
    }
    // Same strict sign on both sides: tolerate it only as classical noise.
    if (std::fabs(lam.lambda1) <= eps && std::fabs(lam.lambda2) <= eps) return false;
    throw Error(Errc::InvalidCoefficients,
                "deviation coefficients must have opposite signs, got (" +
                    std::to_string(lam.lambda1) + ", " + std::to_string(lam.lambda2) + ")");
}

}  // namespace detail

/// Assigns a coefficient pair to its regime. Outcome labels are normalized
/// internally (positive coefficient first), so the result does not depend on
/// which outcome the caller listed first. The boundary lambda1 = 1 belongs to
/// Trigonometric, where the cos and cosh representations coincide at theta = 0.
inline Regime classify(DeviationCoefficients lam, double eps_classical = kDefaultClassicalEps) {
    detail::normalize_indices(lam, eps_classical);
    if (lam.lambda2 < -1.0) {
        throw Error(Errc::InvalidCoefficients,
                    "negative deviation coefficient " + std::to_string(lam.lambda2) +
                        " below -1 would give a negative output probability");
    }
    if (std::fmax(std::fabs(lam.lambda1), std::fabs(lam.lambda2)) <= eps_classical) {
        return Regime::Classical;
    }
    return lam.lambda1 <= 1.0 ? Regime::Trigonometric : Regime::HyperTrigonometric;
}

}  // namespace hyperpol
