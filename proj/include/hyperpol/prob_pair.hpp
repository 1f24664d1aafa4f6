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

#include "hyperpol/errors.hpp"

namespace hyperpol {

/// |p1 + p2 - 1| must stay below this for a pair to count as normalized.
inline constexpr double kNormalizationTol = 1e-12;

/// Slack tolerated outside [0, 1] per component before rejecting a value.
/// Values inside the slack are clamped back onto the interval, which absorbs
/// the last-ulp noise of boundary transforms (e.g. an output of -1e-17).
inline constexpr double kComponentTol = 1e-12;

/// A normalized two-outcome probability distribution. Serves both as the
/// input p and the output p' of a preparation transform.
class ProbPair {
  public:
    ProbPair(double p1, double p2) {
        check_component(p1, "p1");
        check_component(p2, "p2");
        const double sum = p1 + p2;
        if (!(std::fabs(sum - 1.0) <= kNormalizationTol)) {
            throw Error(Errc::NonNormalizable,
                        "probability pair sums to " + std::to_string(sum) + ", expected 1");
        }
        p1_ = clamp_unit(p1);
        p2_ = clamp_unit(p2);
    }

    /// Builds (p1, 1 - p1). The complement is taken in one rounding, so the
    /// pair sums to 1 up to one ulp.
    static ProbPair from_p1(double p1) { return ProbPair(p1, 1.0 - p1); }

    double p1() const noexcept { return p1_; }
    double p2() const noexcept { return p2_; }

    /// True when some outcome has probability exactly zero. Deviation
    /// extraction divides by each component and rejects degenerate inputs.
    bool degenerate() const noexcept { return p1_ == 0.0 || p2_ == 0.0; }

  private:
    static void check_component(double value, const char* name) {
        if (!(value >= -kComponentTol && value <= 1.0 + kComponentTol)) {
            throw Error(Errc::OutOfRange,
                        std::string(name) + " = " + std::to_string(value) + " outside [0, 1]");
        }
    }

    static double clamp_unit(double value) {
        if (value < 0.0) return 0.0;
        if (value > 1.0) return 1.0;
        return value;
    }

    double p1_;
    double p2_;
};

}  // namespace hyperpol
