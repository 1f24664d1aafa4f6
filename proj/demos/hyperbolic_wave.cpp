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

// Drives the hyperbolic procedure family on an unbalanced pair up to its
// feasibility edge, where the first outcome becomes certain, then inverts
// that certainty transform to recover the phase that produced it.

#include <cstdio>
#include <vector>

#include "hyperpol/hyperpol.hpp"

int main() {
    const hyperpol::ProbPair p(0.25, 0.75);
    const hyperpol::DeviationProfile cosh_family = hyperpol::DeviationProfile::hyperbolic();

    const hyperpol::PhaseInterval range = hyperpol::feasible_phase_range(p, cosh_family);
    std::printf("input pair (%.2f, %.2f): feasible phases [%.6f, %.6f]\n\n", p.p1(), p.p2(),
                range.lo, range.hi);

    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i) {
        grid.push_back(range.lo + (range.hi - range.lo) * static_cast<double>(i) / 10.0);
    }
    std::printf("theta       p1'        p2'        regime\n");
    for (const hyperpol::SweepPoint& point : hyperpol::sweep(p, cosh_family, grid)) {
        std::printf("%.6f   %.6f   %.6f   %s\n", point.theta, point.output.p1(),
                    point.output.p2(), hyperpol::regime_name(point.regime));
    }

    const hyperpol::ProbPair certain(1.0, 0.0);
    const hyperpol::DeviationCoefficients lam = hyperpol::extract_deviations(p, certain);
    const hyperpol::PhaseRepresentation rep = hyperpol::extract_phases(p, lam);
    std::printf("\ninverting (%.2f, %.2f) -> (1, 0): lambda = (%g, %g), %s\n", p.p1(), p.p2(),
                lam.lambda1, lam.lambda2, hyperpol::regime_name(rep.regime));
    std::printf("theta1 = %.15f, theta1/2 = %.15f\n", rep.theta1, rep.theta1 / 2.0);
    return 0;
}
