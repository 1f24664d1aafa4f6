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

// Walks the cosine procedure family on the balanced pair and prints the
// squared-cosine transmission curve it traces, together with the regime each
// phase lands in.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "hyperpol/hyperpol.hpp"

int main() {
    const hyperpol::ProbPair balanced(0.5, 0.5);
    const hyperpol::DeviationProfile cosine = hyperpol::DeviationProfile::cosine();

    std::vector<double> grid;
    for (int i = 0; i <= 18; ++i) {
        grid.push_back(std::numbers::pi * static_cast<double>(i) / 18.0);
    }
    const std::vector<hyperpol::SweepPoint> curve =
        hyperpol::sweep(balanced, cosine, grid);

    std::printf("alpha(deg)   p1'        cos^2(alpha)  regime\n");
    for (const hyperpol::SweepPoint& point : curve) {
        const double alpha = point.theta / 2.0;
        const double reference = std::cos(alpha) * std::cos(alpha);
        const int bar = static_cast<int>(std::lround(point.output.p1() * 32.0));
        std::printf("%8.1f   %.6f   %.6f      %-18s |%s\n", alpha * 180.0 / std::numbers::pi,
                    point.output.p1(), reference, hyperpol::regime_name(point.regime),
                    std::string(static_cast<std::size_t>(bar), '#').c_str());
    }
    return 0;
}
