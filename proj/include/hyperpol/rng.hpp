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
#include <random>

namespace hyperpol {

/// Names one reproducible pseudo-random stream. Equal (seed, stream) pairs
/// yield identical sequences; distinct pairs yield independent streams, which
/// is how replicas get their own randomness without coordination.
struct SeedSpec {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

/// mt19937_64 is fully specified by the standard, so a stream is reproducible
/// across platforms for one library version.
using Engine = std::mt19937_64;

inline Engine make_engine(const SeedSpec& spec) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(spec.seed),
        static_cast<std::uint32_t>(spec.seed >> 32),
        static_cast<std::uint32_t>(spec.stream),
        static_cast<std::uint32_t>(spec.stream >> 32),
    };
    return Engine(seq);
}

/// Uniform double in [0, 1) with 53 random bits. Avoids
/// std::uniform_real_distribution, whose output is implementation-defined.
inline double uniform_unit(Engine& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

/// One Bernoulli(q) trial. Exact at the endpoints: q = 0 never fires,
/// q = 1 always fires.
inline bool bernoulli(Engine& engine, double q) {
    return uniform_unit(engine) < q;
}

/// Binomial(n, q) sample by counting n Bernoulli trials. Linear in n, but
/// exact and trivially reproducible; ensemble sizes up to ~10^7 stay cheap.
inline std::int64_t binomial_count(Engine& engine, std::int64_t n, double q) {
    if (n <= 0 || q <= 0.0) return 0;
    if (q >= 1.0) return n;
    std::int64_t count = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        count += bernoulli(engine, q) ? 1 : 0;
    }
    return count;
}

}  // namespace hyperpol
