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
#include <utility>

#include <catch2/catch_amalgamated.hpp>

#include "hyperpol/errors.hpp"
#include "hyperpol/rng.hpp"

namespace support {

/// Runs fn, requires that it throws hyperpol::Error, and hands back the code
/// so call sites can assert the exact failure category.
template <typename Fn>
hyperpol::Errc error_code_of(Fn&& fn) {
    try {
        std::forward<Fn>(fn)();
    } catch (const hyperpol::Error& error) {
        return error.code();
    }
    FAIL("expected a hyperpol::Error");
    return hyperpol::Errc::NumericFailure;  // unreachable: FAIL throws
}

/// Deterministic scalar source for property-style tests; one fixed seed per
/// test case keeps failures reproducible without a shrinking framework.
class UniformSource {
  public:
    explicit UniformSource(std::uint64_t seed) : engine_(hyperpol::make_engine({seed, 0})) {}

    double in_range(double lo, double hi) {
        return lo + (hi - lo) * hyperpol::uniform_unit(engine_);
    }

  private:
    hyperpol::Engine engine_;
};

}  // namespace support
