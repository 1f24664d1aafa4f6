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

#include <cmath>
#include <numbers>

#include <catch2/catch_amalgamated.hpp>

#include "hyperpol/phase.hpp"
#include "hyperpol/prob_pair.hpp"
#include "hyperpol/regime.hpp"
#include "support.hpp"

using Catch::Matchers::WithinAbs;
using hyperpol::DeviationCoefficients;
using hyperpol::Errc;
using hyperpol::PhaseRepresentation;
using hyperpol::ProbPair;
using hyperpol::Regime;
using support::error_code_of;

namespace {
constexpr double kPi = std::numbers::pi;
// Frozen reference angles, 17 significant digits.
constexpr double kAcosh15 = 0.9624236501192069;        // acosh(1.5)
constexpr double kAcosh3 = 1.762747174039086;          // acosh(3)
constexpr double kAcoshSqrt2 = 0.881373587019543;      // acosh(sqrt 2) = acosh(3)/2
constexpr double kAcosMinus0375 = 1.9551931012905357;  // acos(-0.375)
constexpr double kAcosTwoThirds = 0.8410686705679302;  // acos(2/3)
}  // namespace

TEST_CASE("coefficient pairs split into three regimes", "[regime]") {
    SECTION("vanishing coefficients are classical") {
        REQUIRE(hyperpol::classify({0.0, 0.0}) == Regime::Classical);
        REQUIRE(hyperpol::classify({1e-10, -1e-10}) == Regime::Classical);
    }

    SECTION("the classical threshold is caller-tunable") {
        REQUIRE(hyperpol::classify({1e-3, -1e-3}, 1e-2) == Regime::Classical);
        REQUIRE(hyperpol::classify({1e-3, -1e-3}) == Regime::Trigonometric);
    }

    SECTION("bounded coefficients are trigonometric") {
        REQUIRE(hyperpol::classify({0.5, -0.5}) == Regime::Trigonometric);
        REQUIRE(hyperpol::classify({1.0, -1.0 / 3.0}) == Regime::Trigonometric);
    }

    SECTION("a coefficient above one is hyper-trigonometric") {
        REQUIRE(hyperpol::classify({1.0 + 1e-7, -0.25}) == Regime::HyperTrigonometric);
        REQUIRE(hyperpol::classify({3.0, -1.0}) == Regime::HyperTrigonometric);
    }

    SECTION("outcome order does not matter") {
        REQUIRE(hyperpol::classify({-0.375, 1.5}) == Regime::HyperTrigonometric);
        REQUIRE(hyperpol::classify({-0.5, 0.5}) == Regime::Trigonometric);
    }

    SECTION("a negative coefficient below -1 is not representable") {
        REQUIRE(error_code_of([] { hyperpol::classify({3.0, -1.1}); }) ==
                Errc::InvalidCoefficients);
    }

    SECTION("same-sign pairs are rejected beyond classical noise") {
        REQUIRE(error_code_of([] { hyperpol::classify({0.5, 0.5}); }) ==
                Errc::InvalidCoefficients);
        REQUIRE(hyperpol::classify({1e-12, 1e-12}) == Regime::Classical);
    }
}

TEST_CASE("phase extraction produces the representing angles", "[phase]") {
    SECTION("identity maps to theta = pi/2 on both outcomes") {
        const PhaseRepresentation rep =
            hyperpol::extract_phases(ProbPair(0.3, 0.7), {0.0, 0.0});
        REQUIRE(rep.regime == Regime::Classical);
        REQUIRE_THAT(rep.theta1, WithinAbs(kPi / 2.0, 1e-15));
        REQUIRE_THAT(rep.theta2, WithinAbs(kPi / 2.0, 1e-15));
        REQUIRE_FALSE(rep.index_swapped);
    }

    SECTION("a trigonometric pair splits into supplementary angles") {
        const double theta = 1.1;
        const DeviationCoefficients lam{std::cos(theta), -std::cos(theta)};
        const PhaseRepresentation rep = hyperpol::extract_phases(ProbPair(0.5, 0.5), lam);
        REQUIRE(rep.regime == Regime::Trigonometric);
        REQUIRE_THAT(rep.theta1, WithinAbs(theta, 1e-12));
        REQUIRE_THAT(rep.theta2, WithinAbs(kPi - theta, 1e-12));
    }

    SECTION("cos(theta1) = 2/3 against a 0.3/0.7 split") {
        const DeviationCoefficients lam{2.0 / 3.0, -(2.0 / 3.0) * 0.3 / 0.7};
        const PhaseRepresentation rep = hyperpol::extract_phases(ProbPair(0.3, 0.7), lam);
        REQUIRE(rep.regime == Regime::Trigonometric);
        REQUIRE_THAT(rep.theta1, WithinAbs(kAcosTwoThirds, 1e-15));
    }

    SECTION("the amplifying coefficient 1.5 carries acosh(1.5)") {
        const PhaseRepresentation rep =
            hyperpol::extract_phases(ProbPair(0.2, 0.8), {1.5, -0.375});
        REQUIRE(rep.regime == Regime::HyperTrigonometric);
        REQUIRE_THAT(rep.theta1, WithinAbs(kAcosh15, 1e-15));
        REQUIRE_THAT(rep.theta2, WithinAbs(kAcosMinus0375, 1e-15));
        REQUIRE_FALSE(rep.index_swapped);
    }

    SECTION("full transfer from a quarter is the acosh(3) phase") {
        const PhaseRepresentation rep =
            hyperpol::extract_phases(ProbPair(0.25, 0.75), {3.0, -1.0});
        REQUIRE(rep.regime == Regime::HyperTrigonometric);
        REQUIRE_THAT(rep.theta1, WithinAbs(kAcosh3, 1e-15));
        REQUIRE_THAT(rep.theta1 / 2.0, WithinAbs(kAcoshSqrt2, 1e-15));
        REQUIRE_THAT(rep.theta2, WithinAbs(kPi, 1e-15));
    }

    SECTION("a reversed pair reports the swap") {
        const PhaseRepresentation rep =
            hyperpol::extract_phases(ProbPair(0.8, 0.2), {-0.375, 1.5});
        REQUIRE(rep.regime == Regime::HyperTrigonometric);
        REQUIRE(rep.index_swapped);
        REQUIRE_THAT(rep.theta1, WithinAbs(kAcosh15, 1e-15));
    }

    SECTION("the boundary coefficient 1 sits at theta1 = 0 in the bounded regime") {
        const PhaseRepresentation rep =
            hyperpol::extract_phases(ProbPair(0.25, 0.75), {1.0, -1.0 / 3.0});
        REQUIRE(rep.regime == Regime::Trigonometric);
        REQUIRE(rep.theta1 == 0.0);
    }

    SECTION("coefficients that are not paired with p are rejected") {
        REQUIRE(error_code_of([] {
                    hyperpol::extract_phases(ProbPair(0.5, 0.5), {0.5, 0.5});
                }) == Errc::NonNormalizable);
    }
}

TEST_CASE("phases reproduce the coefficients they were extracted from",
          "[phase][property]") {
    support::UniformSource draw(99);
    for (int i = 0; i < 2000; ++i) {
        const ProbPair p = ProbPair::from_p1(draw.in_range(0.05, 0.95));
        // Sample lambda1 across both regimes, keeping lambda2 = -lambda1*p1/p2
        // inside [-1, 0] so the pair stays representable.
        const double lam1_max = std::fmin(3.0, p.p2() / p.p1());
        const double lam1 = draw.in_range(0.0, lam1_max);
        const DeviationCoefficients lam{lam1, -lam1 * p.p1() / p.p2()};

        const PhaseRepresentation rep = hyperpol::extract_phases(p, lam);
        const double back =
            rep.regime == Regime::HyperTrigonometric ? std::cosh(rep.theta1) : std::cos(rep.theta1);
        REQUIRE_THAT(back, WithinAbs(lam.lambda1, 1e-9));
        REQUIRE_THAT(std::cos(rep.theta2), WithinAbs(lam.lambda2, 1e-9));
    }
}
