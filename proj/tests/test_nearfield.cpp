// SPDX-License-Identifier: Apache-2.0
//
// irs-squint: wideband THz intelligent reflecting surface beam squint toolkit
// Copyright (C) 2026 The irs-squint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <catch_amalgamated.hpp>

#include "irs_squint/nearfield.hpp"

#include <cmath>
#include <random>

using namespace irs_squint;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    const WidebandConfig cfg(200e9, 6e9, 128);

    NearFieldGeometry layout(std::size_t R)
    {
        return NearFieldGeometry({0, 0}, {3, 0}, {1, 1}, IrsArray::half_wavelength(R, cfg));
    }
}

TEST_CASE("Element distances")
{
    const auto geom = layout(64);
    const auto d = element_distances(geom, {0, 0});
    CHECK_THAT(d[0], WithinRel(std::sqrt(2.0), 1e-15));
    CHECK_THROWS_AS(element_distances(geom, {1, 1}), CoincidentPointError);

    // Point on the array line, left of the first element: distances grow with r
    const auto left = element_distances(geom, {0.5, 1.0});
    for (std::size_t r = 1; r < left.size(); ++r)
        REQUIRE(left[r] > left[r - 1]);
}

TEST_CASE("Near gain")
{
    const auto geom = layout(64);
    const auto phases = near_optimal_phases(geom, cfg);

    CHECK_THAT(near_beam_gain(geom, cfg, 200e9, geom.user(), phases), WithinRel(64.0, 1e-9));
    CHECK(near_beam_gain(geom, cfg, cfg.subcarrier_hz(0), geom.user(), phases) < 64.0 * (1.0 - 1e-6));

    const auto single = layout(1);
    const auto p1 = PhaseProfile::zeros(1);
    for (double f : {190e9, 200e9, 210e9})
        CHECK_THAT(near_beam_gain(single, cfg, f, {2.2, -0.7}, p1), WithinRel(1.0, 1e-15));

    CHECK_THROWS_AS(near_beam_gain(geom, cfg, 200e9, geom.user(), PhaseProfile::zeros(63)), std::invalid_argument);
    CHECK_THROWS_AS(near_beam_gain(geom, cfg, 200e9, geom.element_position(3), phases), CoincidentPointError);
}

TEST_CASE("Near gain bound")
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> xy(-2.0, 4.0), ph(0.0, two_pi), fr(195e9, 205e9);
    const auto geom = layout(32);
    for (int trial = 0; trial < 200; ++trial)
    {
        std::vector<double> v(32);
        for (auto &p : v)
            p = ph(rng);
        const double g = near_beam_gain(geom, cfg, fr(rng), {xy(rng), xy(rng)}, PhaseProfile(v));
        REQUIRE(g >= 0.0);
        REQUIRE(g <= 32.0 + 1e-9);
    }
}

TEST_CASE("Near optimal phases")
{
    const auto single = layout(1);
    const double expect = std::fmod(4.0 * pi / cfg.wavelength_m() * (std::sqrt(2.0) + std::sqrt(5.0)), two_pi);
    CHECK_THAT(near_optimal_phases(single, cfg)[0], WithinAbs(expect, 1e-9));

    const auto geom = layout(24);
    const auto best = near_optimal_phases(geom, cfg);
    const double g0 = near_beam_gain(geom, cfg, 200e9, geom.user(), best);
    CHECK_THAT(g0, WithinRel(24.0, 1e-9));
    for (std::size_t r = 0; r < 24; ++r)
        for (double delta : {-0.1, 0.1})
        {
            std::vector<double> v(best.values().begin(), best.values().end());
            v[r] += delta;
            REQUIRE(near_beam_gain(geom, cfg, 200e9, geom.user(), PhaseProfile(v)) <= g0 + 1e-12);
        }
}

TEST_CASE("Near focal distance")
{
    const auto geom = layout(64);
    for (std::size_t r : {0u, 31u, 63u})
        CHECK_THAT(near_squint_distance(geom, cfg, 200e9, r).distance_m, WithinRel(geom.user_distances()[r], 1e-14));

    CHECK(near_squint_distance(geom, cfg, 203e9, 0).distance_m < geom.user_distances()[0]);
    CHECK(near_squint_distance(geom, cfg, 197e9, 0).distance_m > geom.user_distances()[0]);

    // Stationarity: 2 (d_BR + d_RU) = (1 + f / f_c)(d_BR + d_RU')
    const double f = 197.0234375e9;
    const auto fd = near_squint_distance(geom, cfg, f, 0);
    CHECK_THAT((1.0 + f / 200e9) * (std::sqrt(2.0) + fd.distance_m),
               WithinRel(2.0 * (std::sqrt(2.0) + std::sqrt(5.0)), 1e-14));
    CHECK(fd.physical());

    // Far-away BS and a user hugging the array: no physical point above the carrier
    const NearFieldGeometry hug({0, 0}, {10.0, 0.5}, {10.0, 0.0}, IrsArray(4, 1e-3));
    const WidebandConfig wide(1e9, 1.9e9, 2);
    const auto neg = near_squint_distance(hug, wide, 1.5e9, 0);
    CHECK(neg.distance_m < 0.0);
    CHECK_FALSE(neg.physical());

    CHECK_THROWS_AS(near_squint_distance(geom, cfg, 200e9, 64), std::out_of_range);
}

TEST_CASE("Near DAM design")
{
    SECTION("single element")
    {
        const auto d = near_dam_design(layout(1), cfg);
        CHECK(d.delays[0] == 0.0);
        CHECK_THAT(d.common_delay_s, WithinRel((std::sqrt(2.0) + std::sqrt(5.0)) / speed_of_light, 1e-15));
    }

    SECTION("reference layout")
    {
        const auto geom = layout(64);
        const auto d = near_dam_design(geom, cfg);
        const auto path = geom.path_lengths();
        double min_delay = 1.0;
        for (std::size_t r = 0; r < 64; ++r)
        {
            REQUIRE(d.delays[r] >= 0.0);
            min_delay = std::min(min_delay, d.delays[r]);
            REQUIRE_THAT(d.delays[r], WithinAbs(d.common_delay_s - path[r] / speed_of_light, 1e-20));
            const double want = 2.0 * pi / cfg.wavelength_m() * path[r];
            REQUIRE_THAT(std::remainder(d.phases[r] - want, two_pi), WithinAbs(0.0, 1e-9));
            // Delays mirror the path-length profile
            if (r > 0)
                REQUIRE((d.delays[r] - d.delays[r - 1]) * (path[r] - path[r - 1]) <= 0.0);
        }
        CHECK(min_delay == 0.0);
        CHECK(d.focus == geom.user());

        for (double f : subcarrier_frequencies(cfg))
            REQUIRE_THAT(near_beam_gain(geom, cfg, f, geom.user(), d.phases, d.delays), WithinRel(64.0, 1e-9));
    }

    SECTION("adding a common delay leaves every gain unchanged")
    {
        const auto geom = layout(64);
        const auto d = near_dam_design(geom, cfg);
        std::mt19937_64 rng(9);
        std::uniform_real_distribution<double> shift(0.0, 1e-8);
        for (int trial = 0; trial < 20; ++trial)
        {
            const auto moved = d.delays.shifted(shift(rng));
            for (std::size_t m = 0; m < 128; m += 21)
            {
                const double f = cfg.subcarrier_hz(m);
                const Point2 p = {2.9, 0.1};
                REQUIRE_THAT(near_beam_gain(geom, cfg, f, p, d.phases, moved),
                             WithinAbs(near_beam_gain(geom, cfg, f, p, d.phases, d.delays), 1e-10));
            }
        }
    }
}

TEST_CASE("Edge-subcarrier loss grows with the element count")
{
    double prev = 2.0;
    for (std::size_t R : {32, 64, 128, 256})
    {
        const auto geom = layout(R);
        const double g =
            near_beam_gain(geom, cfg, cfg.subcarrier_hz(0), geom.user(), near_optimal_phases(geom, cfg)) / double(R);
        CHECK(g < prev);
        prev = g;
    }
}
