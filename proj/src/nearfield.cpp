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

#include "irs_squint/nearfield.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace irs_squint
{
    namespace
    {
        void check_length(std::size_t got, const NearFieldGeometry &geom, const char *what)
        {
            if (got != geom.array().elements)
                throw std::invalid_argument(std::string(what) + " length " + std::to_string(got) +
                                            " does not match R = " + std::to_string(geom.array().elements) + ".");
        }

        void check_frequency(double f_hz)
        {
            if (!std::isfinite(f_hz) || f_hz <= 0.0)
                throw std::invalid_argument("Frequency must be finite and > 0.");
        }

        double gain_impl(const NearFieldGeometry &geom, const WidebandConfig &cfg, double f_hz, const Point2 &target,
                         const PhaseProfile &phases, const DelayProfile *delays)
        {
            check_length(phases.size(), geom, "Phase profile");
            if (delays)
                check_length(delays->size(), geom, "Delay profile");
            check_frequency(f_hz);

            const auto &d_br = geom.bs_distances();
            const auto d_ru = geom.distances_to(target);
            const double k = two_pi / cfg.wavelength_m() * (1.0 + f_hz / cfg.carrier_hz());

            cplx acc(0.0, 0.0);
            for (std::size_t r0 = 0; r0 < d_ru.size(); ++r0)
            {
                double arg = phases[r0] - k * (d_br[r0] + d_ru[r0]);
                if (delays)
                    arg -= two_pi * f_hz * (*delays)[r0];
                acc += std::polar(1.0, arg);
            }
            return std::abs(acc);
        }
    }

    std::vector<double> element_distances(const NearFieldGeometry &geom, const Point2 &point)
    {
        return geom.distances_to(point);
    }

    double near_beam_gain(const NearFieldGeometry &geom, const WidebandConfig &cfg, double f_hz, const Point2 &target,
                          const PhaseProfile &phases)
    {
        return gain_impl(geom, cfg, f_hz, target, phases, nullptr);
    }

    double near_beam_gain(const NearFieldGeometry &geom, const WidebandConfig &cfg, double f_hz, const Point2 &target,
                          const PhaseProfile &phases, const DelayProfile &delays)
    {
        return gain_impl(geom, cfg, f_hz, target, phases, &delays);
    }

    PhaseProfile near_optimal_phases(const NearFieldGeometry &geom, const WidebandConfig &cfg)
    {
        const double k = 4.0 * pi / cfg.wavelength_m();
        auto phi = geom.path_lengths();
        for (auto &p : phi)
            p *= k;
        return PhaseProfile(std::move(phi));
    }

    FocalDistance near_squint_distance(const NearFieldGeometry &geom, const WidebandConfig &cfg, double f_hz,
                                       std::size_t r0)
    {
        check_frequency(f_hz);
        if (r0 >= geom.array().elements)
            throw std::out_of_range("Element index out of range.");

        const double d_br = geom.bs_distances()[r0];
        const double d_ru = geom.user_distances()[r0];
        return {2.0 * (d_br + d_ru) / (1.0 + f_hz / cfg.carrier_hz()) - d_br};
    }

    NearDamDesign near_dam_design(const NearFieldGeometry &geom, const WidebandConfig &cfg)
    {
        const auto path = geom.path_lengths();
        const double longest = *std::max_element(path.begin(), path.end());
        const double k = two_pi / cfg.wavelength_m();

        NearDamDesign design;
        design.common_delay_s = longest / speed_of_light;
        design.focus = geom.user();

        std::vector<double> phi(path.size()), tau(path.size());
        for (std::size_t r0 = 0; r0 < path.size(); ++r0)
        {
            phi[r0] = k * path[r0];
            // (longest - path) keeps the argmax element at exactly zero
            tau[r0] = (longest - path[r0]) / speed_of_light;
        }
        design.phases = PhaseProfile(std::move(phi));
        design.delays = DelayProfile(std::move(tau));
        return design;
    }
}
