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

#include "irs_squint/farfield.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace irs_squint
{
    namespace
    {
        void check_length(std::size_t got, const IrsArray &array, const char *what)
        {
            if (got != array.elements)
                throw std::invalid_argument(std::string(what) + " length " + std::to_string(got) +
                                            " does not match R = " + std::to_string(array.elements) + ".");
        }

        void check_frequency(double f_hz)
        {
            if (!std::isfinite(f_hz) || f_hz <= 0.0)
                throw std::invalid_argument("Frequency must be finite and > 0.");
        }

        double gain_impl(const IrsArray &array, const WidebandConfig &cfg, double f_hz, double nu,
                         const PhaseProfile &phases, const DelayProfile *delays)
        {
            check_length(phases.size(), array, "Phase profile");
            if (delays)
                check_length(delays->size(), array, "Delay profile");
            check_frequency(f_hz);
            check_direction(nu);

            const double step = two_pi * array.spacing_in_wavelengths(cfg) * (1.0 + f_hz / cfg.carrier_hz()) * nu;
            cplx acc(0.0, 0.0);
            for (std::size_t r0 = 0; r0 < array.elements; ++r0)
            {
                double arg = phases[r0] - double(r0) * step;
                if (delays)
                    arg -= two_pi * f_hz * (*delays)[r0];
                acc += std::polar(1.0, arg);
            }
            return std::abs(acc);
        }
    }

    double far_beam_gain(const IrsArray &array, const WidebandConfig &cfg, double f_hz, double nu,
                         const PhaseProfile &phases)
    {
        return gain_impl(array, cfg, f_hz, nu, phases, nullptr);
    }

    double far_beam_gain(const IrsArray &array, const WidebandConfig &cfg, double f_hz, double nu,
                         const PhaseProfile &phases, const DelayProfile &delays)
    {
        return gain_impl(array, cfg, f_hz, nu, phases, &delays);
    }

    PhaseProfile far_optimal_phases(const IrsArray &array, const WidebandConfig &cfg, double nu0)
    {
        check_direction(nu0, "nu0");

        // Zero exponent at (f_c, nu0): phi_r = 2 pi r0 (d / lambda_c) * 2 * nu0
        const double step = 2.0 * two_pi * array.spacing_in_wavelengths(cfg) * nu0;
        std::vector<double> phi(array.elements);
        for (std::size_t r0 = 0; r0 < phi.size(); ++r0)
            phi[r0] = double(r0) * step;
        return PhaseProfile(std::move(phi));
    }

    double far_squint_direction(double nu0, double f_hz, double carrier_hz)
    {
        check_frequency(f_hz);
        check_frequency(carrier_hz);
        return 2.0 * nu0 / (1.0 + f_hz / carrier_hz);
    }

    double far_grating_period(const IrsArray &array, const WidebandConfig &cfg, double f_hz)
    {
        if (!std::isfinite(f_hz) || f_hz <= 0.0)
            throw std::invalid_argument("Frequency must be finite and > 0.");
        return 1.0 / (array.spacing_in_wavelengths(cfg) * (1.0 + f_hz / cfg.carrier_hz()));
    }

    FarDamDesign far_dam_design(const IrsArray &array, const WidebandConfig &cfg, double nu0)
    {
        check_direction(nu0, "nu0");

        const double ratio = array.spacing_in_wavelengths(cfg);
        const double phase_step = two_pi * ratio * nu0;
        const double delay_step = -ratio * nu0 / cfg.carrier_hz(); // -nu0 / (2 f_c) at half wavelength

        // nu0 > 0 makes the raw delays negative; lift them by (R - 1) nu0 / (2 f_c)
        const double offset = nu0 > 0.0 ? -double(array.elements - 1) * delay_step : 0.0;

        std::vector<double> phi(array.elements), tau(array.elements);
        for (std::size_t r0 = 0; r0 < array.elements; ++r0)
        {
            phi[r0] = double(r0) * phase_step;
            tau[r0] = offset + double(r0) * delay_step;
        }

        return {PhaseProfile(std::move(phi)), DelayProfile(std::move(tau)), nu0};
    }
}
