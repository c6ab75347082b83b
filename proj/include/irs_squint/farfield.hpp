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

#ifndef IRS_SQUINT_FARFIELD_HPP
#define IRS_SQUINT_FARFIELD_HPP

#include "irs_squint/core_model.hpp"

namespace irs_squint
{
    // Far-field DAM co-design: frequency-flat phases plus per-element true-time delays
    struct FarDamDesign
    {
        PhaseProfile phases;
        DelayProfile delays;
        double nu0 = 0.0;
    };

    /*!
    Far-field beam gain at frequency f_hz toward direction nu:

        | sum_r exp(j [phi_r - 2 pi r0 (d / lambda_c)(1 + f / f_c) nu - 2 pi f tau_r]) |

    with tau_r = 0 for the phase-only overload. Result lies in [0, R].
    Throws std::invalid_argument when a profile length differs from R.
    */
    double far_beam_gain(const IrsArray &array, const WidebandConfig &cfg, double f_hz, double nu,
                         const PhaseProfile &phases);

    double far_beam_gain(const IrsArray &array, const WidebandConfig &cfg, double f_hz, double nu,
                         const PhaseProfile &phases, const DelayProfile &delays);

    /// Phases that align all elements toward nu0 at the carrier: phi_r = 4 pi r0 (d / lambda_c) nu0
    PhaseProfile far_optimal_phases(const IrsArray &array, const WidebandConfig &cfg, double nu0);

    /// Direction in which subcarrier f_hz peaks when the phases were designed for nu0 at f_c
    double far_squint_direction(double nu0, double f_hz, double carrier_hz);

    /// Period in nu of the phase-only far-field pattern at f_hz: 1 / ((d / lambda_c)(1 + f / f_c)).
    /// Any window wider than this holds more than one full-gain lobe.
    double far_grating_period(const IrsArray &array, const WidebandConfig &cfg, double f_hz);

    /*!
    Phase/delay co-design that steers every subcarrier to nu0.

    Delays are affine in the element index with slope -(d / lambda_c) nu0 / f_c, shifted so that
    the smallest delay is zero. Phases are 2 pi r0 (d / lambda_c) nu0.
    */
    FarDamDesign far_dam_design(const IrsArray &array, const WidebandConfig &cfg, double nu0);
}

#endif
