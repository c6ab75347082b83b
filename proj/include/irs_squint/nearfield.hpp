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

#ifndef IRS_SQUINT_NEARFIELD_HPP
#define IRS_SQUINT_NEARFIELD_HPP

#include "irs_squint/core_model.hpp"

namespace irs_squint
{
    // Near-field DAM co-design focused on the user location
    struct NearDamDesign
    {
        PhaseProfile phases;
        DelayProfile delays;
        double common_delay_s = 0.0; // T = max_r (d_r^BR + d_r^RU) / c
        Point2 focus;
    };

    // Per-element distance at which a subcarrier's phase contribution peaks
    struct FocalDistance
    {
        double distance_m = 0.0;

        /// False when the distance came out <= 0 and no physical point exists
        bool physical() const { return distance_m > 0.0; }
    };

    /// Euclidean distance from each element to point; throws CoincidentPointError on a zero distance
    std::vector<double> element_distances(const NearFieldGeometry &geom, const Point2 &point);

    /*!
    Near-field beam gain at frequency f_hz and location target:

        | sum_r exp(j [phi_r - (2 pi / lambda_c)(1 + f / f_c)(d_r^BR + d_r^RU') - 2 pi f tau_r]) |

    where d_r^RU' is the distance from element r to target. Result lies in [0, R].
    */
    double near_beam_gain(const NearFieldGeometry &geom, const WidebandConfig &cfg, double f_hz, const Point2 &target,
                          const PhaseProfile &phases);

    double near_beam_gain(const NearFieldGeometry &geom, const WidebandConfig &cfg, double f_hz, const Point2 &target,
                          const PhaseProfile &phases, const DelayProfile &delays);

    /// Focusing phases at the carrier: (4 pi / lambda_c)(d_r^BR + d_r^RU) mod 2 pi
    PhaseProfile near_optimal_phases(const NearFieldGeometry &geom, const WidebandConfig &cfg);

    /// 2 (d_r^BR + d_r^RU) / (1 + f / f_c) - d_r^BR for the element with 0-based index r0
    FocalDistance near_squint_distance(const NearFieldGeometry &geom, const WidebandConfig &cfg, double f_hz,
                                       std::size_t r0);

    /// Phases (2 pi / lambda_c)(d_r^BR + d_r^RU) and delays T - (d_r^BR + d_r^RU) / c with minimal T
    NearDamDesign near_dam_design(const NearFieldGeometry &geom, const WidebandConfig &cfg);
}

#endif
