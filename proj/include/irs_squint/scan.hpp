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

#ifndef IRS_SQUINT_SCAN_HPP
#define IRS_SQUINT_SCAN_HPP

#include "irs_squint/core_model.hpp"
#include "irs_squint/farfield.hpp"
#include "irs_squint/nearfield.hpp"

#include <functional>
#include <optional>

namespace irs_squint
{
    // Uniform grid of normalized directions, both ends included
    struct NuGrid
    {
        double min = -1.0;
        double max = 1.0;
        double step = 1e-3;

        std::vector<double> points() const;
    };

    // Square grid of (2 n + 1) x (2 n + 1) locations centred on a point, n = round(half_width / step)
    struct LocationGrid
    {
        Point2 center;
        double half_width_m = 0.5;
        double step_m = 0.005;

        std::size_t points_per_axis() const;
        std::vector<double> x_values() const;
        std::vector<double> y_values() const;

        /// Row/column of the cell nearest to p, or nullopt when p lies outside the grid
        std::optional<std::pair<std::size_t, std::size_t>> cell_of(const Point2 &p) const;
    };

    // Phases plus optional DAM delays
    struct BeamDesign
    {
        PhaseProfile phases;
        std::optional<DelayProfile> delays;
    };

    BeamDesign far_design(const IrsArray &array, const WidebandConfig &cfg, double nu0, bool use_dam);
    BeamDesign near_design(const NearFieldGeometry &geom, const WidebandConfig &cfg, bool use_dam);

    /// Normalized far-field gain over (frequency x nu); one row per entry of frequencies_hz
    GainMap angle_sweep(const IrsArray &array, const WidebandConfig &cfg, const BeamDesign &design,
                        std::span<const double> frequencies_hz, const NuGrid &grid);

    /// Normalized far-field gain at nu0 over all M subcarriers (axis "m", 1-based)
    GainMap subcarrier_sweep_far(const IrsArray &array, const WidebandConfig &cfg, double nu0, bool use_dam);

    /// Normalized near-field gain at the user over all M subcarriers (axis "m", 1-based)
    GainMap subcarrier_sweep_near(const NearFieldGeometry &geom, const WidebandConfig &cfg, bool use_dam);

    /*!
    Index of the first maximum of values among the points of nu inside the open window
    (nu_center - half_width, nu_center + half_width). Used to pick the lobe that belongs to
    nu_center when grating lobes of equal height share the grid.
    Throws std::invalid_argument when no grid point falls inside the window.
    */
    std::size_t argmax_within(std::span<const double> nu, std::span<const double> values, double nu_center,
                              double half_width);

    struct Heatmap
    {
        GainMap map; // axes x (rows), y (columns)
        std::size_t argmax_row = 0;
        std::size_t argmax_col = 0;
        Point2 argmax_point;
    };

    /// Row visitor: x index, x value and the normalized gains along y
    using HeatmapRowSink = std::function<void(std::size_t, double, std::span<const double>)>;

    /// Evaluates the heatmap one x-row at a time without materializing the full map
    void for_each_heatmap_row(const NearFieldGeometry &geom, const WidebandConfig &cfg, double f_hz,
                              const BeamDesign &design, const LocationGrid &grid, const HeatmapRowSink &sink);

    /// Normalized near-field gain over a 2-D grid at frequency f_hz; ties in the argmax go to the lowest row-major index
    Heatmap location_heatmap(const NearFieldGeometry &geom, const WidebandConfig &cfg, double f_hz, bool use_dam,
                             const LocationGrid &grid);

    struct SquintMetrics
    {
        double fraction_above = 0.0; // share of points with value >= threshold
        double min_gain = 0.0;
        double mean_gain = 0.0;
    };

    SquintMetrics squint_metrics(const GainMap &map, double threshold);
}

#endif
