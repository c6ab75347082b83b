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

#include "irs_squint/scan.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace irs_squint
{
    std::vector<double> NuGrid::points() const
    {
        if (!std::isfinite(step) || step <= 0.0)
            throw std::invalid_argument("Direction grid step must be > 0.");
        check_direction(min, "grid minimum");
        check_direction(max, "grid maximum");
        if (max < min)
            throw std::invalid_argument("Direction grid is empty (max < min).");

        const auto n = std::size_t(std::floor((max - min) / step * (1.0 + 1e-12))) + 1;
        std::vector<double> nu(n);
        for (std::size_t i = 0; i < n; ++i)
            nu[i] = min + double(i) * step;
        return nu;
    }

    // ------------------------------------------------------------------------
    std::size_t LocationGrid::points_per_axis() const
    {
        if (!std::isfinite(step_m) || step_m <= 0.0)
            throw std::invalid_argument("Location grid step must be > 0.");
        if (!std::isfinite(half_width_m) || half_width_m < 0.0)
            throw std::invalid_argument("Location grid half width must be >= 0.");
        return 2 * std::size_t(std::llround(half_width_m / step_m)) + 1;
    }

    static std::vector<double> centred_axis(double centre, std::size_t n, double step)
    {
        const double half = double(n / 2);
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = centre + (double(i) - half) * step;
        return v;
    }

    std::vector<double> LocationGrid::x_values() const { return centred_axis(center.x, points_per_axis(), step_m); }
    std::vector<double> LocationGrid::y_values() const { return centred_axis(center.y, points_per_axis(), step_m); }

    std::optional<std::pair<std::size_t, std::size_t>> LocationGrid::cell_of(const Point2 &p) const
    {
        const auto n = (long long)points_per_axis();
        const long long i = std::llround((p.x - center.x) / step_m) + n / 2;
        const long long j = std::llround((p.y - center.y) / step_m) + n / 2;
        if (i < 0 || j < 0 || i >= n || j >= n)
            return std::nullopt;
        return std::make_pair(std::size_t(i), std::size_t(j));
    }

    // ------------------------------------------------------------------------
    BeamDesign far_design(const IrsArray &array, const WidebandConfig &cfg, double nu0, bool use_dam)
    {
        if (!use_dam)
            return {far_optimal_phases(array, cfg, nu0), std::nullopt};
        auto dam = far_dam_design(array, cfg, nu0);
        return {std::move(dam.phases), std::move(dam.delays)};
    }

    BeamDesign near_design(const NearFieldGeometry &geom, const WidebandConfig &cfg, bool use_dam)
    {
        if (!use_dam)
            return {near_optimal_phases(geom, cfg), std::nullopt};
        auto dam = near_dam_design(geom, cfg);
        return {std::move(dam.phases), std::move(dam.delays)};
    }

    static double far_gain(const IrsArray &array, const WidebandConfig &cfg, double f_hz, double nu,
                           const BeamDesign &design)
    {
        return design.delays ? far_beam_gain(array, cfg, f_hz, nu, design.phases, *design.delays)
                             : far_beam_gain(array, cfg, f_hz, nu, design.phases);
    }

    static double near_gain(const NearFieldGeometry &geom, const WidebandConfig &cfg, double f_hz,
                            const Point2 &target, const BeamDesign &design)
    {
        return design.delays ? near_beam_gain(geom, cfg, f_hz, target, design.phases, *design.delays)
                             : near_beam_gain(geom, cfg, f_hz, target, design.phases);
    }

    static GainAxis subcarrier_axis(const WidebandConfig &cfg)
    {
        GainAxis ax{"m", "", std::vector<double>(cfg.subcarriers())};
        std::iota(ax.values.begin(), ax.values.end(), 1.0);
        return ax;
    }

    // ------------------------------------------------------------------------
    GainMap angle_sweep(const IrsArray &array, const WidebandConfig &cfg, const BeamDesign &design,
                        std::span<const double> frequencies_hz, const NuGrid &grid)
    {
        if (frequencies_hz.empty())
            throw std::invalid_argument("Angle sweep needs at least one frequency.");

        GainMap map;
        map.axes.push_back({"f_hz", "Hz", {frequencies_hz.begin(), frequencies_hz.end()}});
        map.axes.push_back({"nu", "", grid.points()});

        const double norm = double(array.elements);
        const auto &nu = map.axes[1].values;
        map.values.reserve(frequencies_hz.size() * nu.size());
        for (double f : frequencies_hz)
            for (double v : nu)
                map.values.push_back(far_gain(array, cfg, f, v, design) / norm);
        return map;
    }

    std::size_t argmax_within(std::span<const double> nu, std::span<const double> values, double nu_center,
                              double half_width)
    {
        if (nu.size() != values.size())
            throw std::invalid_argument("argmax_within: grid and values differ in length.");
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < nu.size(); ++i)
            if (std::abs(nu[i] - nu_center) < half_width && (!best || values[i] > values[*best]))
                best = i;
        if (!best)
            throw std::invalid_argument("argmax_within: no grid point inside the window.");
        return *best;
    }

    GainMap subcarrier_sweep_far(const IrsArray &array, const WidebandConfig &cfg, double nu0, bool use_dam)
    {
        const auto design = far_design(array, cfg, nu0, use_dam);
        GainMap map;
        map.axes.push_back(subcarrier_axis(cfg));
        for (double f : subcarrier_frequencies(cfg))
            map.values.push_back(far_gain(array, cfg, f, nu0, design) / double(array.elements));
        return map;
    }

    GainMap subcarrier_sweep_near(const NearFieldGeometry &geom, const WidebandConfig &cfg, bool use_dam)
    {
        const auto design = near_design(geom, cfg, use_dam);
        GainMap map;
        map.axes.push_back(subcarrier_axis(cfg));
        for (double f : subcarrier_frequencies(cfg))
            map.values.push_back(near_gain(geom, cfg, f, geom.user(), design) / double(geom.array().elements));
        return map;
    }

    // ------------------------------------------------------------------------
    void for_each_heatmap_row(const NearFieldGeometry &geom, const WidebandConfig &cfg, double f_hz,
                              const BeamDesign &design, const LocationGrid &grid, const HeatmapRowSink &sink)
    {
        const std::size_t R = geom.array().elements;
        if (design.phases.size() != R || (design.delays && design.delays->size() != R))
            throw std::invalid_argument("Design profile length does not match R.");
        if (!std::isfinite(f_hz) || f_hz <= 0.0)
            throw std::invalid_argument("Frequency must be finite and > 0.");

        const double k = two_pi / cfg.wavelength_m() * (1.0 + f_hz / cfg.carrier_hz());

        // Target-independent part of each element's exponent
        std::vector<double> bias(R);
        std::vector<Point2> elem(R);
        for (std::size_t r0 = 0; r0 < R; ++r0)
        {
            bias[r0] = design.phases[r0] - k * geom.bs_distances()[r0];
            if (design.delays)
                bias[r0] -= two_pi * f_hz * (*design.delays)[r0];
            elem[r0] = geom.element_position(r0);
        }

        const auto xs = grid.x_values();
        const auto ys = grid.y_values();
        std::vector<double> row(ys.size());
        for (std::size_t i = 0; i < xs.size(); ++i)
        {
            for (std::size_t j = 0; j < ys.size(); ++j)
            {
                cplx acc(0.0, 0.0);
                for (std::size_t r0 = 0; r0 < R; ++r0)
                {
                    const double dist = std::hypot(xs[i] - elem[r0].x, ys[j] - elem[r0].y);
                    if (!(dist > 0.0))
                        throw CoincidentPointError("Location grid point coincides with an IRS element.");
                    acc += std::polar(1.0, bias[r0] - k * dist);
                }
                row[j] = std::abs(acc) / double(R);
            }
            sink(i, xs[i], row);
        }
    }

    Heatmap location_heatmap(const NearFieldGeometry &geom, const WidebandConfig &cfg, double f_hz, bool use_dam,
                             const LocationGrid &grid)
    {
        const auto design = near_design(geom, cfg, use_dam);

        Heatmap out;
        out.map.axes.push_back({"x", "m", grid.x_values()});
        out.map.axes.push_back({"y", "m", grid.y_values()});
        out.map.values.reserve(out.map.axes[0].values.size() * out.map.axes[1].values.size());

        for_each_heatmap_row(geom, cfg, f_hz, design, grid, [&](std::size_t, double, std::span<const double> row)
                             { out.map.values.insert(out.map.values.end(), row.begin(), row.end()); });

        const std::size_t best = out.map.argmax();
        out.argmax_row = best / out.map.cols();
        out.argmax_col = best % out.map.cols();
        out.argmax_point = {out.map.axes[0].values[out.argmax_row], out.map.axes[1].values[out.argmax_col]};
        return out;
    }

    // ------------------------------------------------------------------------
    SquintMetrics squint_metrics(const GainMap &map, double threshold)
    {
        if (!map.normalized)
            throw std::invalid_argument("Squint metrics require a normalized GainMap.");
        if (!(threshold > 0.0 && threshold < 1.0))
            throw std::invalid_argument("Threshold must lie in (0, 1).");
        map.validate();

        SquintMetrics m;
        std::size_t above = 0;
        double sum = 0.0;
        m.min_gain = map.values.front();
        for (double v : map.values)
        {
            above += v >= threshold;
            sum += v;
            m.min_gain = std::min(m.min_gain, v);
        }
        m.fraction_above = double(above) / double(map.values.size());
        m.mean_gain = sum / double(map.values.size());
        return m;
    }
}
