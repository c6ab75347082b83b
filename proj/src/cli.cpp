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

#include "irs_squint/cli.hpp"

#include "irs_squint/farfield.hpp"
#include "irs_squint/nearfield.hpp"
#include "irs_squint/scan.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace irs_squint
{
    using nlohmann::json;

    double fraunhofer_distance(double aperture_m, const WidebandConfig &cfg)
    {
        if (!std::isfinite(aperture_m) || aperture_m <= 0.0)
            throw std::invalid_argument("Aperture D must be finite and > 0.");
        return 2.0 * aperture_m * aperture_m / cfg.wavelength_m();
    }

    namespace
    {
        // Thrown for scenario/subcommand mismatches; mapped to exit_usage
        struct UsageError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        // Thrown when the artifact cannot be written; mapped to exit_io
        struct OutputError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        // N-dimensional result grid, values row-major over axes
        struct GridResult
        {
            std::vector<GainAxis> axes;
            std::vector<double> values;
            json meta = json::object();
        };

        void set_precision(std::ostream &os) { os << std::setprecision(17); }

        void write_csv(const GridResult &g, std::ostream &os)
        {
            set_precision(os);
            for (const auto &ax : g.axes)
                os << ax.name << ',';
            os << "value\n";

            std::vector<std::size_t> idx(g.axes.size(), 0);
            for (double v : g.values)
            {
                for (std::size_t a = 0; a < g.axes.size(); ++a)
                    os << g.axes[a].values[idx[a]] << ',';
                os << v << '\n';
                for (std::size_t a = g.axes.size(); a-- > 0;)
                {
                    if (++idx[a] < g.axes[a].values.size())
                        break;
                    idx[a] = 0;
                }
            }
        }

        json nested(const GridResult &g, std::size_t axis, std::size_t &pos)
        {
            json out = json::array();
            for (std::size_t i = 0; i < g.axes[axis].values.size(); ++i)
            {
                if (axis + 1 == g.axes.size())
                    out.push_back(g.values[pos++]);
                else
                    out.push_back(nested(g, axis + 1, pos));
            }
            return out;
        }

        json to_json(const GridResult &g)
        {
            json axes = json::array();
            for (const auto &ax : g.axes)
                axes.push_back({{"name", ax.name}, {"unit", ax.unit}, {"values", ax.values}});
            std::size_t pos = 0;
            return {{"axes", axes}, {"values", nested(g, 0, pos)}, {"meta", g.meta}};
        }

        std::ofstream open_output(const std::filesystem::path &path)
        {
            std::ofstream os(path, std::ios::out | std::ios::trunc);
            if (!os)
                throw OutputError("cannot open output file " + path.string());
            return os;
        }

        void finish(std::ofstream &os, const std::filesystem::path &path)
        {
            os.flush();
            if (!os)
                throw OutputError("failed writing output file " + path.string());
        }

        void emit(const GridResult &g, OutputFormat fmt, const std::filesystem::path &path)
        {
            auto os = open_output(path);
            if (fmt == OutputFormat::csv)
                write_csv(g, os);
            else
                os << to_json(g).dump(2) << '\n';
            finish(os, path);
        }

        void emit_json(const json &j, const std::filesystem::path &path)
        {
            auto os = open_output(path);
            os << j.dump(2) << '\n';
            finish(os, path);
        }

        // Flat table with a header row; used for design, metrics and fraunhofer CSV output
        void emit_table(const std::vector<std::string> &header, const std::vector<std::vector<double>> &rows,
                        const std::filesystem::path &path)
        {
            auto os = open_output(path);
            set_precision(os);
            for (std::size_t i = 0; i < header.size(); ++i)
                os << header[i] << (i + 1 < header.size() ? ',' : '\n');
            for (const auto &r : rows)
                for (std::size_t i = 0; i < r.size(); ++i)
                    os << r[i] << (i + 1 < r.size() ? ',' : '\n');
            finish(os, path);
        }

        void require_regime(const Scenario &s, Regime r, std::string_view cmd)
        {
            if (s.regime != r)
                throw UsageError(std::string(cmd) + " requires a " + (r == Regime::far ? "far" : "near") +
                                 "-field scenario");
        }

        const char *design_name(const Scenario &s) { return s.design == DesignKind::dam ? "dam" : "phases_only"; }

        json base_meta(const Scenario &s, std::string_view cmd)
        {
            json m = {{"subcommand", cmd},
                      {"regime", s.regime == Regime::far ? "far" : "near"},
                      {"design", design_name(s)},
                      {"f_c", s.carrier_hz},
                      {"B", s.bandwidth_hz},
                      {"M", s.subcarriers},
                      {"R", s.elements},
                      {"normalized", true}};
            if (!s.name.empty())
                m["name"] = s.name;
            return m;
        }

        // Scenario variants for the optional series block (one entry without a series)
        std::vector<Scenario> series_variants(const Scenario &s)
        {
            if (!s.series)
                return {s};
            std::vector<Scenario> out;
            for (double v : s.series->values)
            {
                Scenario t = s;
                t.series.reset();
                if (s.series->parameter == "B")
                    t.bandwidth_hz = v;
                else
                    t.elements = std::size_t(v);
                out.push_back(std::move(t));
            }
            return out;
        }

        GainMap subcarrier_map(const Scenario &s)
        {
            const bool dam = s.design == DesignKind::dam;
            if (s.regime == Regime::far)
                return subcarrier_sweep_far(s.array(), s.config(), s.direction(), dam);
            return subcarrier_sweep_near(s.geometry(), s.config(), dam);
        }

        double threshold_of(const Scenario &s, const RunOptions &o) { return o.threshold.value_or(s.threshold); }

        std::vector<FrequencySelector> frequencies_of(const Scenario &s, std::vector<FrequencySelector> fallback)
        {
            if (s.sweep && !s.sweep->frequencies.empty())
                return s.sweep->frequencies;
            return fallback;
        }

        // --------------------------------------------------------------------
        void cmd_design(const Scenario &s, OutputFormat fmt, const std::filesystem::path &out, std::ostream &log)
        {
            const auto cfg = s.config();
            std::vector<double> phases, delays;
            json meta = base_meta(s, "design");

            if (s.regime == Regime::far)
            {
                const auto array = s.array();
                const double nu0 = s.direction();
                meta["nu0"] = nu0;
                if (s.design == DesignKind::dam)
                {
                    const auto d = far_dam_design(array, cfg, nu0);
                    phases.assign(d.phases.values().begin(), d.phases.values().end());
                    delays.assign(d.delays.values().begin(), d.delays.values().end());
                }
                else
                {
                    const auto p = far_optimal_phases(array, cfg, nu0);
                    phases.assign(p.values().begin(), p.values().end());
                    delays.assign(array.elements, 0.0);
                }
            }
            else
            {
                const auto geom = s.geometry();
                meta["focus"] = {geom.user().x, geom.user().y};
                if (s.design == DesignKind::dam)
                {
                    const auto d = near_dam_design(geom, cfg);
                    phases.assign(d.phases.values().begin(), d.phases.values().end());
                    delays.assign(d.delays.values().begin(), d.delays.values().end());
                    meta["common_delay_s"] = d.common_delay_s;
                }
                else
                {
                    const auto p = near_optimal_phases(geom, cfg);
                    phases.assign(p.values().begin(), p.values().end());
                    delays.assign(geom.array().elements, 0.0);
                }
            }

            if (fmt == OutputFormat::json)
                emit_json({{"phases", phases}, {"delays", delays}, {"meta", meta}}, out);
            else
            {
                std::vector<std::vector<double>> rows;
                for (std::size_t i = 0; i < phases.size(); ++i)
                    rows.push_back({double(i + 1), phases[i], delays[i]});
                emit_table({"r", "phase_rad", "delay_s"}, rows, out);
            }
            log << "design: " << phases.size() << " elements, max delay "
                << *std::max_element(delays.begin(), delays.end()) << " s\n";
        }

        void cmd_far_angle_sweep(const Scenario &s, OutputFormat fmt, const RunOptions &o,
                                 const std::filesystem::path &out, std::ostream &log)
        {
            require_regime(s, Regime::far, "far-angle-sweep");
            if (s.sweep && s.sweep->axis != "nu")
                throw UsageError("far-angle-sweep needs a sweep with axis \"nu\"");

            const auto cfg = s.config();
            const auto array = s.array();
            const double nu0 = s.direction();

            NuGrid grid;
            if (s.sweep)
            {
                grid.min = s.sweep->min.value_or(grid.min);
                grid.max = s.sweep->max.value_or(grid.max);
                grid.step = s.sweep->step.value_or(grid.step);
            }
            if (o.grid_step)
                grid.step = *o.grid_step;

            using K = FrequencySelector::Kind;
            const auto sel = frequencies_of(s, {{K::first}, {K::carrier}, {K::last}});
            std::vector<double> freqs;
            for (const auto &f : sel)
                freqs.push_back(f.resolve(cfg));

            const auto design = far_design(array, cfg, nu0, s.design == DesignKind::dam);
            const auto map = angle_sweep(array, cfg, design, freqs, grid);

            GridResult g{map.axes, map.values, base_meta(s, "far-angle-sweep")};
            g.meta["nu0"] = nu0;
            json peaks = json::array();
            for (std::size_t i = 0; i < freqs.size(); ++i)
            {
                const auto row = map.row(i);
                const std::size_t k = argmax_first(row);
                const double predicted = s.design == DesignKind::dam ? nu0 : far_squint_direction(nu0, freqs[i], cfg.carrier_hz());
                // grating lobes can tie with the main lobe; report the one belonging to nu0 separately
                json main_lobe = nullptr;
                try
                {
                    const double half = 0.5 * far_grating_period(array, cfg, freqs[i]);
                    main_lobe = map.axes[1].values[argmax_within(map.axes[1].values, row, nu0, half)];
                }
                catch (const std::invalid_argument &)
                {
                }
                peaks.push_back({{"frequency", sel[i].label()},
                                 {"f_hz", freqs[i]},
                                 {"argmax_nu", map.axes[1].values[k]},
                                 {"main_lobe_nu", main_lobe},
                                 {"peak_gain", row[k]},
                                 {"predicted_nu", predicted}});
                log << sel[i].label() << ": peak " << row[k] << " at nu = " << map.axes[1].values[k];
                if (!main_lobe.is_null())
                    log << ", lobe of nu0 peaks at " << main_lobe.get<double>();
                log << " (predicted " << predicted << ")\n";
            }
            g.meta["peaks"] = peaks;
            emit(g, fmt, out);
        }

        void cmd_subcarrier_sweep(const Scenario &s, Regime regime, std::string_view cmd, OutputFormat fmt,
                                  const RunOptions &o, const std::filesystem::path &out, std::ostream &log)
        {
            require_regime(s, regime, cmd);
            const double threshold = threshold_of(s, o);

            GridResult g;
            g.meta = base_meta(s, cmd);
            g.meta["threshold"] = threshold;
            json metrics = json::array();

            const auto variants = series_variants(s);
            if (s.series)
                g.axes.push_back({s.series->parameter, s.series->parameter == "B" ? "Hz" : "", s.series->values});

            for (const auto &v : variants)
            {
                const auto map = subcarrier_map(v);
                if (g.axes.size() < (s.series ? 2u : 1u))
                    g.axes.push_back(map.axes[0]);
                else if (g.axes.back().values.size() != map.values.size())
                    throw UsageError("series variants disagree on the subcarrier count");
                g.values.insert(g.values.end(), map.values.begin(), map.values.end());

                const auto m = squint_metrics(map, threshold);
                json entry = {{"fraction_above", m.fraction_above}, {"min_gain", m.min_gain}, {"mean_gain", m.mean_gain}};
                if (s.series)
                    entry[s.series->parameter] = s.series->parameter == "B" ? v.bandwidth_hz : double(v.elements);
                metrics.push_back(entry);
                if (s.series)
                    log << s.series->parameter << " = " << entry[s.series->parameter].get<double>() << ": ";
                log << "fraction >= " << threshold << ": " << m.fraction_above << ", min " << m.min_gain << ", mean "
                    << m.mean_gain << '\n';
            }
            g.meta["metrics"] = metrics;
            emit(g, fmt, out);
        }

        void cmd_near_heatmap(const Scenario &s, OutputFormat fmt, const RunOptions &o,
                              const std::filesystem::path &out, std::ostream &log)
        {
            require_regime(s, Regime::near, "near-heatmap");
            if (s.sweep && s.sweep->axis != "location")
                throw UsageError("near-heatmap needs a sweep with axis \"location\"");

            const auto cfg = s.config();
            const auto geom = s.geometry();

            LocationGrid grid{geom.user()};
            if (s.sweep)
            {
                grid.half_width_m = s.sweep->half_width.value_or(grid.half_width_m);
                grid.step_m = s.sweep->step.value_or(grid.step_m);
            }
            if (o.grid_step)
                grid.step_m = *o.grid_step;

            const auto sel = frequencies_of(s, {{FrequencySelector::Kind::carrier}});
            const auto design = near_design(geom, cfg, s.design == DesignKind::dam);
            const auto user_cell = grid.cell_of(geom.user());
            const auto xs = grid.x_values();
            const auto ys = grid.y_values();

            GridResult g;
            g.meta = base_meta(s, "near-heatmap");
            g.meta["user"] = {geom.user().x, geom.user().y};
            json peaks = json::array();

            auto os = open_output(out);
            if (fmt == OutputFormat::csv)
            {
                set_precision(os);
                os << "f_hz,x,y,value\n";
            }

            for (const auto &f : sel)
            {
                const double f_hz = f.resolve(cfg);
                double best = -1.0;
                std::size_t bi = 0, bj = 0;
                for_each_heatmap_row(geom, cfg, f_hz, design, grid,
                                     [&](std::size_t i, double x, std::span<const double> row)
                                     {
                                         const std::size_t j = argmax_first(row);
                                         if (row[j] > best)
                                         {
                                             best = row[j];
                                             bi = i;
                                             bj = j;
                                         }
                                         if (fmt == OutputFormat::csv)
                                             for (std::size_t k = 0; k < row.size(); ++k)
                                                 os << f_hz << ',' << x << ',' << ys[k] << ',' << row[k] << '\n';
                                         else
                                             g.values.insert(g.values.end(), row.begin(), row.end());
                                     });
                const bool at_user = user_cell && user_cell->first == bi && user_cell->second == bj;
                peaks.push_back({{"frequency", f.label()},
                                 {"f_hz", f_hz},
                                 {"argmax", {xs[bi], ys[bj]}},
                                 {"peak_gain", best},
                                 {"at_user_cell", at_user}});
                log << f.label() << ": peak " << best << " at (" << xs[bi] << ", " << ys[bj] << ")"
                    << (at_user ? " = user cell\n" : " != user cell\n");
            }

            if (fmt == OutputFormat::json)
            {
                std::vector<double> fs;
                for (const auto &f : sel)
                    fs.push_back(f.resolve(cfg));
                g.axes = {{"f_hz", "Hz", fs}, {"x", "m", xs}, {"y", "m", ys}};
                g.meta["peaks"] = peaks;
                os << to_json(g).dump(2) << '\n';
            }
            finish(os, out);
        }

        void cmd_metrics(const Scenario &s, OutputFormat fmt, const RunOptions &o, const std::filesystem::path &out,
                         std::ostream &log)
        {
            const double threshold = threshold_of(s, o);
            std::vector<std::vector<double>> rows;
            json list = json::array();
            for (const auto &v : series_variants(s))
            {
                const auto m = squint_metrics(subcarrier_map(v), threshold);
                std::vector<double> row;
                json entry = {{"fraction_above", m.fraction_above}, {"min_gain", m.min_gain}, {"mean_gain", m.mean_gain}};
                if (s.series)
                {
                    const double p = s.series->parameter == "B" ? v.bandwidth_hz : double(v.elements);
                    row.push_back(p);
                    entry[s.series->parameter] = p;
                }
                row.insert(row.end(), {m.fraction_above, m.min_gain, m.mean_gain});
                rows.push_back(row);
                list.push_back(entry);
                log << "fraction >= " << threshold << ": " << m.fraction_above << ", min " << m.min_gain << ", mean "
                    << m.mean_gain << '\n';
            }

            if (fmt == OutputFormat::json)
            {
                json meta = base_meta(s, "metrics");
                meta["threshold"] = threshold;
                emit_json({{"metrics", list}, {"meta", meta}}, out);
            }
            else
            {
                std::vector<std::string> header;
                if (s.series)
                    header.push_back(s.series->parameter);
                header.insert(header.end(), {"fraction_above", "min_gain", "mean_gain"});
                emit_table(header, rows, out);
            }
        }

        void cmd_fraunhofer(const Scenario &s, OutputFormat fmt, const std::filesystem::path &out, std::ostream &log)
        {
            const auto cfg = s.config();
            const auto array = s.array();
            const double aperture = array.aperture_m();
            if (!(aperture > 0.0))
                throw UsageError("fraunhofer needs an aperture D = (R - 1) d > 0 (R >= 2)");
            const double boundary = fraunhofer_distance(aperture, cfg);

            json j = {{"aperture_m", aperture}, {"wavelength_m", cfg.wavelength_m()}, {"fraunhofer_distance_m", boundary}};
            std::vector<std::string> header = {"aperture_m", "wavelength_m", "fraunhofer_distance_m"};
            std::vector<double> row = {aperture, cfg.wavelength_m(), boundary};
            if (s.regime == Regime::near)
            {
                const auto geom = s.geometry();
                const Point2 centre = {geom.irs_origin().x + 0.5 * aperture, geom.irs_origin().y};
                const double user_range = distance(centre, geom.user());
                j["user_range_m"] = user_range;
                j["user_in_near_field"] = user_range < boundary;
                header.push_back("user_range_m");
                row.push_back(user_range);
            }
            log << "Fraunhofer distance: " << boundary << " m (D = " << aperture << " m)\n";

            if (fmt == OutputFormat::json)
                emit_json(j, out);
            else
                emit_table(header, {row}, out);
        }
    }

    int run(std::string_view subcommand, const Scenario &scenario, const std::filesystem::path &out_path,
            const RunOptions &options, std::ostream &log, std::ostream &err)
    {
        const OutputFormat fmt = options.format.value_or(scenario.format);
        try
        {
            if (options.threshold && !(*options.threshold > 0.0 && *options.threshold < 1.0))
                throw UsageError("--threshold must lie in (0, 1)");
            if (options.grid_step && !(*options.grid_step > 0.0))
                throw UsageError("--grid-step must be > 0");

            if (subcommand == "design")
                cmd_design(scenario, fmt, out_path, log);
            else if (subcommand == "far-angle-sweep")
                cmd_far_angle_sweep(scenario, fmt, options, out_path, log);
            else if (subcommand == "far-subcarrier-sweep")
                cmd_subcarrier_sweep(scenario, Regime::far, subcommand, fmt, options, out_path, log);
            else if (subcommand == "near-subcarrier-sweep")
                cmd_subcarrier_sweep(scenario, Regime::near, subcommand, fmt, options, out_path, log);
            else if (subcommand == "near-heatmap")
                cmd_near_heatmap(scenario, fmt, options, out_path, log);
            else if (subcommand == "metrics")
                cmd_metrics(scenario, fmt, options, out_path, log);
            else if (subcommand == "fraunhofer")
                cmd_fraunhofer(scenario, fmt, out_path, log);
            else
                throw UsageError("unknown subcommand '" + std::string(subcommand) + "'");
        }
        catch (const OutputError &e)
        {
            err << "error: " << e.what() << '\n';
            return exit_io;
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        return exit_ok;
    }
}
