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

#include "irs_squint/scenario.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace irs_squint
{
    using nlohmann::json;

    ScenarioError::ScenarioError(std::string field, const std::string &message)
        : std::runtime_error(field.empty() ? message : "field '" + field + "': " + message), field_(std::move(field))
    {
    }

    // ------------------------------------------------------------------------
    double FrequencySelector::resolve(const WidebandConfig &cfg) const
    {
        switch (kind)
        {
        case Kind::first:
            return cfg.subcarrier_hz(0);
        case Kind::last:
            return cfg.subcarrier_hz(cfg.subcarriers() - 1);
        case Kind::index:
            if (m < 1 || m > cfg.subcarriers())
                throw std::out_of_range("Subcarrier index m = " + std::to_string(m) + " outside 1..M.");
            return cfg.subcarrier_hz(m - 1);
        case Kind::carrier:
        default:
            return cfg.carrier_hz();
        }
    }

    std::string FrequencySelector::label() const
    {
        switch (kind)
        {
        case Kind::first:
            return "f1";
        case Kind::last:
            return "fM";
        case Kind::index:
            return "m" + std::to_string(m);
        case Kind::carrier:
        default:
            return "fc";
        }
    }

    // ------------------------------------------------------------------------
    WidebandConfig Scenario::config() const
    {
        return WidebandConfig(carrier_hz, bandwidth_hz, subcarriers);
    }

    IrsArray Scenario::array() const
    {
        const auto cfg = config();
        return spacing_m ? IrsArray(elements, *spacing_m) : IrsArray::half_wavelength(elements, cfg);
    }

    double Scenario::direction() const
    {
        if (regime != Regime::far)
            throw std::logic_error("Scenario is not a far-field scenario.");
        if (chi && psi)
        {
            const auto t = FarFieldTarget::from_angles(*chi, *psi);
            if (nu0 && std::abs(*nu0 - t.nu()) > 1e-12)
                throw ScenarioError("nu0", "inconsistent with sin(chi) - sin(psi)");
            return t.nu();
        }
        return FarFieldTarget::from_direction(nu0.value()).nu();
    }

    NearFieldGeometry Scenario::geometry() const
    {
        if (regime != Regime::near || !near)
            throw std::logic_error("Scenario is not a near-field scenario.");
        return NearFieldGeometry(near->bs, near->user, near->irs_origin, array());
    }

    // ------------------------------------------------------------------------
    namespace
    {
        const std::set<std::string> known_keys = {"name", "regime", "f_c", "B", "M", "R", "d",
                                                  "nu0", "chi", "psi", "bs", "user", "irs_origin",
                                                  "design", "sweep", "series", "threshold", "format"};

        double number(const json &j, const std::string &field)
        {
            if (!j.is_number())
                throw ScenarioError(field, "expected a number");
            const double v = j.get<double>();
            if (!std::isfinite(v))
                throw ScenarioError(field, "must be finite");
            return v;
        }

        std::size_t count(const json &j, const std::string &field)
        {
            const double v = number(j, field);
            if (v < 1.0 || v != std::floor(v) || v > 1e9)
                throw ScenarioError(field, "expected a positive integer");
            return std::size_t(v);
        }

        Point2 point(const json &j, const std::string &field)
        {
            if (!j.is_array() || j.size() != 2)
                throw ScenarioError(field, "expected [x, y] in meters");
            return {number(j[0], field), number(j[1], field)};
        }

        std::string text(const json &j, const std::string &field)
        {
            if (!j.is_string())
                throw ScenarioError(field, "expected a string");
            return j.get<std::string>();
        }

        FrequencySelector selector(const json &j)
        {
            const std::string field = "sweep.frequencies";
            FrequencySelector s;
            if (j.is_string())
            {
                const auto v = j.get<std::string>();
                if (v == "f1")
                    s.kind = FrequencySelector::Kind::first;
                else if (v == "fc")
                    s.kind = FrequencySelector::Kind::carrier;
                else if (v == "fM")
                    s.kind = FrequencySelector::Kind::last;
                else
                    throw ScenarioError(field, "unknown selector '" + v + "' (use f1, fc, fM or an index)");
                return s;
            }
            s.kind = FrequencySelector::Kind::index;
            s.m = count(j, field);
            return s;
        }

        json selector_json(const FrequencySelector &s)
        {
            if (s.kind == FrequencySelector::Kind::index)
                return s.m;
            return s.label();
        }

        SweepSpec sweep_spec(const json &j)
        {
            if (!j.is_object())
                throw ScenarioError("sweep", "expected an object");
            SweepSpec s;
            for (const auto &[key, val] : j.items())
            {
                const std::string field = "sweep." + key;
                if (key == "axis")
                    s.axis = text(val, field);
                else if (key == "min")
                    s.min = number(val, field);
                else if (key == "max")
                    s.max = number(val, field);
                else if (key == "step")
                    s.step = number(val, field);
                else if (key == "half_width")
                    s.half_width = number(val, field);
                else if (key == "frequencies")
                {
                    if (!val.is_array())
                        throw ScenarioError(field, "expected an array");
                    for (const auto &f : val)
                        s.frequencies.push_back(selector(f));
                }
                else
                    throw ScenarioError(field, "unknown key");
            }
            if (s.axis != "nu" && s.axis != "subcarrier" && s.axis != "location")
                throw ScenarioError("sweep.axis", "must be one of nu, subcarrier, location");
            if (s.step && !(*s.step > 0.0))
                throw ScenarioError("sweep.step", "must be > 0");
            if (s.half_width && !(*s.half_width >= 0.0))
                throw ScenarioError("sweep.half_width", "must be >= 0");
            if (s.min && s.max && *s.max < *s.min)
                throw ScenarioError("sweep.max", "must be >= sweep.min");
            return s;
        }

        SeriesSpec series_spec(const json &j)
        {
            if (!j.is_object() || !j.contains("parameter") || !j.contains("values"))
                throw ScenarioError("series", "expected {\"parameter\": \"B\"|\"R\", \"values\": [...]}");
            SeriesSpec s;
            for (const auto &[key, val] : j.items())
                if (key != "parameter" && key != "values")
                    throw ScenarioError("series." + key, "unknown key");
            s.parameter = text(j["parameter"], "series.parameter");
            if (s.parameter != "B" && s.parameter != "R")
                throw ScenarioError("series.parameter", "must be B or R");
            if (!j["values"].is_array() || j["values"].empty())
                throw ScenarioError("series.values", "expected a non-empty array");
            for (const auto &v : j["values"])
                s.values.push_back(s.parameter == "R" ? double(count(v, "series.values"))
                                                      : number(v, "series.values"));
            return s;
        }

        std::string position(std::string_view text, std::size_t byte)
        {
            std::size_t line = 1, col = 1;
            for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i)
            {
                if (text[i] == '\n')
                {
                    ++line;
                    col = 1;
                }
                else
                    ++col;
            }
            return "line " + std::to_string(line) + ", column " + std::to_string(col);
        }

        // Constructs every derived type once so that its invariants are enforced at load time
        void validate(const Scenario &s)
        {
            try
            {
                (void)s.config();
            }
            catch (const std::invalid_argument &e)
            {
                throw ScenarioError("f_c/B/M", e.what());
            }
            try
            {
                (void)s.array();
            }
            catch (const std::invalid_argument &e)
            {
                throw ScenarioError("R/d", e.what());
            }
            if (s.regime == Regime::far)
            {
                try
                {
                    (void)s.direction();
                }
                catch (const ScenarioError &)
                {
                    throw;
                }
                catch (const std::invalid_argument &e)
                {
                    throw ScenarioError(s.nu0 ? "nu0" : "chi/psi", e.what());
                }
            }
            else
            {
                try
                {
                    (void)s.geometry();
                }
                catch (const std::invalid_argument &e)
                {
                    throw ScenarioError("bs/user/irs_origin", e.what());
                }
            }
            if (!(s.threshold > 0.0 && s.threshold < 1.0))
                throw ScenarioError("threshold", "must lie in (0, 1)");
            if (s.series)
                for (double v : s.series->values)
                {
                    auto t = s;
                    t.series.reset();
                    if (s.series->parameter == "B")
                        t.bandwidth_hz = v;
                    else
                        t.elements = std::size_t(v);
                    try
                    {
                        (void)t.config();
                        (void)t.array();
                        if (t.regime == Regime::near)
                            (void)t.geometry();
                    }
                    catch (const std::invalid_argument &e)
                    {
                        throw ScenarioError("series.values", e.what());
                    }
                }
            if (s.sweep)
                for (const auto &f : s.sweep->frequencies)
                    if (f.kind == FrequencySelector::Kind::index && f.m > s.subcarriers)
                        throw ScenarioError("sweep.frequencies", "subcarrier index exceeds M");
        }
    }

    Scenario parse_scenario(std::string_view text_in)
    {
        json j;
        try
        {
            j = json::parse(text_in.begin(), text_in.end());
        }
        catch (const json::parse_error &e)
        {
            throw ScenarioError("", "parse error at " + position(text_in, e.byte) + ": " + e.what());
        }
        if (!j.is_object())
            throw ScenarioError("", "scenario must be a JSON object");

        for (const auto &[key, val] : j.items())
            if (!known_keys.contains(key))
                throw ScenarioError(key, "unknown key");

        Scenario s;
        if (j.contains("name"))
            s.name = text(j["name"], "name");
        for (const char *required : {"f_c", "B", "R"})
            if (!j.contains(required))
                throw ScenarioError(required, "missing");
        s.carrier_hz = number(j["f_c"], "f_c");
        s.bandwidth_hz = number(j["B"], "B");
        s.elements = count(j["R"], "R");
        if (j.contains("M"))
            s.subcarriers = count(j["M"], "M");
        if (j.contains("d"))
            s.spacing_m = number(j["d"], "d");

        const bool has_far = j.contains("nu0") || j.contains("chi") || j.contains("psi");
        const bool has_near = j.contains("bs") || j.contains("user") || j.contains("irs_origin");
        if (has_far == has_near)
            throw ScenarioError("regime", "exactly one of the far (nu0 or chi/psi) and near (bs/user/irs_origin) "
                                          "geometry blocks must be present");
        s.regime = has_far ? Regime::far : Regime::near;
        if (j.contains("regime"))
        {
            const auto r = text(j["regime"], "regime");
            if (r != "far" && r != "near")
                throw ScenarioError("regime", "must be far or near");
            if ((r == "far") != has_far)
                throw ScenarioError("regime", "does not match the geometry block present");
        }

        if (has_far)
        {
            if (j.contains("nu0"))
                s.nu0 = number(j["nu0"], "nu0");
            if (j.contains("chi") != j.contains("psi"))
                throw ScenarioError(j.contains("chi") ? "psi" : "chi", "chi and psi must be given together");
            if (j.contains("chi"))
            {
                s.chi = number(j["chi"], "chi");
                s.psi = number(j["psi"], "psi");
            }
        }
        else
        {
            for (const char *key : {"bs", "user", "irs_origin"})
                if (!j.contains(key))
                    throw ScenarioError(key, "missing from near-field scenario");
            s.near = NearLayout{point(j["bs"], "bs"), point(j["user"], "user"), point(j["irs_origin"], "irs_origin")};
        }

        if (j.contains("design"))
        {
            const auto d = text(j["design"], "design");
            if (d == "phases_only")
                s.design = DesignKind::phases_only;
            else if (d == "dam")
                s.design = DesignKind::dam;
            else
                throw ScenarioError("design", "must be phases_only or dam");
        }
        if (j.contains("sweep"))
            s.sweep = sweep_spec(j["sweep"]);
        if (j.contains("series"))
            s.series = series_spec(j["series"]);
        if (j.contains("threshold"))
            s.threshold = number(j["threshold"], "threshold");
        if (j.contains("format"))
        {
            const auto f = text(j["format"], "format");
            if (f == "csv")
                s.format = OutputFormat::csv;
            else if (f == "json")
                s.format = OutputFormat::json;
            else
                throw ScenarioError("format", "must be csv or json");
        }

        validate(s);
        return s;
    }

    Scenario load_scenario(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::ios_base::failure("cannot open scenario file " + path.string());
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_scenario(buf.str());
    }

    std::string serialize_scenario(const Scenario &s)
    {
        json j;
        if (!s.name.empty())
            j["name"] = s.name;
        j["regime"] = s.regime == Regime::far ? "far" : "near";
        j["f_c"] = s.carrier_hz;
        j["B"] = s.bandwidth_hz;
        j["M"] = s.subcarriers;
        j["R"] = s.elements;
        if (s.spacing_m)
            j["d"] = *s.spacing_m;
        if (s.nu0)
            j["nu0"] = *s.nu0;
        if (s.chi)
            j["chi"] = *s.chi;
        if (s.psi)
            j["psi"] = *s.psi;
        if (s.near)
        {
            j["bs"] = {s.near->bs.x, s.near->bs.y};
            j["user"] = {s.near->user.x, s.near->user.y};
            j["irs_origin"] = {s.near->irs_origin.x, s.near->irs_origin.y};
        }
        j["design"] = s.design == DesignKind::dam ? "dam" : "phases_only";
        if (s.sweep)
        {
            json w;
            w["axis"] = s.sweep->axis;
            if (s.sweep->min)
                w["min"] = *s.sweep->min;
            if (s.sweep->max)
                w["max"] = *s.sweep->max;
            if (s.sweep->step)
                w["step"] = *s.sweep->step;
            if (s.sweep->half_width)
                w["half_width"] = *s.sweep->half_width;
            if (!s.sweep->frequencies.empty())
            {
                w["frequencies"] = json::array();
                for (const auto &f : s.sweep->frequencies)
                    w["frequencies"].push_back(selector_json(f));
            }
            j["sweep"] = w;
        }
        if (s.series)
            j["series"] = {{"parameter", s.series->parameter}, {"values", s.series->values}};
        j["threshold"] = s.threshold;
        j["format"] = s.format == OutputFormat::json ? "json" : "csv";
        return j.dump(2);
    }
}
