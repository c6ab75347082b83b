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

#ifndef IRS_SQUINT_SCENARIO_HPP
#define IRS_SQUINT_SCENARIO_HPP

#include "irs_squint/core_model.hpp"
#include "irs_squint/scan.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace irs_squint
{
    enum class Regime
    {
        far,
        near
    };

    enum class DesignKind
    {
        phases_only,
        dam
    };

    enum class OutputFormat
    {
        csv,
        json
    };

    // Frequency picked out of the subcarrier grid: "f1", "fc", "fM" or a 1-based index m
    struct FrequencySelector
    {
        enum class Kind
        {
            first,
            carrier,
            last,
            index
        };
        Kind kind = Kind::carrier;
        std::size_t m = 0; // 1-based, only for Kind::index

        double resolve(const WidebandConfig &cfg) const;
        std::string label() const;
        bool operator==(const FrequencySelector &) const = default;
    };

    struct SweepSpec
    {
        std::string axis; // "nu", "subcarrier" or "location"
        std::optional<double> min;
        std::optional<double> max;
        std::optional<double> step;
        std::optional<double> half_width;
        std::vector<FrequencySelector> frequencies;
        bool operator==(const SweepSpec &) const = default;
    };

    // Repeats a subcarrier sweep over several bandwidths ("B") or element counts ("R")
    struct SeriesSpec
    {
        std::string parameter;
        std::vector<double> values;
        bool operator==(const SeriesSpec &) const = default;
    };

    struct NearLayout
    {
        Point2 bs;
        Point2 user;
        Point2 irs_origin;
        bool operator==(const NearLayout &) const = default;
    };

    struct Scenario
    {
        std::string name;
        Regime regime = Regime::far;
        double carrier_hz = 0.0;
        double bandwidth_hz = 0.0;
        std::size_t subcarriers = 128;
        std::size_t elements = 0;
        std::optional<double> spacing_m; // default lambda_c / 2

        // far regime
        std::optional<double> nu0;
        std::optional<double> chi;
        std::optional<double> psi;

        // near regime
        std::optional<NearLayout> near;

        DesignKind design = DesignKind::phases_only;
        std::optional<SweepSpec> sweep;
        std::optional<SeriesSpec> series;
        double threshold = 0.5;
        OutputFormat format = OutputFormat::csv;

        WidebandConfig config() const;
        IrsArray array() const;
        double direction() const; // far only
        NearFieldGeometry geometry() const; // near only

        bool operator==(const Scenario &) const = default;
    };

    /// Malformed or invalid scenario document; field() names the offending key
    class ScenarioError : public std::runtime_error
    {
    public:
        ScenarioError(std::string field, const std::string &message);
        const std::string &field() const { return field_; }

    private:
        std::string field_;
    };

    /// Parses and validates a scenario document (JSON text)
    Scenario parse_scenario(std::string_view text);

    /// Reads a scenario file; throws std::ios_base::failure when it cannot be read
    Scenario load_scenario(const std::filesystem::path &path);

    /// Canonical JSON text of s; parse_scenario(serialize_scenario(s)) == s
    std::string serialize_scenario(const Scenario &s);
}

#endif
