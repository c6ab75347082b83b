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

#ifndef IRS_SQUINT_CLI_HPP
#define IRS_SQUINT_CLI_HPP

#include "irs_squint/scenario.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>

namespace irs_squint
{
    /// Fraunhofer distance 2 D^2 / lambda_c for an aperture of D meters
    double fraunhofer_distance(double aperture_m, const WidebandConfig &cfg);

    enum ExitCode : int
    {
        exit_ok = 0,
        exit_usage = 2, // incompatible or invalid scenario / subcommand
        exit_io = 3
    };

    struct RunOptions
    {
        std::optional<OutputFormat> format; // overrides the scenario's format
        std::optional<double> threshold;
        std::optional<double> grid_step;
    };

    /// Subcommands understood by run()
    inline constexpr std::string_view subcommands[] = {
        "design", "far-angle-sweep", "far-subcarrier-sweep", "near-subcarrier-sweep", "near-heatmap", "metrics",
        "fraunhofer"};

    /*!
    Executes one subcommand on a scenario and writes the artifact to out_path.

    Human-readable summaries go to log, errors to err. Returns exit_ok, exit_usage when the
    scenario does not fit the subcommand, or exit_io when the output cannot be written.
    */
    int run(std::string_view subcommand, const Scenario &scenario, const std::filesystem::path &out_path,
            const RunOptions &options, std::ostream &log, std::ostream &err);
}

#endif
