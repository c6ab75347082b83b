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
#include "irs_squint/scenario.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char **argv)
{
    using namespace irs_squint;

    CLI::App app{"Wideband THz IRS beam squint simulator"};
    app.require_subcommand(1, 1);

    std::string scenario_path, out_path, format, subcommand;
    std::optional<double> threshold, grid_step;

    for (auto name : subcommands)
    {
        auto *sub = app.add_subcommand(std::string(name));
        sub->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
        sub->add_option("--out", out_path, "Output artifact path")->required();
        sub->add_option("--format", format, "Output format (overrides the scenario)")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--threshold", threshold, "Normalized gain threshold in (0, 1)");
        sub->add_option("--grid-step", grid_step, "Step of the direction or location grid");
        sub->callback([&subcommand, name] { subcommand = std::string(name); });
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return exit_usage;
    }

    Scenario scenario;
    try
    {
        scenario = load_scenario(scenario_path);
    }
    catch (const std::ios_base::failure &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << scenario_path << ": " << e.what() << '\n';
        return exit_usage;
    }

    RunOptions options;
    if (!format.empty())
        options.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
    options.threshold = threshold;
    options.grid_step = grid_step;

    return run(subcommand, scenario, out_path, options, std::cout, std::cerr);
}
