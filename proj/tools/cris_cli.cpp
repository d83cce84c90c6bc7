// SPDX-License-Identifier: Apache-2.0
//
// cris: cylindrical RIS phase-shift design library
// Copyright (C) 2026 The cris authors
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

// cris: sweeps, iteration benchmarks and bound validation for cylindrical vs planar RIS phase design.

#include <cris/config.hpp>
#include <cris/csv.hpp>
#include <cris/experiments.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace
{
    struct CommonArgs
    {
        std::string config_path;
        std::optional<std::uint64_t> seed;
        std::string out_path;
    };

    void add_common(CLI::App *cmd, CommonArgs &args)
    {
        cmd->add_option("--config", args.config_path, "Scenario config file (defaults when omitted)");
        cmd->add_option("--seed", args.seed, "Random seed (overrides the config)");
        cmd->add_option("--out", args.out_path, "Output CSV path (stdout when omitted)");
    }

    cris::ScenarioConfig load(const CommonArgs &args)
    {
        cris::ScenarioConfig cfg = args.config_path.empty() ? cris::ScenarioConfig{} : cris::load_config(args.config_path);
        if (args.seed)
            cfg.seed = *args.seed;
        return cfg;
    }

    void emit(const cris::Table &table, const CommonArgs &args)
    {
        if (args.out_path.empty())
            std::cout << cris::to_csv(table);
        else
            cris::write_csv(table, args.out_path);
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Cylindrical RIS phase-shift design: sweeps, iteration benchmarks and bound validation"};
    app.require_subcommand(1);

    CommonArgs common;
    std::vector<double> azimuths;
    std::vector<std::size_t> rings;
    std::optional<std::size_t> trials;

    auto *sweep_az = app.add_subcommand("sweep-azimuth", "Optimized sum-SE bounds versus UAV azimuth offset");
    add_common(sweep_az, common);
    sweep_az->add_option("--azimuths", azimuths, "Azimuth offsets in degrees (default: config azimuth_list_deg)")
        ->delimiter(',');

    auto *sweep_nr = app.add_subcommand("sweep-nr", "Optimized sum-SE bounds versus ring size N_r");
    add_common(sweep_nr, common);
    sweep_nr->add_option("--rings", rings, "Ring sizes (default: config nr_list)")->delimiter(',');

    auto *bench = app.add_subcommand("bench-iters", "Gradient iterations of the UCA and UPA designs");
    add_common(bench, common);
    bench->add_option("--azimuths", azimuths, "Azimuth offsets in degrees (default: config azimuth_list_deg)")
        ->delimiter(',');
    bench->add_option("--trials", trials, "Optimization trials per azimuth (default: config opt_trials)");

    auto *validate = app.add_subcommand("validate", "Check the closed-form bound against Monte Carlo");
    add_common(validate, common);
    validate->add_option("--trials", trials, "Monte Carlo trials (default: config mc_trials)");

    auto *defaults = app.add_subcommand("defaults", "Print the default config file");
    defaults->add_option("--out", common.out_path, "Output path (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*defaults)
        {
            const std::string text = cris::emit_config(cris::ScenarioConfig{});
            if (common.out_path.empty())
            {
                std::cout << text;
            }
            else
            {
                std::ofstream out(common.out_path);
                out << text;
                if (!out)
                    throw cris::Error(cris::ErrorCategory::io, "cannot write '" + common.out_path + "'");
            }
            return 0;
        }

        const cris::ScenarioConfig cfg = load(common);
        if (azimuths.empty())
            azimuths = cfg.azimuth_list_deg;
        if (rings.empty())
            rings = cfg.nr_list;

        if (*sweep_az)
        {
            emit(cris::sweep_uav_azimuth(cfg, azimuths, cfg.seed), common);
        }
        else if (*sweep_nr)
        {
            emit(cris::sweep_ring_size(cfg, rings, cfg.seed), common);
        }
        else if (*bench)
        {
            emit(cris::benchmark_iterations(cfg, azimuths, trials.value_or(cfg.opt_trials), cfg.seed), common);
        }
        else if (*validate)
        {
            const cris::ValidationReport rep = cris::validate_bounds(cfg, trials.value_or(cfg.mc_trials), cfg.seed);
            emit(rep.table, common);
            std::cerr << rep.summary;
            if (!rep.passed)
                return static_cast<int>(cris::ErrorCategory::validation_failed);
        }
    }
    catch (const cris::Error &e)
    {
        std::cerr << "cris: " << e.what() << '\n';
        return static_cast<int>(e.category());
    }
    catch (const std::exception &e)
    {
        std::cerr << "cris: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
