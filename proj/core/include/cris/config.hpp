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

#ifndef CRIS_CONFIG_HPP
#define CRIS_CONFIG_HPP

#include <cris/channel.hpp>
#include <cris/optimizer.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace cris
{
    // Scenario description in the units used on disk: angles in degrees, Rician factors and direct-link variances
    // in dB, powers in dBm. Defaults describe the reference two-user setup.
    //
    // File format: one `key = value` per line, `#` starts a comment, lists are comma separated.
    struct ScenarioConfig
    {
        // arrays
        std::size_t bs_antennas = 16;
        std::size_t ris_layers = 4;
        std::size_t ris_ring = 64;
        std::size_t upa_rows = 0; // 0: ris_layers
        std::size_t upa_cols = 0; // 0: ris_ring / 2
        double spacing_m = 0.05;
        double wavelength_m = 0.1;

        // geometry, degrees
        double bs_azimuth_deg = 0.0;
        double bs_elevation_deg = 90.0;
        double bs_aod_deg = 90.0;
        double uav_azimuth_deg = 30.0;
        double uav_elevation_deg = 90.0;
        double itv_azimuth_deg = -30.0;
        double itv_elevation_deg = 90.0;

        // links
        double rician_k_bs_db = 13.0;
        double rician_k_uav_db = 13.0;
        double rician_k_itv_db = 13.0;
        double tx_power_uav_dbm = 30.0;
        double tx_power_itv_dbm = 30.0;
        double noise_uav_dbm = -107.0;
        double noise_itv_dbm = -107.0;
        double direct_var_uav_db = -110.0;
        double direct_var_itv_db = -110.0;
        double k0 = 1e-3;
        double alpha_bs = 2.0;
        double alpha_uav = 3.0;
        double alpha_itv = 2.0;
        double dist_bs_m = 80.0;
        double dist_uav_m = 80.0;
        double dist_itv_m = 400.0;
        bool los_only = false;

        // optimizer
        double step_k = 1.0;
        double step_t = -4.0;
        std::size_t max_iterations = 100000;
        double tolerance = 1e-6;

        // experiments
        std::size_t mc_trials = 10000;
        std::size_t opt_trials = 100;
        std::uint64_t seed = 1;
        std::vector<double> azimuth_list_deg = default_azimuths();
        std::vector<std::size_t> nr_list = {8, 16, 32, 64};

        static std::vector<double> default_azimuths(); // 0, 5, ..., 90

        // Linear-unit scenario with the UCA RIS. Throws InvalidInput on out-of-range values.
        Scenario uca_scenario() const;
        // Same links with the planar baseline holding half as many elements.
        Scenario upa_scenario() const;
        OptimizerOptions optimizer_options() const;

        void validate() const;

        bool operator==(const ScenarioConfig &) const = default;
    };

    // Parse config text; `origin` names the source in error messages. Unknown keys and malformed numbers throw
    // ConfigError naming the line and key.
    ScenarioConfig parse_config(std::string_view text, const std::string &origin = "<config>");

    ScenarioConfig load_config(const std::filesystem::path &path);

    // Every key with its value, in a form parse_config reads back to an identical config.
    std::string emit_config(const ScenarioConfig &config);

    // Large-scale path loss k0 * d^-alpha.
    double pathloss(double k0, double distance_m, double alpha);

} // namespace cris

#endif
