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

#ifndef CRIS_EXPERIMENTS_HPP
#define CRIS_EXPERIMENTS_HPP

#include <cris/config.hpp>
#include <cris/csv.hpp>

#include <cstdint>
#include <span>
#include <string>

namespace cris
{
    // Copy of `config` with the UAV at bs_azimuth + offset and the ITV mirrored at bs_azimuth - offset.
    ScenarioConfig symmetric_users(const ScenarioConfig &config, double offset_deg);

    // Optimized UCA (hybrid) and UPA (gradient baseline) bounds versus the UAV azimuth offset.
    // Columns: azimuth_deg, shared, uav_specific, itv_specific, inactive, uca_sum_se_ub, uca_uav_se_ub,
    // uca_itv_se_ub, uca_gradient_iterations, upa_sum_se_ub, upa_uav_se_ub, upa_itv_se_ub, upa_gradient_iterations.
    Table sweep_uav_azimuth(const ScenarioConfig &config, std::span<const double> azimuths_deg, std::uint64_t seed);

    // Optimized bounds versus ring size N_r at the configured user positions.
    // Columns: ring_nr, uca_elements, upa_elements, shared, uav_specific, itv_specific, inactive, uca_sum_se_ub,
    // uca_uav_se_ub, uca_itv_se_ub, upa_sum_se_ub, upa_uav_se_ub, upa_itv_se_ub.
    Table sweep_ring_size(const ScenarioConfig &config, std::span<const std::size_t> ring_sizes, std::uint64_t seed);

    // Gradient iterations of both designs over `trials` random initializations per azimuth offset. Trial t starts
    // from seed mix_seed(seed, t) for both designs.
    // Columns: azimuth_deg, shared, uca_mean_iterations, uca_std_iterations, upa_mean_iterations,
    // upa_std_iterations, uca_converged, upa_converged, iteration_ratio.
    Table benchmark_iterations(const ScenarioConfig &config, std::span<const double> azimuths_deg, std::size_t trials,
                               std::uint64_t seed);

    struct ValidationReport
    {
        // Columns: user, check, analytic, monte_carlo, std_error, pass.
        Table table;
        bool passed = true;
        std::string summary;
    };

    // Closed-form bound and second-moment terms against Monte Carlo on random phases drawn from `seed`.
    // A check passes when |analytic - monte_carlo| <= 3 std_error (one-sided for the Jensen bound).
    ValidationReport validate_bounds(const ScenarioConfig &config, std::size_t trials, std::uint64_t seed);

} // namespace cris

#endif
