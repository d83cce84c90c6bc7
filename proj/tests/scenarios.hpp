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

#ifndef CRIS_TESTS_SCENARIOS_HPP
#define CRIS_TESTS_SCENARIOS_HPP

#include <cris/channel.hpp>

#include <random>

namespace testing_scenarios
{
    // Small randomized UCA scenario with unit-order powers.
    inline cris::Scenario random_scenario(std::mt19937_64 &rng)
    {
        std::uniform_real_distribution<double> az(0.0, 2 * cris::pi), el(0.3, cris::pi - 0.3);
        std::uniform_real_distribution<double> kd(0.0, 20.0), beta(0.2, 2.0), direct(0.0, 2.0), snr(0.5, 50.0);
        std::uniform_int_distribution<std::size_t> layers(1, 2), half_ring(4, 12), antennas(2, 8);

        cris::Scenario s;
        s.ris = cris::ArrayDescriptor::uca(layers(rng), 2 * half_ring(rng), 0.05, 0.1);
        s.bs_antennas = antennas(rng);
        s.angles.azimuth_aoa_br = az(rng);
        s.angles.elevation_aoa_br = el(rng);
        s.angles.aod_bs = el(rng);
        // Users within a half turn of the BS so that both overlaps are usually non-empty.
        std::uniform_real_distribution<double> offset(-cris::pi / 2, cris::pi / 2);
        s.angles.azimuth_aod_ru = s.angles.azimuth_aoa_br + offset(rng);
        s.angles.elevation_aod_ru = el(rng);
        s.angles.azimuth_aod_rv = s.angles.azimuth_aoa_br + offset(rng);
        s.angles.elevation_aod_rv = el(rng);
        for (cris::LinkStats *l : {&s.bs_link, &s.uav_link, &s.itv_link})
        {
            l->rician_k = kd(rng);
            l->pathloss_beta = beta(rng);
            l->direct_var = direct(rng);
            l->tx_power = snr(rng);
            l->noise_var = 1.0;
        }
        return s;
    }
} // namespace testing_scenarios

#endif
