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

#ifndef CRIS_CHANNEL_HPP
#define CRIS_CHANNEL_HPP

#include <cris/geometry.hpp>
#include <cris/types.hpp>

#include <cstdint>
#include <limits>

namespace cris
{
    enum class User
    {
        uav,
        itv
    };

    // Statistical CSI of one link, linear units. For the BS-RIS link only `rician_k` and `pathloss_beta` are used.
    // rician_k may be +infinity, which denotes a pure LoS link.
    struct LinkStats
    {
        double rician_k = 0.0;
        double pathloss_beta = 1.0;
        double direct_var = 0.0; // per-antenna variance of the direct BS-user link
        double tx_power = 1.0;   // mW
        double noise_var = 1.0;  // mW

        double snr_s() const { return tx_power / noise_var; }

        // K / (K + 1), well defined for K = +inf.
        double los_fraction() const;

        void validate() const;
    };

    inline constexpr double pure_los = std::numeric_limits<double>::infinity();

    // Coefficients of the closed-form ergodic SE bound for the link BS -> RIS -> user i.
    struct DerivedCoefficients
    {
        double eta = 0.0;
        double chi = 0.0;
        double c_const = 0.0;
        double lambda_comp = 0.0;
        std::size_t vr_overlap = 0;
        double rician_k_bs = 0.0;
        double rician_k_user = 0.0;
    };

    DerivedCoefficients derive_coefficients(const LinkStats &stats_b, const LinkStats &stats_i, std::size_t m,
                                            std::size_t vr_overlap);

    // Expected NLoS cross-term powers of E{||d||^2}.
    struct CrossTerms
    {
        double x1 = 0.0; // NLoS RIS-user through NLoS BS-RIS
        double x2 = 0.0; // LoS RIS-user through NLoS BS-RIS
        double x3 = 0.0; // NLoS RIS-user through LoS BS-RIS

        double sum() const { return x1 + x2 + x3; }
    };

    CrossTerms nlos_cross_terms(const DerivedCoefficients &coeffs, std::size_t m, std::size_t vr_overlap);

    // Full system: BS with an M-element ULA, one RIS panel, a UAV and an ITV.
    struct Scenario
    {
        ArrayDescriptor ris = ArrayDescriptor::uca(4, 64, 0.05, 0.1);
        std::size_t bs_antennas = 16;
        AngleSet angles;
        LinkStats bs_link;
        LinkStats uav_link;
        LinkStats itv_link;

        const LinkStats &link(User u) const { return u == User::uav ? uav_link : itv_link; }
        void validate() const;
    };

    // Masked LoS vectors h_bar = c_N(phi, theta) (.) r_N(phi) for one transceiver. Planar panels face azimuth 0,
    // so the steering vector is evaluated at phi + pi/2 (its broadside) and the mask is all ones.
    CVector los_vector(const ArrayDescriptor &desc, double azimuth, double elevation);

    struct LosPair
    {
        CVector h_bar_b;
        CVector h_bar_i;
    };

    LosPair los_cascaded_vectors(const ArrayDescriptor &desc, const AngleSet &angles, User user);

    // Everything deterministic about a scenario: masks, classification, LoS vectors, bound coefficients.
    struct CascadeGeometry
    {
        VisibilityMask mask_bs;
        VisibilityMask mask_uav;
        VisibilityMask mask_itv;
        ElementClassification classification;
        CVector h_bar_b;
        CVector h_bar_u;
        CVector h_bar_v;
        CVector a_bs; // BS ULA response a_M(theta_AoD)
        DerivedCoefficients coeffs_u;
        DerivedCoefficients coeffs_v;

        const CVector &h_bar(User u) const { return u == User::uav ? h_bar_u : h_bar_v; }
        const VisibilityMask &mask(User u) const { return u == User::uav ? mask_uav : mask_itv; }
        const DerivedCoefficients &coeffs(User u) const { return u == User::uav ? coeffs_u : coeffs_v; }
    };

    CascadeGeometry cascade_geometry(const Scenario &scenario);

    // One channel draw for one user, each link split into its scaled LoS and NLoS parts.
    struct ChannelRealization
    {
        CMatrix h_bs_ris_los;  // N x M
        CMatrix h_bs_ris_nlos; // N x M
        CVector h_ris_user_los;
        CVector h_ris_user_nlos;
        CVector g_direct; // M

        CMatrix h_bs_ris() const { return h_bs_ris_los + h_bs_ris_nlos; }
        CVector h_ris_user() const { return h_ris_user_los + h_ris_user_nlos; }
    };

    struct SamplingOptions
    {
        bool los_only = false; // treat every link as K -> infinity and drop the NLoS parts
    };

    // Draws H, h_u, h_v, g_u, g_v in that fixed order from a stream seeded by `seed`, and returns the links of
    // `user`. Two calls with the same seed therefore share H, which gives common random numbers across users.
    ChannelRealization sample_realization(std::uint64_t seed, const Scenario &scenario, const CascadeGeometry &geometry,
                                          User user, const SamplingOptions &options = {});

    // splitmix64 finalizer; used to derive per-trial seeds.
    std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace cris

#endif
