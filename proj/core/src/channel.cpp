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

#include <cris/channel.hpp>

#include <cmath>
#include <random>

namespace cris
{
    double LinkStats::los_fraction() const
    {
        if (std::isinf(rician_k))
            return 1.0;
        return rician_k / (rician_k + 1.0);
    }

    void LinkStats::validate() const
    {
        if (std::isnan(rician_k) || rician_k < 0.0)
            throw InvalidInput("Rician factor must be >= 0");
        for (double v : {pathloss_beta, direct_var, tx_power, noise_var})
            if (!std::isfinite(v) || v < 0.0)
                throw InvalidInput("link parameters must be finite and >= 0");
        if (noise_var == 0.0)
            throw InvalidInput("noise variance must be positive");
    }

    DerivedCoefficients derive_coefficients(const LinkStats &stats_b, const LinkStats &stats_i, std::size_t m,
                                            std::size_t vr_overlap)
    {
        // With r = K/(K+1):  K_B K_i / ((K_B+1)(K_i+1)) = r_B r_i,
        // (K_B + K_i + 1) / ((K_B+1)(K_i+1)) = 1 - r_B r_i,  1 / ((K_B+1)(K_i+1)) = (1 - r_B)(1 - r_i).
        const double beta = stats_b.pathloss_beta * stats_i.pathloss_beta;
        const double rb = stats_b.los_fraction();
        const double ri = stats_i.los_fraction();
        const double md = static_cast<double>(m);

        DerivedCoefficients c;
        c.eta = beta * rb * ri;
        c.chi = beta * (1.0 - rb * ri);
        c.c_const = c.chi * md * static_cast<double>(vr_overlap) + stats_i.direct_var * md;
        c.lambda_comp = std::sqrt(beta * (1.0 - rb) * (1.0 - ri));
        c.vr_overlap = vr_overlap;
        c.rician_k_bs = stats_b.rician_k;
        c.rician_k_user = stats_i.rician_k;
        return c;
    }

    CrossTerms nlos_cross_terms(const DerivedCoefficients &coeffs, std::size_t m, std::size_t vr_overlap)
    {
        const double base = coeffs.lambda_comp * coeffs.lambda_comp * static_cast<double>(m) * static_cast<double>(vr_overlap);
        CrossTerms x;
        x.x1 = base;
        // lambda = 0 for K = inf, so the products below are 0 * inf there; the limit is 0.
        x.x2 = base == 0.0 ? 0.0 : base * coeffs.rician_k_user;
        x.x3 = base == 0.0 ? 0.0 : base * coeffs.rician_k_bs;
        return x;
    }

    void Scenario::validate() const
    {
        ris.validate();
        if (ris.kind == ArrayKind::ula)
            throw InvalidInput("the RIS must be a UCA or a UPA");
        if (bs_antennas < 1)
            throw InvalidInput("BS needs at least one antenna");
        bs_link.validate();
        uav_link.validate();
        itv_link.validate();
        (void)angles.normalized();
    }

    CVector los_vector(const ArrayDescriptor &desc, double azimuth, double elevation)
    {
        switch (desc.kind)
        {
        case ArrayKind::uca:
        {
            const VisibilityMask mask = visibility_mask(desc, azimuth);
            return uca_arv(desc, azimuth, elevation).cwiseProduct(mask.as_real().cast<Complex>());
        }
        case ArrayKind::upa:
            return upa_arv(desc, azimuth + pi / 2, elevation);
        case ArrayKind::ula:
            break;
        }
        throw InvalidInput("los_vector needs a UCA or UPA descriptor");
    }

    LosPair los_cascaded_vectors(const ArrayDescriptor &desc, const AngleSet &angles, User user)
    {
        const AngleSet a = angles.normalized();
        LosPair out;
        out.h_bar_b = los_vector(desc, a.azimuth_aoa_br, a.elevation_aoa_br);
        out.h_bar_i = user == User::uav ? los_vector(desc, a.azimuth_aod_ru, a.elevation_aod_ru)
                                        : los_vector(desc, a.azimuth_aod_rv, a.elevation_aod_rv);
        return out;
    }

    CascadeGeometry cascade_geometry(const Scenario &scenario)
    {
        scenario.validate();
        const AngleSet a = scenario.angles.normalized();
        const ArrayDescriptor &ris = scenario.ris;

        CascadeGeometry g;
        g.mask_bs = visibility_mask(ris, a.azimuth_aoa_br);
        g.mask_uav = visibility_mask(ris, a.azimuth_aod_ru);
        g.mask_itv = visibility_mask(ris, a.azimuth_aod_rv);
        g.classification = classify_elements(g.mask_bs, g.mask_uav, g.mask_itv);
        g.h_bar_b = los_vector(ris, a.azimuth_aoa_br, a.elevation_aoa_br);
        g.h_bar_u = los_vector(ris, a.azimuth_aod_ru, a.elevation_aod_ru);
        g.h_bar_v = los_vector(ris, a.azimuth_aod_rv, a.elevation_aod_rv);
        g.a_bs = ula_arv(scenario.bs_antennas, a.aod_bs, ris.spacing_d, ris.wavelength);

        const std::size_t m = scenario.bs_antennas;
        g.coeffs_u = derive_coefficients(scenario.bs_link, scenario.uav_link, m, overlap(g.mask_bs, g.mask_uav));
        g.coeffs_v = derive_coefficients(scenario.bs_link, scenario.itv_link, m, overlap(g.mask_bs, g.mask_itv));
        return g;
    }

    std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream)
    {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    namespace
    {
        // Circularly symmetric CN(0, 1) samples.
        class ComplexGaussian
        {
        public:
            explicit ComplexGaussian(std::uint64_t seed) : engine_(mix_seed(seed, 0)), normal_(0.0, std::sqrt(0.5)) {}

            Complex operator()()
            {
                const double re = normal_(engine_);
                const double im = normal_(engine_);
                return {re, im};
            }

        private:
            std::mt19937_64 engine_;
            std::normal_distribution<double> normal_;
        };

        CVector draw_vector(ComplexGaussian &cn, Eigen::Index n)
        {
            CVector v(n);
            for (Eigen::Index i = 0; i < n; ++i)
                v[i] = cn();
            return v;
        }
    } // namespace

    ChannelRealization sample_realization(std::uint64_t seed, const Scenario &scenario, const CascadeGeometry &geometry,
                                          User user, const SamplingOptions &options)
    {
        const auto n = static_cast<Eigen::Index>(scenario.ris.size());
        const auto m = static_cast<Eigen::Index>(scenario.bs_antennas);
        if (geometry.h_bar_b.size() != n || geometry.a_bs.size() != m)
            throw InvalidInput("sample_realization: geometry does not match scenario");

        ComplexGaussian cn(seed);

        CMatrix h_a(n, m);
        for (Eigen::Index col = 0; col < m; ++col)
            for (Eigen::Index row = 0; row < n; ++row)
                h_a(row, col) = cn();
        const CVector hu_a = draw_vector(cn, n);
        const CVector hv_a = draw_vector(cn, n);
        const CVector gu = draw_vector(cn, m);
        const CVector gv = draw_vector(cn, m);

        const auto scales = [&](const LinkStats &s) {
            const double r = options.los_only ? 1.0 : s.los_fraction();
            return std::pair{std::sqrt(s.pathloss_beta * r), std::sqrt(s.pathloss_beta * (1.0 - r))};
        };

        ChannelRealization out;
        const RVector rb = geometry.mask_bs.as_real();
        const auto [los_b, nlos_b] = scales(scenario.bs_link);
        out.h_bs_ris_los = los_b * geometry.h_bar_b * geometry.a_bs.adjoint();
        out.h_bs_ris_nlos = nlos_b * (rb.cast<Complex>().asDiagonal() * h_a);

        const LinkStats &link = scenario.link(user);
        const RVector ri = geometry.mask(user).as_real();
        const auto [los_i, nlos_i] = scales(link);
        out.h_ris_user_los = los_i * geometry.h_bar(user);
        out.h_ris_user_nlos = nlos_i * (user == User::uav ? hu_a : hv_a).cwiseProduct(ri.cast<Complex>());

        out.g_direct = std::sqrt(link.direct_var) * (user == User::uav ? gu : gv);
        return out;
    }

} // namespace cris
