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

#include "oracles.hpp"

#include <cris/channel.hpp>
#include <cris/performance.hpp>

#include <gtest/gtest.h>

#include <random>
#include <vector>

using namespace cris;

namespace
{
    LinkStats link(double k, double beta, double direct_var = 0.0)
    {
        LinkStats s;
        s.rician_k = k;
        s.pathloss_beta = beta;
        s.direct_var = direct_var;
        return s;
    }

    Scenario small_scenario(double k = 3.0, double direct_var = 0.5)
    {
        Scenario s;
        s.ris = ArrayDescriptor::uca(2, 8, 0.05, 0.1);
        s.bs_antennas = 4;
        s.angles.azimuth_aoa_br = 0.0;
        s.angles.azimuth_aod_ru = 0.6;
        s.angles.azimuth_aod_rv = -0.9;
        s.angles.elevation_aod_ru = 1.2;
        s.bs_link = link(k, 1.0);
        s.uav_link = link(k, 1.0, direct_var);
        s.itv_link = link(2 * k, 1.0, direct_var);
        return s;
    }
} // namespace

TEST(DeriveCoefficients, NoLineOfSight)
{
    const auto c = derive_coefficients(link(0.0, 2e-3), link(0.0, 5e-4), 16, 10);
    EXPECT_EQ(c.eta, 0.0);
    EXPECT_NEAR(c.chi, 2e-3 * 5e-4, 1e-20);
}

TEST(DeriveCoefficients, EqualFactorsRatio)
{
    for (double k : {0.5, 1.0, 7.0, 20.0})
    {
        const auto c = derive_coefficients(link(k, 1.0), link(k, 1.0), 4, 3);
        EXPECT_NEAR(c.eta / c.chi, k * k / (2 * k + 1), 1e-12 * k);
    }
}

TEST(DeriveCoefficients, ReferenceParametersMatchScalarOracle)
{
    const double k = std::pow(10.0, 1.3);
    const double bb = 1e-3 * std::pow(80.0, -2.0);
    const double bu = 1e-3 * std::pow(80.0, -3.0);
    const double expected_eta = bb * bu * k * k / ((k + 1) * (k + 1));
    const auto c = derive_coefficients(link(k, bb), link(k, bu), 16, 130);
    EXPECT_NEAR(c.eta / expected_eta, 1.0, 1e-12);
    // 10^-6 * 80^-5 * K^2 / (K+1)^2 evaluated by hand: 2.7674e-16
    EXPECT_NEAR(c.eta, 2.76741e-16, 1e-20);
}

TEST(DeriveCoefficients, RandomParametersMatchScalarOracle)
{
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> kd(0.0, 30.0), bd(1e-9, 1e-2), sd(0.0, 1e-8);
    std::uniform_int_distribution<std::size_t> md(1, 64), od(0, 128);
    for (int trial = 0; trial < 100; ++trial)
    {
        const double kb = kd(rng), ki = kd(rng), bb = bd(rng), bi = bd(rng), sv = sd(rng);
        const std::size_t m = md(rng), ov = od(rng);
        const auto c = derive_coefficients(link(kb, bb), link(ki, bi, sv), m, ov);
        const auto o = oracle::coefficients(kb, ki, bb, bi, sv, m, ov);
        EXPECT_NEAR(c.eta, o.eta, 1e-12 * o.chi);
        EXPECT_NEAR(c.chi, o.chi, 1e-12 * o.chi);
        EXPECT_NEAR(c.c_const, o.c, 1e-12 * o.c + 1e-300);
        EXPECT_NEAR(c.lambda_comp * c.lambda_comp, o.lambda2, 1e-12 * o.lambda2);
        EXPECT_EQ(c.vr_overlap, ov);
    }
}

TEST(DeriveCoefficientsProperty, LambdaIdentity)
{
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> kd(0.0, 100.0), bd(1e-10, 1.0);
    for (int trial = 0; trial < 200; ++trial)
    {
        const double kb = kd(rng), ki = kd(rng);
        const auto c = derive_coefficients(link(kb, bd(rng)), link(ki, bd(rng)), 8, 5);
        EXPECT_NEAR(c.lambda_comp * c.lambda_comp * (kb + ki + 1.0) / c.chi, 1.0, 1e-12);
    }
}

TEST(DeriveCoefficients, PureLineOfSight)
{
    const auto c = derive_coefficients(link(pure_los, 2.0), link(pure_los, 3.0), 4, 6);
    EXPECT_EQ(c.eta, 6.0);
    EXPECT_EQ(c.chi, 0.0);
    EXPECT_EQ(c.lambda_comp, 0.0);
    const auto x = nlos_cross_terms(c, 4, 6);
    EXPECT_EQ(x.sum(), 0.0);
}

TEST(CrossTerms, EmptyOverlapVanishes)
{
    const auto c = derive_coefficients(link(3.0, 1.0), link(4.0, 1.0), 8, 0);
    const auto x = nlos_cross_terms(c, 8, 0);
    EXPECT_EQ(x.x1, 0.0);
    EXPECT_EQ(x.x2, 0.0);
    EXPECT_EQ(x.x3, 0.0);
}

TEST(CrossTerms, RayleighUserDropsLosNlosTerm)
{
    const auto c = derive_coefficients(link(3.0, 1.0), link(0.0, 1.0), 8, 5);
    EXPECT_EQ(nlos_cross_terms(c, 8, 5).x2, 0.0);
}

TEST(CrossTermsProperty, SumEqualsChiScaledOverlap)
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> kd(0.0, 40.0), bd(1e-8, 1.0);
    for (int trial = 0; trial < 100; ++trial)
    {
        const std::size_t m = 1 + trial % 17, ov = trial % 23;
        const auto c = derive_coefficients(link(kd(rng), bd(rng)), link(kd(rng), bd(rng)), m, ov);
        const auto x = nlos_cross_terms(c, m, ov);
        EXPECT_NEAR(x.sum(), c.chi * static_cast<double>(m * ov), 1e-12 * c.chi * static_cast<double>(m * ov + 1));
    }
}

TEST(LosVectors, MaskedEntriesAreZero)
{
    AngleSet a;
    a.azimuth_aoa_br = 0.0;
    a.azimuth_aod_ru = 1.0;
    const auto desc = ArrayDescriptor::uca(1, 4, 0.05, 0.1);
    const LosPair p = los_cascaded_vectors(desc, a, User::uav);
    EXPECT_EQ(p.h_bar_b[2], Complex(0.0, 0.0));
    EXPECT_NE(p.h_bar_b[0], Complex(0.0, 0.0));
    const auto mu = visibility_mask(desc, 1.0);
    for (Eigen::Index n = 0; n < 4; ++n)
        EXPECT_EQ(p.h_bar_i[n] == Complex(0.0, 0.0), !mu[static_cast<std::size_t>(n)]);
}

TEST(LosVectors, ZeroElevationReducesToLayerFactor)
{
    const auto desc = ArrayDescriptor::uca(3, 6, 0.05, 0.1);
    const CVector h = los_vector(desc, 0.0, 0.0);
    const CVector layer = ula_arv(3, 0.0, 0.05, 0.1);
    const auto mask = visibility_mask(desc, 0.0);
    for (std::size_t l = 0; l < 3; ++l)
        for (std::size_t i = 0; i < 6; ++i)
        {
            const Complex expected = mask[i] ? layer[static_cast<Eigen::Index>(l)] : Complex{};
            EXPECT_NEAR(std::abs(h[static_cast<Eigen::Index>(l * 6 + i)] - expected), 0.0, 1e-12);
        }
}

TEST(LosVectors, PlanarPanelIsUnmasked)
{
    const CVector h = los_vector(ArrayDescriptor::upa(2, 4, 0.05, 0.1), 2.8, 1.1);
    for (Eigen::Index n = 0; n < h.size(); ++n)
        EXPECT_NEAR(std::abs(h[n]), 1.0, 1e-12);
}

TEST(Sampling, SameSeedSameRealization)
{
    const Scenario s = small_scenario();
    const auto g = cascade_geometry(s);
    const auto a = sample_realization(99, s, g, User::uav);
    const auto b = sample_realization(99, s, g, User::uav);
    EXPECT_EQ(a.h_bs_ris(), b.h_bs_ris());
    EXPECT_EQ(a.h_ris_user(), b.h_ris_user());
    EXPECT_EQ(a.g_direct, b.g_direct);
    const auto c = sample_realization(100, s, g, User::uav);
    EXPECT_NE(a.h_bs_ris(), c.h_bs_ris());
}

TEST(Sampling, UsersShareTheBsLinkDraw)
{
    const Scenario s = small_scenario();
    const auto g = cascade_geometry(s);
    EXPECT_EQ(sample_realization(5, s, g, User::uav).h_bs_ris(), sample_realization(5, s, g, User::itv).h_bs_ris());
}

TEST(Sampling, LosOnlyEqualsDeterministicPart)
{
    const Scenario s = small_scenario(3.0, 0.0);
    const auto g = cascade_geometry(s);
    const auto r = sample_realization(7, s, g, User::itv, SamplingOptions{true});
    EXPECT_EQ(r.h_bs_ris_nlos.norm(), 0.0);
    EXPECT_EQ(r.h_ris_user_nlos.norm(), 0.0);
    const CMatrix expected = g.h_bar_b * g.a_bs.adjoint();
    EXPECT_NEAR((r.h_bs_ris() - expected).norm(), 0.0, 1e-12);
    EXPECT_NEAR((r.h_ris_user() - g.h_bar_v).norm(), 0.0, 1e-12);
}

TEST(Sampling, InfiniteRicianFactorDropsScattering)
{
    Scenario s = small_scenario();
    s.bs_link.rician_k = pure_los;
    s.uav_link.rician_k = pure_los;
    const auto g = cascade_geometry(s);
    const auto r = sample_realization(8, s, g, User::uav);
    EXPECT_EQ(r.h_bs_ris_nlos.norm(), 0.0);
    EXPECT_EQ(r.h_ris_user_nlos.norm(), 0.0);
}

TEST(SamplingProperty, ScatteringRespectsMasks)
{
    const Scenario s = small_scenario();
    const auto g = cascade_geometry(s);
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        for (User u : {User::uav, User::itv})
        {
            const auto r = sample_realization(seed, s, g, u);
            for (std::size_t n = 0; n < s.ris.size(); ++n)
            {
                const auto idx = static_cast<Eigen::Index>(n);
                if (!g.mask_bs[n])
                    EXPECT_EQ(r.h_bs_ris_nlos.row(idx).norm(), 0.0);
                if (!g.mask(u)[n])
                    EXPECT_EQ(r.h_ris_user_nlos[idx], Complex(0.0, 0.0));
            }
        }
}

TEST(SamplingProperty, ScatteringEntriesHaveUnitPower)
{
    // K = 0 and unit path loss make every active NLoS entry CN(0, 1).
    Scenario s = small_scenario(0.0, 1.0);
    const auto g = cascade_geometry(s);
    std::vector<double> power;
    std::vector<double> direct;
    const Eigen::Index row = 0; // visible to the BS
    ASSERT_TRUE(g.mask_bs[0]);
    for (std::uint64_t t = 0; t < 25000; ++t)
    {
        const auto r = sample_realization(mix_seed(3, t), s, g, User::uav);
        for (Eigen::Index col = 0; col < r.h_bs_ris_nlos.cols(); ++col)
            power.push_back(std::norm(r.h_bs_ris_nlos(row, col)));
        direct.push_back(r.g_direct.squaredNorm());
    }
    const auto p = sample_stats(power);
    EXPECT_LE(std::abs(p.mean - 1.0), 3 * p.std_error);
    const auto d = sample_stats(direct);
    EXPECT_LE(std::abs(d.mean - 4.0), 3 * d.std_error) << "E||g||^2 = sigma^2 M";
}

TEST(MixSeed, DistinctStreams)
{
    EXPECT_NE(mix_seed(1, 0), mix_seed(1, 1));
    EXPECT_NE(mix_seed(1, 0), mix_seed(2, 0));
    EXPECT_EQ(mix_seed(17, 4), mix_seed(17, 4));
}

TEST(LinkStats, ValidateRejectsNegatives)
{
    EXPECT_THROW(link(-1.0, 1.0).validate(), InvalidInput);
    EXPECT_THROW(link(1.0, -1.0).validate(), InvalidInput);
    LinkStats s = link(1.0, 1.0);
    s.noise_var = 0.0;
    EXPECT_THROW(s.validate(), InvalidInput);
    s.noise_var = 2.0;
    s.tx_power = 6.0;
    EXPECT_EQ(s.snr_s(), 3.0);
}
