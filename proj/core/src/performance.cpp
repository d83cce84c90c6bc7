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

#include <cris/performance.hpp>

#include <cmath>
#include <random>
#include <vector>

namespace cris
{
    PhaseProfile::PhaseProfile(RVector angles) : angles_(std::move(angles))
    {
        for (Eigen::Index n = 0; n < angles_.size(); ++n)
        {
            if (!std::isfinite(angles_[n]))
                throw InvalidInput("phase angles must be finite");
            angles_[n] = wrap_angle(angles_[n]);
        }
    }

    PhaseProfile PhaseProfile::zeros(std::size_t n)
    {
        return PhaseProfile(RVector::Zero(static_cast<Eigen::Index>(n)));
    }

    PhaseProfile PhaseProfile::uniform_random(std::size_t n, std::uint64_t seed)
    {
        std::mt19937_64 engine(mix_seed(seed, 0x5eed));
        std::uniform_real_distribution<double> uni(0.0, two_pi);
        RVector a(static_cast<Eigen::Index>(n));
        for (Eigen::Index i = 0; i < a.size(); ++i)
            a[i] = uni(engine);
        return PhaseProfile(std::move(a));
    }

    void PhaseProfile::set(std::size_t n, double angle)
    {
        if (!std::isfinite(angle))
            throw InvalidInput("phase angles must be finite");
        angles_[static_cast<Eigen::Index>(n)] = wrap_angle(angle);
    }

    CVector PhaseProfile::diagonal() const
    {
        CVector d(angles_.size());
        for (Eigen::Index n = 0; n < angles_.size(); ++n)
            d[n] = std::polar(1.0, angles_[n]);
        return d;
    }

    CVector mrt_beamformer(const CVector &g, const CVector &d)
    {
        if (g.size() != d.size())
            throw InvalidInput("mrt_beamformer: dimension mismatch");
        const CVector t = g + d;
        const double norm = t.norm();
        if (norm == 0.0)
            throw DegenerateChannel("composite channel g + d is zero");
        return t / norm;
    }

    CVector cascaded_gain(const ChannelRealization &realization, const PhaseProfile &phases)
    {
        const CMatrix h = realization.h_bs_ris();
        const CVector hu = realization.h_ris_user();
        if (static_cast<std::size_t>(h.rows()) != phases.size() || hu.size() != h.rows())
            throw InvalidInput("cascaded_gain: dimension mismatch");
        // d = H^H (conj(Phi) h)
        const CVector w = phases.diagonal().conjugate().cwiseProduct(hu);
        return h.adjoint() * w;
    }

    double instantaneous_se(const ChannelRealization &realization, const PhaseProfile &phases, double snr)
    {
        if (snr == 0.0)
            return 0.0;
        const CVector d = cascaded_gain(realization, phases);
        const CVector &g = realization.g_direct;
        const CVector t = g + d;
        if (t.squaredNorm() == 0.0)
            return 0.0;
        const CVector f = mrt_beamformer(g, d);
        const double gain = std::norm(t.dot(f)); // |(g + d)^H f|^2
        return std::log2(1.0 + snr * gain);
    }

    double los_gain(const PhaseProfile &phases, const CVector &h_bar_b, const CVector &h_bar_i)
    {
        if (h_bar_b.size() != h_bar_i.size() || static_cast<std::size_t>(h_bar_b.size()) != phases.size())
            throw InvalidInput("los_gain: dimension mismatch");
        // h_bar_i^H Phi h_bar_b
        const Complex z = h_bar_i.dot(phases.diagonal().cwiseProduct(h_bar_b));
        return std::norm(z);
    }

    double bound_argument(const DerivedCoefficients &coeffs, const PhaseProfile &phases, const CVector &h_bar_b,
                          const CVector &h_bar_i, std::size_t m, double snr)
    {
        const double f = coeffs.eta * static_cast<double>(m) * los_gain(phases, h_bar_b, h_bar_i);
        return snr * (f + coeffs.c_const);
    }

    double ergodic_se_bound(const DerivedCoefficients &coeffs, const PhaseProfile &phases, const CVector &h_bar_b,
                        const CVector &h_bar_i, std::size_t m, double snr)
    {
        return std::log2(1.0 + bound_argument(coeffs, phases, h_bar_b, h_bar_i, m, snr));
    }

    SumBound sum_se_upper_bound(std::span<const double> arguments, bool high_snr)
    {
        SumBound out;
        for (double x : arguments)
        {
            if (high_snr)
            {
                out.value += std::log2(x);
                if (x < high_snr_threshold)
                    out.low_snr_warning = true;
            }
            else
            {
                out.value += std::log2(1.0 + x);
            }
        }
        return out;
    }

    SampleStats sample_stats(std::span<const double> values)
    {
        const auto neumaier = [](std::span<const double> xs, auto &&term) {
            double sum = 0.0, comp = 0.0;
            for (double x : xs)
            {
                const double v = term(x);
                const double t = sum + v;
                comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
                sum = t;
            }
            return sum + comp;
        };

        SampleStats s;
        if (values.empty())
            return s;
        const double n = static_cast<double>(values.size());
        // Shifted by the first sample so a constant sample gives an exact mean and a zero spread.
        const double shift = values.front();
        s.mean = shift + neumaier(values, [&](double x) { return x - shift; }) / n;
        if (values.size() > 1)
        {
            const double ss = neumaier(values, [&](double x) { return (x - s.mean) * (x - s.mean); });
            s.std_error = std::sqrt(ss / (n - 1.0) / n);
        }
        return s;
    }

    SeReport ergodic_se_mc(const Scenario &scenario, const CascadeGeometry &geometry, const PhaseProfile &phases,
                           User user, std::size_t num_trials, std::uint64_t seed, const SamplingOptions &options)
    {
        if (num_trials < 2)
            throw InvalidInput("ergodic_se_mc needs at least 2 trials");
        const double snr = scenario.link(user).snr_s();

        std::vector<double> se(num_trials);
        for (std::size_t t = 0; t < num_trials; ++t)
        {
            const ChannelRealization r = sample_realization(mix_seed(seed, t), scenario, geometry, user, options);
            se[t] = instantaneous_se(r, phases, snr);
        }
        const SampleStats stats = sample_stats(se);

        DerivedCoefficients coeffs = geometry.coeffs(user);
        if (options.los_only)
        {
            LinkStats b = scenario.bs_link, i = scenario.link(user);
            b.rician_k = pure_los;
            i.rician_k = pure_los;
            coeffs = derive_coefficients(b, i, scenario.bs_antennas, coeffs.vr_overlap);
        }

        SeReport rep;
        rep.se_mc = stats.mean;
        rep.se_mc_stderr = stats.std_error;
        rep.num_trials = num_trials;
        const double x = bound_argument(coeffs, phases, geometry.h_bar_b, geometry.h_bar(user), scenario.bs_antennas, snr);
        rep.se_ub = std::log2(1.0 + x);
        rep.se_ub_highsnr = std::log2(x);
        return rep;
    }

    CascadePowerTerms cascade_power_terms(const ChannelRealization &r, const PhaseProfile &phases)
    {
        const CVector conj_phi = phases.diagonal().conjugate();
        const auto part = [&](const CVector &h, const CMatrix &bs) -> CVector {
            return bs.adjoint() * conj_phi.cwiseProduct(h);
        };

        const CVector d_ll = part(r.h_ris_user_los, r.h_bs_ris_los);
        const CVector d_nn = part(r.h_ris_user_nlos, r.h_bs_ris_nlos);
        const CVector d_ln = part(r.h_ris_user_los, r.h_bs_ris_nlos);
        const CVector d_nl = part(r.h_ris_user_nlos, r.h_bs_ris_los);

        CascadePowerTerms out;
        out.los = d_ll.squaredNorm();
        out.nlos_nlos = d_nn.squaredNorm();
        out.los_nlos = d_ln.squaredNorm();
        out.nlos_los = d_nl.squaredNorm();
        out.direct = r.g_direct.squaredNorm();
        out.total = (d_ll + d_nn + d_ln + d_nl + r.g_direct).squaredNorm();
        return out;
    }

} // namespace cris
