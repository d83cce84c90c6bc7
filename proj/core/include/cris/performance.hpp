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

#ifndef CRIS_PERFORMANCE_HPP
#define CRIS_PERFORMANCE_HPP

#include <cris/channel.hpp>
#include <cris/types.hpp>

#include <cstdint>
#include <span>

namespace cris
{
    // RIS phase shifts, kept wrapped to [0, 2pi).
    class PhaseProfile
    {
    public:
        PhaseProfile() = default;
        explicit PhaseProfile(RVector angles);

        static PhaseProfile zeros(std::size_t n);
        static PhaseProfile uniform_random(std::size_t n, std::uint64_t seed);

        std::size_t size() const { return static_cast<std::size_t>(angles_.size()); }
        const RVector &angles() const { return angles_; }
        double operator[](std::size_t n) const { return angles_[static_cast<Eigen::Index>(n)]; }
        void set(std::size_t n, double angle);

        // Diagonal of Phi: exp(j * phi_n).
        CVector diagonal() const;

        bool operator==(const PhaseProfile &other) const { return angles_ == other.angles_; }

    private:
        RVector angles_;
    };

    struct SeReport
    {
        double se_mc = 0.0;
        double se_mc_stderr = 0.0;
        double se_ub = 0.0;
        double se_ub_highsnr = 0.0;
        std::size_t num_trials = 0;

        bool operator==(const SeReport &) const = default;
    };

    // f = (g + d) / ||g + d||. Throws DegenerateChannel when g + d = 0.
    CVector mrt_beamformer(const CVector &g, const CVector &d);

    // Effective cascaded gains d = H^H Phi^H h, so that d^H = h^H Phi H.
    CVector cascaded_gain(const ChannelRealization &realization, const PhaseProfile &phases);

    double instantaneous_se(const ChannelRealization &realization, const PhaseProfile &phases, double snr);

    // Coherent LoS sum |h_bar_i^H Phi h_bar_b|^2.
    double los_gain(const PhaseProfile &phases, const CVector &h_bar_b, const CVector &h_bar_i);

    // Argument s * (eta M |h_bar_i^H Phi h_bar_b|^2 + c) of the closed-form bound.
    double bound_argument(const DerivedCoefficients &coeffs, const PhaseProfile &phases, const CVector &h_bar_b,
                          const CVector &h_bar_i, std::size_t m, double snr);

    // log2(1 + s (eta M |h_bar_i^H Phi h_bar_b|^2 + c)).
    double ergodic_se_bound(const DerivedCoefficients &coeffs, const PhaseProfile &phases, const CVector &h_bar_b,
                        const CVector &h_bar_i, std::size_t m, double snr);

    struct SumBound
    {
        double value = 0.0;
        // Set when high_snr was requested but some argument is below high_snr_threshold.
        bool low_snr_warning = false;
    };

    inline constexpr double high_snr_threshold = 10.0;

    // Sum over users of log2(x_i) (high_snr) or log2(1 + x_i), with x_i the bound arguments.
    SumBound sum_se_upper_bound(std::span<const double> arguments, bool high_snr);

    // Monte Carlo ergodic SE of one user. Trial t uses seed mix_seed(seed, t), so configurations compared with the
    // same seed see the same fading draws.
    SeReport ergodic_se_mc(const Scenario &scenario, const CascadeGeometry &geometry, const PhaseProfile &phases,
                           User user, std::size_t num_trials, std::uint64_t seed,
                           const SamplingOptions &options = {});

    // Per-realization split of ||d + g||^2 into its independent parts. Each field's mean is one term of the
    // closed-form second moment; the cross terms between parts average to zero.
    struct CascadePowerTerms
    {
        double los = 0.0;       // ||LoS h^H Phi LoS H||^2, mean eta M |h_bar^H Phi h_bar_b|^2
        double nlos_nlos = 0.0; // mean x1
        double los_nlos = 0.0;  // LoS RIS-user, NLoS BS-RIS; mean x2
        double nlos_los = 0.0;  // NLoS RIS-user, LoS BS-RIS; mean x3
        double direct = 0.0;    // ||g||^2, mean sigma^2 M
        double total = 0.0;     // ||d + g||^2
    };

    CascadePowerTerms cascade_power_terms(const ChannelRealization &realization, const PhaseProfile &phases);

    // Mean and standard error of a sample (Neumaier-compensated sums).
    struct SampleStats
    {
        double mean = 0.0;
        double std_error = 0.0;
    };

    SampleStats sample_stats(std::span<const double> values);

} // namespace cris

#endif
