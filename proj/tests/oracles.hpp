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

#ifndef CRIS_TESTS_ORACLES_HPP
#define CRIS_TESTS_ORACLES_HPP

// Scalar reference evaluations used as test oracles. They are written element by element from the model
// definitions and share no code with the library.

#include <complex>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

namespace oracle
{
    using cplx = std::complex<double>;
    constexpr double pi = 3.14159265358979323846;

    // Ring element i of layer l on a cylinder, transceiver at (phi, theta).
    inline cplx uca_entry(std::size_t l, std::size_t i, std::size_t nr, double phi, double theta, double d,
                          double lambda)
    {
        const double layer_phase = 2.0 * pi * d * static_cast<double>(l) * std::cos(theta) / lambda;
        const double mu = pi * d * std::sin(theta) / (2.0 * lambda * std::sin(pi / static_cast<double>(nr)));
        const double omega = 2.0 * pi * static_cast<double>(i) / static_cast<double>(nr);
        return std::exp(cplx(0.0, layer_phase + mu * std::cos(phi - omega)));
    }

    inline bool ring_visible(std::size_t i, std::size_t nr, double phi)
    {
        const double omega = 2.0 * pi * static_cast<double>(i) / static_cast<double>(nr);
        return std::cos(phi - omega) >= -1e-12;
    }

    // Plane wave phase at a planar element located at (x, z) = (c d, r d).
    inline cplx upa_entry(std::size_t r, std::size_t c, double phi, double theta, double d, double lambda)
    {
        const double x = static_cast<double>(c) * d;
        const double z = static_cast<double>(r) * d;
        const double kx = std::sin(theta) * std::cos(phi);
        const double kz = std::cos(theta);
        return std::exp(cplx(0.0, 2.0 * pi / lambda * (x * kx + z * kz)));
    }

    struct Coefficients
    {
        double eta;
        double chi;
        double c;
        double lambda2;
    };

    // Bound coefficients written directly in terms of the Rician factors.
    inline Coefficients coefficients(double kb, double ki, double bb, double bi, double direct_var, std::size_t m,
                                     std::size_t overlap)
    {
        Coefficients out{};
        const double den = (kb + 1.0) * (ki + 1.0);
        out.eta = bb * bi * kb * ki / den;
        out.chi = bb * bi * (kb + ki + 1.0) / den;
        out.c = out.chi * static_cast<double>(m * overlap) + direct_var * static_cast<double>(m);
        out.lambda2 = bb * bi / den;
        return out;
    }

    // |sum_n conj(hi_n) e^{j phi_n} hb_n|^2
    inline double coherent_gain(const std::vector<cplx> &hb, const std::vector<cplx> &hi, const std::vector<double> &phi)
    {
        cplx acc = 0.0;
        for (std::size_t n = 0; n < hb.size(); ++n)
            acc += std::conj(hi[n]) * std::exp(cplx(0.0, phi[n])) * hb[n];
        return std::norm(acc);
    }

    inline std::vector<cplx> random_unit_vector(std::size_t n, std::mt19937_64 &rng, double zero_prob = 0.0)
    {
        std::uniform_real_distribution<double> u(0.0, 2.0 * pi);
        std::bernoulli_distribution zero(zero_prob);
        std::vector<cplx> v(n);
        for (auto &x : v)
            x = zero(rng) ? cplx{} : std::exp(cplx(0.0, u(rng)));
        return v;
    }

} // namespace oracle

#endif
