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

#include <cris/geometry.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace cris
{
    namespace
    {
        // Angular slack for the cos = 0 visibility boundary; rounding in 2*pi*i/N_r is ~1e-15.
        constexpr double boundary_slack = 1e-9;

        void require_finite(double value, const char *name)
        {
            if (!std::isfinite(value))
                throw InvalidInput(std::string(name) + " must be finite");
        }

        std::size_t ring_size_checked(const ArrayDescriptor &desc)
        {
            if (desc.ring_nr < 2)
                throw InvalidInput("UCA ring needs at least 2 elements (got " + std::to_string(desc.ring_nr) + ")");
            return desc.ring_nr;
        }
    } // namespace

    ArrayDescriptor ArrayDescriptor::ula(std::size_t m, double spacing, double wavelength)
    {
        ArrayDescriptor d;
        d.kind = ArrayKind::ula;
        d.num_elements_m = m;
        d.spacing_d = spacing;
        d.wavelength = wavelength;
        d.validate();
        return d;
    }

    ArrayDescriptor ArrayDescriptor::uca(std::size_t layers, std::size_t ring, double spacing, double wavelength)
    {
        ArrayDescriptor d;
        d.kind = ArrayKind::uca;
        d.layers_nc = layers;
        d.ring_nr = ring;
        d.spacing_d = spacing;
        d.wavelength = wavelength;
        d.validate();
        return d;
    }

    ArrayDescriptor ArrayDescriptor::upa(std::size_t rows, std::size_t cols, double spacing, double wavelength)
    {
        ArrayDescriptor d;
        d.kind = ArrayKind::upa;
        d.upa_rows = rows;
        d.upa_cols = cols;
        d.spacing_d = spacing;
        d.wavelength = wavelength;
        d.validate();
        return d;
    }

    ArrayDescriptor ArrayDescriptor::upa_baseline(const ArrayDescriptor &cylinder)
    {
        if (cylinder.kind != ArrayKind::uca)
            throw InvalidInput("UPA baseline is derived from a UCA descriptor");
        if (cylinder.ring_nr % 2 != 0)
            throw InvalidInput("UPA baseline needs an even ring size to hold N/2 elements");
        return upa(cylinder.layers_nc, cylinder.ring_nr / 2, cylinder.spacing_d, cylinder.wavelength);
    }

    std::size_t ArrayDescriptor::size() const
    {
        switch (kind)
        {
        case ArrayKind::ula:
            return num_elements_m;
        case ArrayKind::uca:
            return layers_nc * ring_nr;
        case ArrayKind::upa:
            return upa_rows * upa_cols;
        }
        return 0;
    }

    void ArrayDescriptor::validate() const
    {
        if (!(spacing_d > 0.0) || !std::isfinite(spacing_d))
            throw InvalidInput("element spacing must be positive");
        if (!(wavelength > 0.0) || !std::isfinite(wavelength))
            throw InvalidInput("wavelength must be positive");
        switch (kind)
        {
        case ArrayKind::ula:
            if (num_elements_m < 1)
                throw InvalidInput("ULA needs at least one element");
            break;
        case ArrayKind::uca:
            if (layers_nc < 1)
                throw InvalidInput("UCA needs at least one layer");
            ring_size_checked(*this);
            break;
        case ArrayKind::upa:
            if (upa_rows < 1 || upa_cols < 1)
                throw InvalidInput("UPA needs at least one row and one column");
            break;
        }
    }

    AngleSet AngleSet::normalized() const
    {
        AngleSet a = *this;
        for (double v : {a.azimuth_aoa_br, a.elevation_aoa_br, a.aod_bs, a.azimuth_aod_ru, a.elevation_aod_ru,
                         a.azimuth_aod_rv, a.elevation_aod_rv})
            require_finite(v, "angle");
        a.azimuth_aoa_br = wrap_angle(a.azimuth_aoa_br);
        a.azimuth_aod_ru = wrap_angle(a.azimuth_aod_ru);
        a.azimuth_aod_rv = wrap_angle(a.azimuth_aod_rv);
        for (double e : {a.elevation_aoa_br, a.elevation_aod_ru, a.elevation_aod_rv})
            if (e < 0.0 || e > pi)
                throw InvalidInput("elevation angles must lie in [0, pi]");
        return a;
    }

    std::size_t VisibilityMask::count() const
    {
        return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
    }

    RVector VisibilityMask::as_real() const
    {
        RVector r(static_cast<Eigen::Index>(bits.size()));
        for (std::size_t n = 0; n < bits.size(); ++n)
            r[static_cast<Eigen::Index>(n)] = bits[n] ? 1.0 : 0.0;
        return r;
    }

    VisibilityMask VisibilityMask::all_ones(std::size_t n)
    {
        return VisibilityMask{std::vector<std::uint8_t>(n, 1)};
    }

    std::size_t overlap(const VisibilityMask &a, const VisibilityMask &b)
    {
        if (a.size() != b.size())
            throw InvalidInput("mask length mismatch");
        std::size_t n = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            n += (a.bits[i] && b.bits[i]) ? 1 : 0;
        return n;
    }

    std::size_t ElementClassification::count(ElementLabel label) const
    {
        return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), label));
    }

    std::vector<std::size_t> ElementClassification::indices(ElementLabel label) const
    {
        std::vector<std::size_t> out;
        for (std::size_t n = 0; n < labels.size(); ++n)
            if (labels[n] == label)
                out.push_back(n);
        return out;
    }

    CVector ula_arv(std::size_t m, double theta, double spacing, double wavelength)
    {
        require_finite(theta, "ULA angle");
        if (m < 1)
            throw InvalidInput("ULA needs at least one element");
        if (!(spacing > 0.0) || !(wavelength > 0.0))
            throw InvalidInput("ULA spacing and wavelength must be positive");

        const double step = two_pi * spacing * std::cos(theta) / wavelength;
        CVector a(static_cast<Eigen::Index>(m));
        for (std::size_t k = 0; k < m; ++k)
            a[static_cast<Eigen::Index>(k)] = std::polar(1.0, step * static_cast<double>(k));
        return a;
    }

    CVector uca_arv(const ArrayDescriptor &desc, double phi, double theta)
    {
        if (desc.kind != ArrayKind::uca)
            throw InvalidInput("uca_arv needs a UCA descriptor");
        require_finite(phi, "UCA azimuth");
        require_finite(theta, "UCA elevation");
        desc.validate();

        const std::size_t nr = desc.ring_nr;
        const double mu = pi * desc.spacing_d * std::sin(theta) / (2.0 * desc.wavelength * std::sin(pi / static_cast<double>(nr)));

        CVector ring(static_cast<Eigen::Index>(nr));
        for (std::size_t i = 0; i < nr; ++i)
        {
            const double omega = two_pi * static_cast<double>(i) / static_cast<double>(nr);
            ring[static_cast<Eigen::Index>(i)] = std::polar(1.0, mu * std::cos(phi - omega));
        }

        const CVector layer = ula_arv(desc.layers_nc, theta, desc.spacing_d, desc.wavelength);
        CVector c(static_cast<Eigen::Index>(desc.size()));
        for (Eigen::Index l = 0; l < layer.size(); ++l)
            c.segment(l * ring.size(), ring.size()) = layer[l] * ring;
        return c;
    }

    CVector upa_arv(const ArrayDescriptor &desc, double phi, double theta)
    {
        if (desc.kind != ArrayKind::upa)
            throw InvalidInput("upa_arv needs a UPA descriptor");
        require_finite(phi, "UPA azimuth");
        require_finite(theta, "UPA elevation");
        desc.validate();

        const double k = two_pi * desc.spacing_d / desc.wavelength;
        const double row_step = k * std::cos(theta);
        const double col_step = k * std::sin(theta) * std::cos(phi);

        CVector a(static_cast<Eigen::Index>(desc.size()));
        Eigen::Index n = 0;
        for (std::size_t r = 0; r < desc.upa_rows; ++r)
            for (std::size_t c = 0; c < desc.upa_cols; ++c)
                a[n++] = std::polar(1.0, row_step * static_cast<double>(r) + col_step * static_cast<double>(c));
        return a;
    }

    VisibilityMask visibility_mask(const ArrayDescriptor &desc, double phi)
    {
        require_finite(phi, "visibility azimuth");
        if (desc.kind != ArrayKind::uca)
            return VisibilityMask::all_ones(desc.size());

        const std::size_t nr = ring_size_checked(desc);
        std::vector<std::uint8_t> ring(nr);
        for (std::size_t i = 0; i < nr; ++i)
        {
            const double omega = two_pi * static_cast<double>(i) / static_cast<double>(nr);
            const double diff = std::remainder(phi - omega, two_pi);
            ring[i] = std::abs(diff) <= pi / 2 + boundary_slack ? 1 : 0;
        }

        VisibilityMask mask;
        mask.bits.reserve(desc.size());
        for (std::size_t l = 0; l < desc.layers_nc; ++l)
            mask.bits.insert(mask.bits.end(), ring.begin(), ring.end());
        return mask;
    }

    ElementClassification classify_elements(const VisibilityMask &mask_bs, const VisibilityMask &mask_uav,
                                            const VisibilityMask &mask_itv)
    {
        if (mask_bs.size() != mask_uav.size() || mask_bs.size() != mask_itv.size())
            throw InvalidInput("classify_elements: mask lengths differ");

        ElementClassification out;
        out.labels.resize(mask_bs.size());
        for (std::size_t n = 0; n < mask_bs.size(); ++n)
        {
            const bool b = mask_bs[n], u = mask_uav[n], v = mask_itv[n];
            if (!b || (!u && !v))
                out.labels[n] = ElementLabel::inactive;
            else if (u && v)
                out.labels[n] = ElementLabel::shared;
            else
                out.labels[n] = u ? ElementLabel::uav_specific : ElementLabel::itv_specific;
        }
        return out;
    }

} // namespace cris
