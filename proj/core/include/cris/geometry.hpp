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

#ifndef CRIS_GEOMETRY_HPP
#define CRIS_GEOMETRY_HPP

#include <cris/types.hpp>

#include <cstdint>
#include <vector>

namespace cris
{
    enum class ArrayKind
    {
        ula,
        uca,
        upa
    };

    // Geometry of one antenna panel.
    //
    // A UCA (cylindrical RIS) stacks `layers_nc` rings of `ring_nr` elements; element n = layer * ring_nr + i,
    // matching the Kronecker order layer (x) ring. A UPA stacks `upa_rows` rows of `upa_cols` elements in the
    // same row-major order. Spacing and wavelength are in meters; only their ratio enters the phases.
    struct ArrayDescriptor
    {
        ArrayKind kind = ArrayKind::uca;
        std::size_t num_elements_m = 1; // ULA
        std::size_t layers_nc = 1;      // UCA
        std::size_t ring_nr = 2;        // UCA
        std::size_t upa_rows = 1;       // UPA
        std::size_t upa_cols = 1;       // UPA
        double spacing_d = 0.05;
        double wavelength = 0.1;

        static ArrayDescriptor ula(std::size_t m, double spacing, double wavelength);
        static ArrayDescriptor uca(std::size_t layers, std::size_t ring, double spacing, double wavelength);
        static ArrayDescriptor upa(std::size_t rows, std::size_t cols, double spacing, double wavelength);

        // Planar panel with half the element count of `cylinder`, laid out as layers x ring/2.
        static ArrayDescriptor upa_baseline(const ArrayDescriptor &cylinder);

        std::size_t size() const;

        // Throws InvalidInput when counts or lengths are out of range.
        void validate() const;
    };

    // Angles in radians. Azimuths are wrapped to [0, 2pi) by normalized(); elevations are polar angles in [0, pi].
    struct AngleSet
    {
        double azimuth_aoa_br = 0.0;
        double elevation_aoa_br = pi / 2;
        double aod_bs = pi / 2;
        double azimuth_aod_ru = 0.0;
        double elevation_aod_ru = pi / 2;
        double azimuth_aod_rv = 0.0;
        double elevation_aod_rv = pi / 2;

        AngleSet normalized() const;
    };

    // Per-element 0/1 activation (array activation vector).
    struct VisibilityMask
    {
        std::vector<std::uint8_t> bits;

        std::size_t size() const { return bits.size(); }
        std::size_t count() const;
        bool operator[](std::size_t n) const { return bits[n] != 0; }
        RVector as_real() const;
        static VisibilityMask all_ones(std::size_t n);
        bool operator==(const VisibilityMask &) const = default;
    };

    // Integer inner product of two masks.
    std::size_t overlap(const VisibilityMask &a, const VisibilityMask &b);

    enum class ElementLabel : std::uint8_t
    {
        uav_specific,
        itv_specific,
        shared,
        inactive
    };

    struct ElementClassification
    {
        std::vector<ElementLabel> labels;

        std::size_t size() const { return labels.size(); }
        std::size_t count(ElementLabel label) const;
        std::vector<std::size_t> indices(ElementLabel label) const;
    };

    CVector ula_arv(std::size_t m, double theta, double spacing, double wavelength);
    CVector uca_arv(const ArrayDescriptor &desc, double phi, double theta);

    // Planar panel in the x-z plane: column c sits at x = c*d, row r at z = r*d, phase referenced to element (0,0).
    // Broadside is azimuth pi/2.
    CVector upa_arv(const ArrayDescriptor &desc, double phi, double theta);

    // Visible region of a transceiver at azimuth `phi`. Ring element i is visible when cos(phi - 2*pi*i/N_r) >= 0;
    // the cos = 0 boundary counts as visible. Planar panels are fully visible.
    VisibilityMask visibility_mask(const ArrayDescriptor &desc, double phi);

    ElementClassification classify_elements(const VisibilityMask &mask_bs, const VisibilityMask &mask_uav,
                                             const VisibilityMask &mask_itv);

} // namespace cris

#endif
