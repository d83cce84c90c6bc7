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

#ifndef CRIS_OPTIMIZER_HPP
#define CRIS_OPTIMIZER_HPP

#include <cris/channel.hpp>
#include <cris/geometry.hpp>
#include <cris/performance.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace cris
{
    // How the two per-user factors of the product objective are scaled. Any positive per-user scale leaves the
    // maximizers unchanged; it only sets the magnitude the fixed step size acts on.
    enum class ObjectiveWeighting
    {
        snr,  // s_i (f_i + c_i): the high-SNR bound arguments, log2 of the product is the sum-SE bound
        unit, // f_i + c_i
    };

    // Immutable data of one phase-design problem.
    //
    // rho_i = conj(h_bar_i) (.) h_bar_b, so f_i = eta_i M |sum_n rho_i[n] e^{j phi_n}|^2 and A_i = rho_i rho_i^H.
    struct ObjectiveContext
    {
        CVector rho_u;
        CVector rho_v;
        DerivedCoefficients coeffs_u;
        DerivedCoefficients coeffs_v;
        std::size_t m = 1;
        double weight_u = 1.0;
        double weight_v = 1.0;
        double snr_u = 1.0;
        double snr_v = 1.0;
        ElementClassification classification;
        std::vector<std::size_t> shared;   // indices labeled shared
        std::vector<std::size_t> specific; // indices labeled uav_specific or itv_specific, ascending
        std::size_t visible = 0;           // elements seen by the BS and at least one user

        std::size_t size() const { return static_cast<std::size_t>(rho_u.size()); }
        const CVector &rho(User u) const { return u == User::uav ? rho_u : rho_v; }
        const DerivedCoefficients &coeffs(User u) const { return u == User::uav ? coeffs_u : coeffs_v; }
        double weight(User u) const { return u == User::uav ? weight_u : weight_v; }

        // Entry (s, n) of A_i.
        Complex a_entry(User u, std::size_t s, std::size_t n) const;
    };

    ObjectiveContext make_objective_context(const CVector &h_bar_b, const CVector &h_bar_u, const CVector &h_bar_v,
                                            const DerivedCoefficients &coeffs_u, const DerivedCoefficients &coeffs_v,
                                            std::size_t m, ElementClassification classification,
                                            std::array<double, 2> weights = {1.0, 1.0},
                                            std::array<double, 2> snr = {1.0, 1.0});

    ObjectiveContext make_objective_context(const Scenario &scenario, const CascadeGeometry &geometry,
                                            ObjectiveWeighting weighting = ObjectiveWeighting::snr);

    // f_i = eta_i M tau^H A_i tau.
    double user_gain(const PhaseProfile &phases, const ObjectiveContext &ctx, User user);

    // F = -prod_i w_i (f_i + c_i).
    double objective(const PhaseProfile &phases, const ObjectiveContext &ctx);

    // dF/dphi_n for each n in `elements`, in the given order.
    RVector gradient(const PhaseProfile &phases, const ObjectiveContext &ctx, std::span<const std::size_t> elements);

    // dF/dphi_n over ctx.shared.
    RVector gradient_shared(const PhaseProfile &phases, const ObjectiveContext &ctx);

    struct ClosedFormUpdate
    {
        double phase = 0.0;
        bool degenerate = false; // the other elements sum to zero; any phase is optimal and 0 is returned
        bool no_op = false;      // rho_i[n] = 0, the element does not reach user i; phase is left unchanged
    };

    // Phase of element n that aligns its term with the sum of all other terms of user i.
    ClosedFormUpdate closed_form_specific(const PhaseProfile &phases, const ObjectiveContext &ctx, std::size_t n,
                                          User user);

    // Number of elements N used in the step size k * 10^-(log2 N + t).
    enum class StepScale
    {
        visible_elements, // elements that reach the BS and a user
        total_elements,   // all panel elements
    };

    struct OptimizerOptions
    {
        double step_k = 1.0;
        double step_t = -4.0;
        StepScale step_scale = StepScale::total_elements;
        std::size_t max_iterations = 100000;
        double tolerance = 1e-6; // on |dF| / |F| between iterations
        std::size_t restore_after = 5;
        // A step is accepted when the product rises by at least armijo * eps * |grad|^2.
        double armijo = 0.3;
        double sweep_tolerance = 1e-9;
        std::size_t max_sweeps = 1000;
    };

    struct OptimizerReport
    {
        PhaseProfile final_phases;
        std::vector<double> objective_trace; // -F = prod_i w_i (f_i + c_i), initial value then one per iteration
        std::size_t gradient_iterations = 0;
        std::size_t closed_form_updates = 0;
        std::size_t closed_form_sweeps = 0;
        std::size_t rejected_steps = 0;
        std::size_t degenerate_alignments = 0;
        bool converged = false;
        double step_size = 0.0;
        double sum_se_ub = 0.0;        // sum of per-user closed-form bounds
        double sum_se_ub_highsnr = 0.0; // sum of log2 of the bound arguments
        std::array<double, 2> per_user_se_ub{};
    };

    enum class OptimizerMode
    {
        hybrid,        // gradient on shared elements, closed form on user-specific ones
        full_gradient, // gradient on every element, no closed-form updates
    };

    double step_size(const ObjectiveContext &ctx, const OptimizerOptions &options);

    OptimizerReport optimize(const ObjectiveContext &ctx, PhaseProfile initial, const OptimizerOptions &options,
                             OptimizerMode mode);

    // Hybrid design on the scenario's RIS, starting from phases drawn uniformly from init_seed.
    OptimizerReport hybrid_optimize(const Scenario &scenario, std::uint64_t init_seed, const OptimizerOptions &options = {});

    // Gradient-only baseline; the scenario's RIS must be a UPA.
    OptimizerReport upa_optimize(const Scenario &scenario, std::uint64_t init_seed, const OptimizerOptions &options = {});

} // namespace cris

#endif
