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

#include <cris/optimizer.hpp>

#include <cmath>
#include <numeric>

namespace cris
{
    namespace
    {
        // Sums below this fraction of sum_n |rho_n| are treated as zero when taking Arg.
        constexpr double degenerate_ratio = 1e-12;

        Complex coherent_sum(const CVector &rho, const RVector &angles)
        {
            Complex z{0.0, 0.0};
            for (Eigen::Index n = 0; n < rho.size(); ++n)
                if (rho[n] != Complex{})
                    z += rho[n] * std::polar(1.0, angles[n]);
            return z;
        }

        double abs_sum(const CVector &rho)
        {
            return rho.cwiseAbs().sum();
        }

        // Running coherent sums z_i, kept in step with the phases while the optimizer edits them.
        struct State
        {
            RVector angles;
            Complex z_u;
            Complex z_v;

            State(const ObjectiveContext &ctx, const RVector &a)
                : angles(a), z_u(coherent_sum(ctx.rho_u, a)), z_v(coherent_sum(ctx.rho_v, a)) {}

            Complex &z(User u) { return u == User::uav ? z_u : z_v; }

            double factor(const ObjectiveContext &ctx, User u, Complex zi) const
            {
                const DerivedCoefficients &c = ctx.coeffs(u);
                const double f = c.eta * static_cast<double>(ctx.m) * std::norm(zi);
                return ctx.weight(u) * (f + c.c_const);
            }

            double product(const ObjectiveContext &ctx) const
            {
                return factor(ctx, User::uav, z_u) * factor(ctx, User::itv, z_v);
            }
        };

        User user_of(ElementLabel label)
        {
            return label == ElementLabel::uav_specific ? User::uav : User::itv;
        }

        struct SweepResult
        {
            std::size_t updates = 0;
            std::size_t sweeps = 0;
            std::size_t degenerate = 0;
        };

        // Gauss-Seidel closed-form updates in ascending index order until no phase moves by more than the
        // sweep tolerance.
        SweepResult closed_form_sweeps(State &state, const ObjectiveContext &ctx, const OptimizerOptions &options)
        {
            SweepResult res;
            if (ctx.specific.empty())
                return res;
            const double scale_u = abs_sum(ctx.rho_u);
            const double scale_v = abs_sum(ctx.rho_v);

            for (std::size_t sweep = 0; sweep < options.max_sweeps; ++sweep)
            {
                double max_move = 0.0;
                for (std::size_t n : ctx.specific)
                {
                    const User u = user_of(ctx.classification.labels[n]);
                    const auto idx = static_cast<Eigen::Index>(n);
                    const Complex rho = ctx.rho(u)[idx];
                    if (rho == Complex{})
                        continue;
                    Complex &z = state.z(u);
                    const double old_phase = state.angles[idx];
                    const Complex rest = z - rho * std::polar(1.0, old_phase);
                    double new_phase = 0.0;
                    if (std::abs(rest) <= degenerate_ratio * (u == User::uav ? scale_u : scale_v))
                        ++res.degenerate;
                    else
                        new_phase = wrap_angle(std::arg(rest) - std::arg(rho));
                    state.angles[idx] = new_phase;
                    z = rest + rho * std::polar(1.0, new_phase);
                    max_move = std::max(max_move, std::abs(std::remainder(new_phase - old_phase, two_pi)));
                    ++res.updates;
                }
                ++res.sweeps;
                if (max_move <= options.sweep_tolerance)
                    break;
            }
            // Refresh the running sums so rounding does not accumulate across iterations.
            state.z_u = coherent_sum(ctx.rho_u, state.angles);
            state.z_v = coherent_sum(ctx.rho_v, state.angles);
            return res;
        }

        RVector gradient_at(const State &state, const ObjectiveContext &ctx, std::span<const std::size_t> elements)
        {
            const double md = static_cast<double>(ctx.m);
            const double pu = state.factor(ctx, User::uav, state.z_u);
            const double pv = state.factor(ctx, User::itv, state.z_v);
            const double ku = 2.0 * ctx.coeffs_u.eta * md * ctx.weight_u;
            const double kv = 2.0 * ctx.coeffs_v.eta * md * ctx.weight_v;

            RVector g(static_cast<Eigen::Index>(elements.size()));
            for (std::size_t k = 0; k < elements.size(); ++k)
            {
                const auto n = static_cast<Eigen::Index>(elements[k]);
                const Complex e = std::polar(1.0, state.angles[n]);
                // d|z|^2/dphi_n = 2 Im{conj(rho_n e^{j phi_n}) z}; the s = n term of z contributes nothing.
                const double dfu = ku * std::imag(std::conj(ctx.rho_u[n] * e) * state.z_u);
                const double dfv = kv * std::imag(std::conj(ctx.rho_v[n] * e) * state.z_v);
                g[static_cast<Eigen::Index>(k)] = -(dfu * pv + pu * dfv);
            }
            return g;
        }

        void fill_bounds(OptimizerReport &rep, const ObjectiveContext &ctx)
        {
            const auto arg = [&](User u, double snr) {
                return snr * (user_gain(rep.final_phases, ctx, u) + ctx.coeffs(u).c_const);
            };
            const std::array<double, 2> x{arg(User::uav, ctx.snr_u), arg(User::itv, ctx.snr_v)};
            rep.per_user_se_ub = {std::log2(1.0 + x[0]), std::log2(1.0 + x[1])};
            rep.sum_se_ub = sum_se_upper_bound(x, false).value;
            rep.sum_se_ub_highsnr = sum_se_upper_bound(x, true).value;
        }
    } // namespace

    Complex ObjectiveContext::a_entry(User u, std::size_t s, std::size_t n) const
    {
        const CVector &r = rho(u);
        return r[static_cast<Eigen::Index>(s)] * std::conj(r[static_cast<Eigen::Index>(n)]);
    }

    ObjectiveContext make_objective_context(const CVector &h_bar_b, const CVector &h_bar_u, const CVector &h_bar_v,
                                            const DerivedCoefficients &coeffs_u, const DerivedCoefficients &coeffs_v,
                                            std::size_t m, ElementClassification classification,
                                            std::array<double, 2> weights, std::array<double, 2> snr)
    {
        const Eigen::Index n = h_bar_b.size();
        if (h_bar_u.size() != n || h_bar_v.size() != n || static_cast<Eigen::Index>(classification.size()) != n)
            throw InvalidInput("make_objective_context: dimension mismatch");
        if (!(weights[0] > 0.0) || !(weights[1] > 0.0))
            throw InvalidInput("objective weights must be positive");

        ObjectiveContext ctx;
        ctx.rho_u = h_bar_u.conjugate().cwiseProduct(h_bar_b);
        ctx.rho_v = h_bar_v.conjugate().cwiseProduct(h_bar_b);
        ctx.coeffs_u = coeffs_u;
        ctx.coeffs_v = coeffs_v;
        ctx.m = m;
        ctx.weight_u = weights[0];
        ctx.weight_v = weights[1];
        ctx.snr_u = snr[0];
        ctx.snr_v = snr[1];
        ctx.classification = std::move(classification);
        for (std::size_t k = 0; k < ctx.classification.size(); ++k)
        {
            switch (ctx.classification.labels[k])
            {
            case ElementLabel::shared:
                ctx.shared.push_back(k);
                ++ctx.visible;
                break;
            case ElementLabel::uav_specific:
            case ElementLabel::itv_specific:
                ctx.specific.push_back(k);
                ++ctx.visible;
                break;
            case ElementLabel::inactive:
                break;
            }
        }
        return ctx;
    }

    ObjectiveContext make_objective_context(const Scenario &scenario, const CascadeGeometry &geometry,
                                            ObjectiveWeighting weighting)
    {
        const std::array<double, 2> snr{scenario.uav_link.snr_s(), scenario.itv_link.snr_s()};
        const std::array<double, 2> weights = weighting == ObjectiveWeighting::snr ? snr : std::array{1.0, 1.0};
        return make_objective_context(geometry.h_bar_b, geometry.h_bar_u, geometry.h_bar_v, geometry.coeffs_u,
                                      geometry.coeffs_v, scenario.bs_antennas, geometry.classification, weights, snr);
    }

    double user_gain(const PhaseProfile &phases, const ObjectiveContext &ctx, User user)
    {
        if (phases.size() != ctx.size())
            throw InvalidInput("user_gain: phase profile length mismatch");
        const Complex z = coherent_sum(ctx.rho(user), phases.angles());
        return ctx.coeffs(user).eta * static_cast<double>(ctx.m) * std::norm(z);
    }

    double objective(const PhaseProfile &phases, const ObjectiveContext &ctx)
    {
        if (phases.size() != ctx.size())
            throw InvalidInput("objective: phase profile length mismatch");
        return -State(ctx, phases.angles()).product(ctx);
    }

    RVector gradient(const PhaseProfile &phases, const ObjectiveContext &ctx, std::span<const std::size_t> elements)
    {
        if (phases.size() != ctx.size())
            throw InvalidInput("gradient: phase profile length mismatch");
        for (std::size_t n : elements)
            if (n >= ctx.size())
                throw InvalidInput("gradient: element index out of range");
        return gradient_at(State(ctx, phases.angles()), ctx, elements);
    }

    RVector gradient_shared(const PhaseProfile &phases, const ObjectiveContext &ctx)
    {
        return gradient(phases, ctx, ctx.shared);
    }

    ClosedFormUpdate closed_form_specific(const PhaseProfile &phases, const ObjectiveContext &ctx, std::size_t n,
                                          User user)
    {
        if (phases.size() != ctx.size() || n >= ctx.size())
            throw InvalidInput("closed_form_specific: index or length mismatch");

        const CVector &rho = ctx.rho(user);
        const auto idx = static_cast<Eigen::Index>(n);
        ClosedFormUpdate out;
        if (rho[idx] == Complex{})
        {
            out.phase = phases[n];
            out.no_op = true;
            return out;
        }

        Complex rest{0.0, 0.0};
        for (Eigen::Index k = 0; k < rho.size(); ++k)
            if (k != idx)
                rest += rho[k] * std::polar(1.0, phases.angles()[k]);

        if (std::abs(rest) <= degenerate_ratio * abs_sum(rho))
        {
            out.degenerate = true;
            out.phase = 0.0;
            return out;
        }
        out.phase = wrap_angle(std::arg(rest / rho[idx]));
        return out;
    }

    double step_size(const ObjectiveContext &ctx, const OptimizerOptions &options)
    {
        const std::size_t count = options.step_scale == StepScale::visible_elements ? ctx.visible : ctx.size();
        const double n = static_cast<double>(std::max<std::size_t>(count, 1));
        return options.step_k * std::pow(10.0, -(std::log2(n) + options.step_t));
    }

    OptimizerReport optimize(const ObjectiveContext &ctx, PhaseProfile initial, const OptimizerOptions &options,
                             OptimizerMode mode)
    {
        if (initial.size() != ctx.size())
            throw InvalidInput("optimize: initial phase profile length mismatch");
        if (ctx.visible == 0)
            throw InvalidInput("optimize: no element is visible to the BS and a user");

        std::vector<std::size_t> all_elements;
        if (mode == OptimizerMode::full_gradient)
        {
            all_elements.resize(ctx.size());
            std::iota(all_elements.begin(), all_elements.end(), std::size_t{0});
        }
        const std::span<const std::size_t> active =
            mode == OptimizerMode::hybrid ? std::span<const std::size_t>(ctx.shared) : std::span<const std::size_t>(all_elements);

        OptimizerReport rep;
        State state(ctx, initial.angles());

        const auto sweep = [&] {
            if (mode != OptimizerMode::hybrid)
                return;
            const SweepResult s = closed_form_sweeps(state, ctx, options);
            rep.closed_form_updates += s.updates;
            rep.closed_form_sweeps += s.sweeps;
            rep.degenerate_alignments += s.degenerate;
        };

        sweep();
        double prod = state.product(ctx);
        rep.objective_trace.push_back(prod);

        const double eps0 = step_size(ctx, options);
        rep.step_size = eps0;
        double eps = eps0;
        std::size_t streak = 0;
        // Halving below this leaves every phase unchanged in double precision.
        const double eps_floor = eps0 * 0x1p-60;

        if (active.empty())
            rep.converged = true;

        while (!rep.converged && rep.gradient_iterations < options.max_iterations)
        {
            const RVector g = gradient_at(state, ctx, active);
            const double g2 = g.squaredNorm();

            State trial = state;
            bool accepted = false;
            while (eps >= eps_floor)
            {
                trial.angles = state.angles;
                for (std::size_t k = 0; k < active.size(); ++k)
                {
                    const auto n = static_cast<Eigen::Index>(active[k]);
                    trial.angles[n] = wrap_angle(state.angles[n] - eps * g[static_cast<Eigen::Index>(k)]);
                }
                trial.z_u = coherent_sum(ctx.rho_u, trial.angles);
                trial.z_v = coherent_sum(ctx.rho_v, trial.angles);
                if (trial.product(ctx) - prod >= options.armijo * eps * g2)
                {
                    accepted = true;
                    break;
                }
                eps *= 0.5;
                streak = 0;
                ++rep.rejected_steps;
            }
            if (!accepted)
            {
                // No representable step improves F: a numerical stationary point.
                rep.converged = true;
                break;
            }

            state = std::move(trial);
            sweep();
            ++rep.gradient_iterations;
            if (++streak >= options.restore_after)
            {
                eps = eps0;
                streak = 0;
            }

            const double next = state.product(ctx);
            rep.objective_trace.push_back(next);
            const bool done = std::abs(next - prod) <= options.tolerance * std::abs(prod);
            prod = next;
            if (done)
                rep.converged = true;
        }

        rep.final_phases = PhaseProfile(state.angles);
        fill_bounds(rep, ctx);
        return rep;
    }

    OptimizerReport hybrid_optimize(const Scenario &scenario, std::uint64_t init_seed, const OptimizerOptions &options)
    {
        const CascadeGeometry geometry = cascade_geometry(scenario);
        const ObjectiveContext ctx = make_objective_context(scenario, geometry);
        return optimize(ctx, PhaseProfile::uniform_random(ctx.size(), init_seed), options, OptimizerMode::hybrid);
    }

    OptimizerReport upa_optimize(const Scenario &scenario, std::uint64_t init_seed, const OptimizerOptions &options)
    {
        if (scenario.ris.kind != ArrayKind::upa)
            throw InvalidInput("upa_optimize needs a UPA RIS");
        const CascadeGeometry geometry = cascade_geometry(scenario);
        const ObjectiveContext ctx = make_objective_context(scenario, geometry);
        return optimize(ctx, PhaseProfile::uniform_random(ctx.size(), init_seed), options, OptimizerMode::full_gradient);
    }

} // namespace cris
