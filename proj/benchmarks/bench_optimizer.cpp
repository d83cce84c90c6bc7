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

#include <cris/config.hpp>
#include <cris/experiments.hpp>
#include <cris/optimizer.hpp>
#include <cris/performance.hpp>

#include <benchmark/benchmark.h>

using namespace cris;

namespace
{
    ScenarioConfig config_for(std::int64_t ring, std::int64_t offset_deg)
    {
        ScenarioConfig c;
        c.ris_ring = static_cast<std::size_t>(ring);
        return symmetric_users(c, static_cast<double>(offset_deg));
    }

    void run_design(benchmark::State &state, bool planar)
    {
        const ScenarioConfig c = config_for(state.range(0), state.range(1));
        const Scenario s = planar ? c.upa_scenario() : c.uca_scenario();
        const ObjectiveContext ctx = make_objective_context(s, cascade_geometry(s));
        const OptimizerOptions opts = c.optimizer_options();
        const OptimizerMode mode = planar ? OptimizerMode::full_gradient : OptimizerMode::hybrid;
        std::uint64_t seed = 0;
        double iterations = 0.0;
        for (auto _ : state)
        {
            const OptimizerReport r = optimize(ctx, PhaseProfile::uniform_random(ctx.size(), seed++), opts, mode);
            iterations += static_cast<double>(r.gradient_iterations);
            benchmark::DoNotOptimize(r.sum_se_ub);
        }
        state.counters["gradient_iterations"] = benchmark::Counter(iterations, benchmark::Counter::kAvgIterations);
    }
} // namespace

static void BM_HybridUca(benchmark::State &state)
{
    run_design(state, false);
}

static void BM_GradientUpa(benchmark::State &state)
{
    run_design(state, true);
}

static void BM_ErgodicMonteCarlo(benchmark::State &state)
{
    const ScenarioConfig c = config_for(state.range(0), 30);
    const Scenario s = c.uca_scenario();
    const CascadeGeometry g = cascade_geometry(s);
    const PhaseProfile p = PhaseProfile::uniform_random(s.ris.size(), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(ergodic_se_mc(s, g, p, User::uav, 100, 7).se_mc);
    state.SetItemsProcessed(state.iterations() * 100);
}

BENCHMARK(BM_HybridUca)->ArgsProduct({{16, 32, 64}, {10, 45, 80}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GradientUpa)->ArgsProduct({{16, 32, 64}, {10, 45, 80}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ErgodicMonteCarlo)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
