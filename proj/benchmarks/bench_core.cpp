// SPDX-License-Identifier: Apache-2.0
//
// thzprop: indoor millimeter-wave and sub-terahertz propagation models
// Copyright (C) 2026 The thzprop Authors
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
#include <thzprop/thzprop.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace thzprop;

static void BM_EstimatePermittivity(benchmark::State &state)
{
    const auto samples = paper_dataset().reflection_at(142e9);
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_permittivity_mmse(samples));
}
BENCHMARK(BM_EstimatePermittivity);

static void BM_DsNormalization(benchmark::State &state)
{
    const DsParameters params;
    for (auto _ : state)
        benchmark::DoNotOptimize(ds_normalization(params, 30.0));
}
BENCHMARK(BM_DsNormalization);

static void BM_PredictPattern(benchmark::State &state)
{
    ScatterGeometry geom;
    geom.incident_angle_deg = 30.0;
    geom.observation_angles_deg = ScatterGeometry::measured_arc();
    for (auto _ : state)
        benchmark::DoNotOptimize(predict_pattern(geom, Permittivity(6.4), {}, 8.0));
}
BENCHMARK(BM_PredictPattern);

static void BM_FitCi(benchmark::State &state)
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> dist(1.0, 60.0);
    std::normal_distribution<double> shadow(0.0, 14.1);
    const CiModel truth{142e9, 4.7, 14.1, 0};
    std::vector<PathLossSample> samples(static_cast<std::size_t>(state.range(0)));
    for (auto &s : samples)
    {
        s.frequency_hz = 142e9;
        s.distance_m = dist(rng);
        s.path_loss_db = ci_path_loss_db(truth, s.distance_m) + shadow(rng);
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(fit_ci(samples, 142e9));
}
BENCHMARK(BM_FitCi)->Arg(10000);
BENCHMARK_MAIN();
