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
#include "thzprop/pathloss.hpp"

#include "thzprop/error.hpp"

#include <cmath>
#include <map>
#include <string>
#include <tuple>
#include <utility>

namespace thzprop
{

double fspl_db(double frequency_hz, double distance_m)
{
    if (!(frequency_hz > 0.0) || !(distance_m > 0.0))
        throw Error(Errc::invalid_argument, "FSPL needs positive frequency and distance");
    return 20.0 * std::log10(4.0 * pi * distance_m * frequency_hz / speed_of_light_m_s);
}

double ci_path_loss_db(const CiModel &model, double distance_m)
{
    if (!(distance_m >= CiModel::reference_distance_m))
        throw Error(Errc::below_reference_distance,
                    "distance " + std::to_string(distance_m) + " m is below the 1 m reference distance");
    return fspl_db(model.frequency_hz, CiModel::reference_distance_m) + 10.0 * model.ple * std::log10(distance_m);
}

CiModel fit_ci(std::span<const PathLossSample> samples, double frequency_hz)
{
    if (samples.size() < 2)
        throw Error(Errc::too_few_samples, "CI fit needs at least 2 samples");

    const double anchor = fspl_db(frequency_hz, CiModel::reference_distance_m);
    double sum_ab = 0.0;
    double sum_bb = 0.0;
    for (const auto &s : samples)
    {
        if (!same_frequency(s.frequency_hz, frequency_hz))
            throw Error(Errc::mixed_frequencies, "sample at " + std::to_string(s.frequency_hz) +
                                                     " Hz does not match fit frequency " +
                                                     std::to_string(frequency_hz) + " Hz");
        if (s.distance_m < CiModel::reference_distance_m)
            throw Error(Errc::below_reference_distance,
                        "sample distance " + std::to_string(s.distance_m) + " m is below 1 m");
        const double a = s.path_loss_db - anchor;
        const double b = 10.0 * std::log10(s.distance_m);
        sum_ab += a * b;
        sum_bb += b * b;
    }
    if (sum_bb == 0.0)
        throw Error(Errc::all_at_reference_distance, "every sample sits at the 1 m reference distance");

    CiModel model;
    model.frequency_hz = frequency_hz;
    model.ple = sum_ab / sum_bb;
    model.sample_count = samples.size();

    double sse = 0.0;
    for (const auto &s : samples)
    {
        const double r = s.path_loss_db - (anchor + model.ple * 10.0 * std::log10(s.distance_m));
        sse += r * r;
    }
    model.sigma_db = std::sqrt(sse / static_cast<double>(samples.size()));
    return model;
}

DirectionalReduction reduce_directional(std::span<const PathLossSample> samples)
{
    DirectionalReduction out;
    std::map<std::pair<std::string, std::string>, const PathLossSample *> best;

    const auto better = [](const PathLossSample &a, const PathLossSample &b) {
        if (a.path_loss_db != b.path_loss_db)
            return a.path_loss_db < b.path_loss_db;
        return std::tie(a.tx_az_deg, a.rx_az_deg) < std::tie(b.tx_az_deg, b.rx_az_deg);
    };

    for (const auto &s : samples)
    {
        if (s.environment == Environment::LOS)
        {
            out.los.push_back(s);
            continue;
        }
        out.nlos_all.push_back(s);
        auto [it, inserted] = best.try_emplace({s.tx_id, s.rx_id}, &s);
        if (!inserted && better(s, *it->second))
            it->second = &s;
    }

    out.nlos_best.reserve(best.size());
    for (const auto &[key, sample] : best)
        out.nlos_best.push_back(*sample);
    return out;
}

std::vector<PathLossSample> select_environment(const DirectionalReduction &reduction, CiEnvironment env)
{
    switch (env)
    {
    case CiEnvironment::LOS:
        return reduction.los;
    case CiEnvironment::NLOS_BEST:
        return reduction.nlos_best;
    case CiEnvironment::NLOS:
        return reduction.nlos_all;
    }
    return {};
}

} // namespace thzprop
