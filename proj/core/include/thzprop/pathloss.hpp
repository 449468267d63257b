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
#pragma once

#include "thzprop/datasets.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace thzprop
{

inline constexpr double speed_of_light_m_s = 299'792'458.0;

/// Friis free-space path loss 20 log10(4 pi d f / c) between isotropic antennas.
double fspl_db(double frequency_hz, double distance_m);

/// Close-in path loss model anchored at free space over 1 m:
///   PL(d) = FSPL(f, 1 m) + 10 n log10(d),  d >= 1 m
/// sigma_db is the shadow-fading spread; it is metadata and never added to
/// the mean prediction.
struct CiModel
{
    static constexpr double reference_distance_m = 1.0;

    double frequency_hz = 0.0;
    double ple = 2.0;
    double sigma_db = 0.0;
    std::size_t sample_count = 0;
};

/// Errors: BelowReferenceDistance for d < 1 m.
double ci_path_loss_db(const CiModel &model, double distance_m);

/// Least-squares path-loss exponent through the 1 m anchor:
///   n = sum(A_i B_i) / sum(B_i^2),  A_i = PL_i - FSPL(f, 1 m),  B_i = 10 log10(d_i)
/// sigma_db is the RMS residual with divisor N.
/// Errors: TooFewSamples (< 2), MixedFrequencies (sample off `frequency_hz`),
/// BelowReferenceDistance, AllAtReferenceDistance.
CiModel fit_ci(std::span<const PathLossSample> samples, double frequency_hz);

struct DirectionalReduction
{
    std::vector<PathLossSample> los;
    std::vector<PathLossSample> nlos_all;
    /// Lowest-loss NLOS record per (tx_id, rx_id); ties go to the smaller
    /// (tx_az_deg, rx_az_deg) pair. Ordered by (tx_id, rx_id).
    std::vector<PathLossSample> nlos_best;
};

DirectionalReduction reduce_directional(std::span<const PathLossSample> samples);

/// Samples for one CI environment class: LOS, all NLOS, or the NLOS-best subset.
std::vector<PathLossSample> select_environment(const DirectionalReduction &reduction, CiEnvironment env);

} // namespace thzprop
