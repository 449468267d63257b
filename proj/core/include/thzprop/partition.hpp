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

#include <span>
#include <string_view>
#include <vector>

namespace thzprop
{

/// One transmission measurement through a material under test. rx_power_dbm
/// is the received power with antenna gains already removed (see
/// remove_antenna_gains()).
struct LinkPowerMeasurement
{
    double tx_power_dbm = 0.0;
    double rx_power_dbm = 0.0;
    double distance_m = 1.0;
    double frequency_hz = 0.0;
    Polarization tx_pol = Polarization::V;
    Polarization rx_pol = Polarization::V;
};

/// Returns the measurement with both antenna gains subtracted from the
/// received power.
LinkPowerMeasurement remove_antenna_gains(LinkPowerMeasurement meas, double tx_gain_dbi, double rx_gain_dbi);

struct PartitionLoss
{
    double loss_db = 0.0;
    /// Set when the link received more than free space would deliver. The
    /// value is kept as measured.
    bool negative = false;
};

/// L = P_t - P_r(d) - FSPL(d, f).
PartitionLoss partition_loss(const LinkPowerMeasurement &meas);

/// Cross-polarization discrimination: cross-polarized minus co-polarized path loss.
double xpd_from_path_losses(double pl_cross_db, double pl_co_db) noexcept;

struct XpdSummary
{
    std::vector<double> per_distance_db;
    double mean_db = 0.0;
    double spread_db = 0.0; ///< max - min over distances
    bool consistent = false; ///< spread within tolerance
};

/// XPD at each distance of a co/cross sweep, its mean and spread. Errors:
/// InvalidArgument when the sweeps are empty or differ in length.
XpdSummary summarize_xpd(std::span<const double> pl_co_db, std::span<const double> pl_cross_db,
                         double tolerance_db = 1.0);

/// Mean of the V-H and H-V partition losses.
double cross_pol_mean_db(double vh_loss_db, double hv_loss_db) noexcept;

/// Cross-polarized partition loss minus antenna XPD. Negative values mean the
/// material couples energy into the orthogonal polarization.
double depolarization_margin(double cross_pol_partition_mean_db, double xpd_db) noexcept;

/// Margin computed from the embedded tables for `material` at `frequency_hz`.
double depolarization_margin(const PaperDataset &data, std::string_view material, double frequency_hz);

struct PowerBudget
{
    double reflected_fraction = 0.0;
    double transmitted_fraction = 0.0;
    double absorbed_fraction = 0.0;
};

/// Splits unit incident power into reflected (10^(-refl/10)), transmitted
/// (10^(-part/10)) and the absorbed remainder. Infinite partition loss means
/// nothing gets through. Errors: InvalidArgument for negative losses,
/// OverUnityBudget when reflected + transmitted exceeds 1.
PowerBudget power_budget(double reflection_loss_db, double partition_loss_db);

} // namespace thzprop
