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
#include "thzprop/partition.hpp"

#include "thzprop/error.hpp"
#include "thzprop/pathloss.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace thzprop
{

LinkPowerMeasurement remove_antenna_gains(LinkPowerMeasurement meas, double tx_gain_dbi, double rx_gain_dbi)
{
    meas.rx_power_dbm -= tx_gain_dbi + rx_gain_dbi;
    return meas;
}

PartitionLoss partition_loss(const LinkPowerMeasurement &meas)
{
    if (!(meas.distance_m > 0.0))
        throw Error(Errc::invalid_argument, "link distance must be positive");
    const double loss = meas.tx_power_dbm - meas.rx_power_dbm - fspl_db(meas.frequency_hz, meas.distance_m);
    return {loss, loss < 0.0};
}

double xpd_from_path_losses(double pl_cross_db, double pl_co_db) noexcept
{
    return pl_cross_db - pl_co_db;
}

XpdSummary summarize_xpd(std::span<const double> pl_co_db, std::span<const double> pl_cross_db, double tolerance_db)
{
    if (pl_co_db.empty() || pl_co_db.size() != pl_cross_db.size())
        throw Error(Errc::invalid_argument, "co- and cross-polarized sweeps must be non-empty and equal length");

    XpdSummary out;
    for (std::size_t i = 0; i < pl_co_db.size(); ++i)
        out.per_distance_db.push_back(xpd_from_path_losses(pl_cross_db[i], pl_co_db[i]));

    const auto [lo, hi] = std::minmax_element(out.per_distance_db.begin(), out.per_distance_db.end());
    out.spread_db = *hi - *lo;
    out.mean_db = std::accumulate(out.per_distance_db.begin(), out.per_distance_db.end(), 0.0) /
                  static_cast<double>(out.per_distance_db.size());
    out.consistent = out.spread_db <= tolerance_db;
    return out;
}

double cross_pol_mean_db(double vh_loss_db, double hv_loss_db) noexcept
{
    return 0.5 * (vh_loss_db + hv_loss_db);
}

double depolarization_margin(double cross_pol_partition_mean_db, double xpd_db) noexcept
{
    return cross_pol_partition_mean_db - xpd_db;
}

double depolarization_margin(const PaperDataset &data, std::string_view material, double frequency_hz)
{
    const auto &vh = data.partition_record(material, frequency_hz, Polarization::V, Polarization::H);
    const auto &hv = data.partition_record(material, frequency_hz, Polarization::H, Polarization::V);
    return depolarization_margin(cross_pol_mean_db(vh.mean_loss_db, hv.mean_loss_db), data.xpd_db(frequency_hz));
}

PowerBudget power_budget(double reflection_loss_db, double partition_loss_db)
{
    if (std::isnan(reflection_loss_db) || std::isnan(partition_loss_db) || reflection_loss_db < 0.0 ||
        partition_loss_db < 0.0)
        throw Error(Errc::invalid_argument, "reflection and partition losses must be non-negative dB");

    PowerBudget b;
    b.reflected_fraction = std::pow(10.0, -reflection_loss_db / 10.0);
    b.transmitted_fraction = std::pow(10.0, -partition_loss_db / 10.0);
    const double absorbed = 1.0 - b.reflected_fraction - b.transmitted_fraction;
    if (absorbed < 0.0)
        throw Error(Errc::over_unity_budget, "reflected plus transmitted power exceeds the incident power");
    b.absorbed_fraction = absorbed;
    return b;
}

} // namespace thzprop
