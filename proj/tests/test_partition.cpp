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
#include "oracles.hpp"

#include <thzprop/error.hpp>
#include <thzprop/partition.hpp>

#include <gtest/gtest.h>

#include <limits>
#include <random>

using namespace thzprop;
namespace oracle = thzprop::test;

namespace
{

LinkPowerMeasurement link(double pt, double pr, double d, double f = 142e9)
{
    LinkPowerMeasurement m;
    m.tx_power_dbm = pt;
    m.rx_power_dbm = pr;
    m.distance_m = d;
    m.frequency_hz = f;
    return m;
}

} // namespace

TEST(PartitionLoss, FreeSpaceIsZero)
{
    const auto r = partition_loss(link(0.0, -oracle::fspl_142ghz_3m_db, 3.0));
    EXPECT_NEAR(r.loss_db, 0.0, 1e-9);
    EXPECT_FALSE(r.negative);
}

TEST(PartitionLoss, GlassAtThreeMeters)
{
    // Construct the received power that implies the tabulated 10.22 dB.
    const double pr = -(oracle::fspl_142ghz_3m_db + 10.22);
    EXPECT_NEAR(partition_loss(link(0.0, pr, 3.0)).loss_db, 10.22, 1e-9);
    // The 3 m free-space loss is 85.04 dB, so -95.58 dBm implies 10.54 dB.
    EXPECT_NEAR(partition_loss(link(0.0, -95.58, 3.0)).loss_db, 95.58 - oracle::fspl_142ghz_3m_db, 1e-9);
}

TEST(PartitionLoss, AntennaGainsRemoved)
{
    auto m = remove_antenna_gains(link(0.0, -41.04, 3.0), 27.0, 27.0);
    EXPECT_NEAR(m.rx_power_dbm, -95.04, 1e-12);
}

TEST(PartitionLoss, NegativeFlagged)
{
    const auto r = partition_loss(link(0.0, -80.0, 3.0));
    EXPECT_TRUE(r.negative);
    EXPECT_LT(r.loss_db, 0.0);
    EXPECT_NEAR(r.loss_db, 80.0 - oracle::fspl_142ghz_3m_db, 1e-9);
}

TEST(PartitionLoss, ShiftsWithPowers)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-30.0, 30.0);
    for (int i = 0; i < 100; ++i)
    {
        const double pt = u(rng), pr = u(rng) - 90.0, k = u(rng);
        const double base = partition_loss(link(pt, pr, 2.0)).loss_db;
        EXPECT_NEAR(partition_loss(link(pt + k, pr, 2.0)).loss_db, base + k, 1e-9);
        EXPECT_NEAR(partition_loss(link(pt, pr + k, 2.0)).loss_db, base - k, 1e-9);
    }
}

TEST(PartitionLoss, RejectsBadDistance)
{
    EXPECT_THROW(partition_loss(link(0.0, -90.0, 0.0)), Error);
}

TEST(Xpd, Examples)
{
    EXPECT_NEAR(xpd_from_path_losses(124.18, 80.0), 44.18, 1e-12);
    EXPECT_NEAR(xpd_from_path_losses(80.0, 80.0), 0.0, 1e-12);
    for (double k : {-20.0, 3.5, 40.0})
        EXPECT_NEAR(xpd_from_path_losses(124.18 + k, 80.0 + k), 44.18, 1e-12);
}

TEST(Xpd, SummaryOverDistances)
{
    const std::vector<double> co = {80.0, 83.0, 86.5, 88.0, 90.0};
    const std::vector<double> cross = {124.0, 127.4, 130.5, 132.3, 134.2};
    const auto s = summarize_xpd(co, cross);
    ASSERT_EQ(s.per_distance_db.size(), 5u);
    EXPECT_NEAR(s.per_distance_db[1], 44.4, 1e-9);
    EXPECT_NEAR(s.mean_db, (44.0 + 44.4 + 44.0 + 44.3 + 44.2) / 5.0, 1e-9);
    EXPECT_NEAR(s.spread_db, 0.4, 1e-9);
    EXPECT_TRUE(s.consistent);

    const std::vector<double> wide = {124.0, 127.4, 132.0, 132.3, 134.2};
    EXPECT_FALSE(summarize_xpd(co, wide).consistent);

    const std::vector<double> short_cross = {124.0};
    EXPECT_THROW(summarize_xpd(co, short_cross), Error);
}

TEST(Depolarization, DrywallMargins)
{
    const auto &d = paper_dataset();
    EXPECT_NEAR(depolarization_margin(d, drywall, 28e9), 6.40, 0.01);
    EXPECT_NEAR(depolarization_margin(d, drywall, 73e9), -4.76, 0.01);
    EXPECT_NEAR(depolarization_margin(d, drywall, 142e9), -17.54, 0.01);
    EXPECT_NEAR(depolarization_margin(cross_pol_mean_db(27.28, 26.00), 44.18), -17.54, 1e-9);
}

TEST(PowerBudget, ReflectionAndPartition)
{
    const auto b = power_budget(7.25, 8.46);
    EXPECT_NEAR(b.reflected_fraction, 0.188365, 1e-6);
    EXPECT_NEAR(b.transmitted_fraction, 0.142561, 1e-6);
    EXPECT_NEAR(b.absorbed_fraction, 0.669074, 1e-6);
    EXPECT_NEAR(b.reflected_fraction + b.transmitted_fraction + b.absorbed_fraction, 1.0, 1e-15);
}

TEST(PowerBudget, OpaquePartition)
{
    const auto b = power_budget(0.0, std::numeric_limits<double>::infinity());
    EXPECT_DOUBLE_EQ(b.reflected_fraction, 1.0);
    EXPECT_DOUBLE_EQ(b.transmitted_fraction, 0.0);
    EXPECT_DOUBLE_EQ(b.absorbed_fraction, 0.0);
}

TEST(PowerBudget, Errors)
{
    try
    {
        power_budget(0.0, 3.0);
        FAIL();
    }
    catch (const Error &e)
    {
        EXPECT_EQ(e.code(), Errc::over_unity_budget);
    }
    EXPECT_THROW(power_budget(-1.0, 3.0), Error);
    EXPECT_THROW(power_budget(3.0, std::numeric_limits<double>::quiet_NaN()), Error);
}
