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
#include <thzprop/datasets.hpp>
#include <thzprop/error.hpp>

#include <gtest/gtest.h>

using namespace thzprop;

namespace
{

constexpr double f28 = 28e9;
constexpr double f73 = 73e9;
constexpr double f142 = 142e9;

PathLossSample sample(std::string tx, std::string rx, Environment env, double d, double pl, double tx_az = 0.0)
{
    PathLossSample s;
    s.frequency_hz = f142;
    s.tx_id = std::move(tx);
    s.rx_id = std::move(rx);
    s.environment = env;
    s.distance_m = d;
    s.path_loss_db = pl;
    s.tx_az_deg = tx_az;
    return s;
}

} // namespace

TEST(EmbeddedDataset, SounderTable)
{
    const auto &d = paper_dataset();
    ASSERT_EQ(d.bands.size(), 3u);
    EXPECT_DOUBLE_EQ(d.xpd_db(f142), 44.18);
    EXPECT_DOUBLE_EQ(d.xpd_db(f73), 28.94);
    EXPECT_DOUBLE_EQ(d.xpd_db(f28), 19.30);

    EXPECT_DOUBLE_EQ(d.band(f28).narrow_beam().hpbw_deg, 10.0);
    EXPECT_DOUBLE_EQ(d.band(f28).narrow_beam().gain_dbi, 24.5);
    EXPECT_DOUBLE_EQ(d.band(f73).narrow_beam().hpbw_deg, 7.0);
    EXPECT_DOUBLE_EQ(d.band(f142).narrow_beam().hpbw_deg, 8.0);
    EXPECT_DOUBLE_EQ(d.band(f142).narrow_beam().gain_dbi, 27.0);
    EXPECT_DOUBLE_EQ(d.band(f142).rf_bandwidth_hz, 1e9);
}

TEST(EmbeddedDataset, ReflectionTableStoresPositiveLosses)
{
    const auto &d = paper_dataset();
    ASSERT_EQ(d.reflection.size(), 12u);
    for (const auto &r : d.reflection)
        EXPECT_GE(r.reflection_loss_db, 0.0);

    const auto rows = d.reflection_at(f28);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_DOUBLE_EQ(rows[0].incident_angle_deg, 10.0);
    EXPECT_DOUBLE_EQ(rows[0].reflection_loss_db, 12.98);

    // Printed as negative dB; negating the stored value recovers the print.
    const double printed_142[] = {-9.81, -7.53, -3.54, -0.36};
    const auto r142 = d.reflection_at(f142);
    for (std::size_t i = 0; i < 4; ++i)
        EXPECT_NEAR(-r142[i].reflection_loss_db, printed_142[i], 0.01);
}

TEST(EmbeddedDataset, PartitionTables)
{
    const auto &d = paper_dataset();
    EXPECT_EQ(d.partition.size(), 24u);
    EXPECT_DOUBLE_EQ(d.partition_record(clear_glass, f142, Polarization::V, Polarization::V).mean_loss_db, 10.22);
    EXPECT_DOUBLE_EQ(d.partition_record(clear_glass, f142, Polarization::V, Polarization::H).mean_loss_db, 46.92);
    EXPECT_DOUBLE_EQ(d.partition_record(drywall, f28, Polarization::V, Polarization::H).std_db, 2.85);
    EXPECT_DOUBLE_EQ(d.partition_record(drywall, f142, Polarization::V, Polarization::V).mean_loss_db, 8.46);
    EXPECT_THROW(d.partition_record("concrete", f142, Polarization::V, Polarization::V), Error);
    for (const auto &p : d.partition)
        EXPECT_GE(p.std_db, 0.0);
}

TEST(EmbeddedDataset, CiTable)
{
    const auto &d = paper_dataset();
    EXPECT_EQ(d.ci_fits.size(), 9u);
    EXPECT_DOUBLE_EQ(d.ci_fit(f142, CiEnvironment::NLOS).ple, 4.70);
    EXPECT_DOUBLE_EQ(d.ci_fit(f142, CiEnvironment::NLOS).sigma_db, 14.10);
    EXPECT_DOUBLE_EQ(d.ci_fit(f73, CiEnvironment::NLOS_BEST).sigma_db, 11.80);
    for (const auto &c : d.ci_fits)
    {
        EXPECT_GT(c.ple, 0.0);
        EXPECT_GE(c.sigma_db, 0.0);
    }
}

TEST(EmbeddedDataset, SameObjectEveryCall)
{
    const auto &a = paper_dataset();
    const auto &b = paper_dataset();
    EXPECT_EQ(&a, &b);
    EXPECT_EQ(a.reflection, b.reflection);
}

TEST(ValidateDataset, EmptyInput)
{
    const auto report = validate_dataset({});
    EXPECT_EQ(report.los_count, 0u);
    EXPECT_EQ(report.nlos_count, 0u);
    EXPECT_FALSE(report.min_distance_m.has_value());
    EXPECT_TRUE(report.duplicates.empty());
}

TEST(ValidateDataset, CountsAndRange)
{
    const std::vector<PathLossSample> samples = {
        sample("T1", "R1", Environment::LOS, 4.0, 90.0),
        sample("T1", "R2", Environment::LOS, 12.5, 100.0),
        sample("T1", "R3", Environment::NLOS, 20.0, 120.0),
    };
    const auto report = validate_dataset(samples);
    EXPECT_EQ(report.los_count, 2u);
    EXPECT_EQ(report.nlos_count, 1u);
    EXPECT_DOUBLE_EQ(*report.min_distance_m, 4.0);
    EXPECT_DOUBLE_EQ(*report.max_distance_m, 20.0);
    EXPECT_TRUE(report.duplicates.empty());
}

TEST(ValidateDataset, DuplicatesReportedOnce)
{
    const std::vector<PathLossSample> samples = {
        sample("T1", "R1", Environment::NLOS, 10.0, 110.0),
        sample("T1", "R1", Environment::NLOS, 10.0, 111.0),
        sample("T1", "R1", Environment::NLOS, 10.0, 111.5, 8.0),
    };
    const auto report = validate_dataset(samples);
    ASSERT_EQ(report.duplicates.size(), 1u);
    EXPECT_EQ(report.duplicates[0].occurrences, 2u);
    EXPECT_EQ(report.duplicates[0].tx_id, "T1");

    // Triplicates still produce one entry.
    auto more = samples;
    more.push_back(samples[0]);
    const auto r2 = validate_dataset(more);
    ASSERT_EQ(r2.duplicates.size(), 1u);
    EXPECT_EQ(r2.duplicates[0].occurrences, 3u);
}
