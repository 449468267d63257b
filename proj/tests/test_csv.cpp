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
#include <thzprop/csv.hpp>
#include <thzprop/error.hpp>

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace thzprop;

namespace
{

const std::string header(path_loss_csv_header);

std::vector<PathLossSample> parse(const std::string &text)
{
    std::istringstream in(text);
    return parse_path_loss_csv(in);
}

Errc parse_error(const std::string &text, std::optional<std::size_t> *row = nullptr)
{
    try
    {
        parse(text);
    }
    catch (const Error &e)
    {
        if (row)
            *row = e.row();
        return e.code();
    }
    ADD_FAILURE() << "expected an error";
    return Errc::invalid_argument;
}

} // namespace

TEST(PathLossCsv, WellFormedThreeRows)
{
    const auto samples = parse(header + "\n"
                                        "142e9,TX1,RX1,4.2,LOS,0,0,180,0,V,V,88.1\n"
                                        "142e9,TX1,RX2,11,NLOS,16,-8,200,8,V,H,131.5\n"
                                        "142000000000,TX2,RX2,7.5,NLOS,24,0,32,0,H,H,120\n");
    ASSERT_EQ(samples.size(), 3u);
    EXPECT_EQ(samples[1].rx_id, "RX2");
    EXPECT_EQ(samples[1].environment, Environment::NLOS);
    EXPECT_EQ(samples[1].rx_pol, Polarization::H);
    EXPECT_DOUBLE_EQ(samples[1].tx_el_deg, -8.0);
    EXPECT_DOUBLE_EQ(samples[2].frequency_hz, 142e9);
    EXPECT_DOUBLE_EQ(samples[2].path_loss_db, 120.0);
}

TEST(PathLossCsv, HeaderOnlyIsEmpty)
{
    EXPECT_TRUE(parse(header + "\n").empty());
    EXPECT_TRUE(parse(header).empty());
}

TEST(PathLossCsv, ColumnsInAnyOrderAndCrlf)
{
    const auto samples = parse("path_loss_db,freq_hz,tx_id,rx_id,distance_m,environment,tx_az_deg,tx_el_deg,"
                               "rx_az_deg,rx_el_deg,tx_pol,rx_pol\r\n"
                               "99.5,28e9,A,B,3,LOS,0,0,0,0,H,V\r\n");
    ASSERT_EQ(samples.size(), 1u);
    EXPECT_DOUBLE_EQ(samples[0].path_loss_db, 99.5);
    EXPECT_EQ(samples[0].tx_pol, Polarization::H);
}

TEST(PathLossCsv, BelowReferenceDistanceIsInvariantViolation)
{
    std::optional<std::size_t> row;
    EXPECT_EQ(parse_error(header + "\n142e9,T,R,2,LOS,0,0,0,0,V,V,80\n142e9,T,R,0.5,LOS,0,0,0,0,V,V,80\n", &row),
              Errc::invariant_violation);
    EXPECT_EQ(row, 2u);
}

TEST(PathLossCsv, MissingColumn)
{
    EXPECT_EQ(parse_error("freq_hz,tx_id,rx_id,distance_m\n142e9,T,R,2\n"), Errc::missing_column);
}

TEST(PathLossCsv, BadNumericNamesRowAndColumn)
{
    try
    {
        parse(header + "\n142e9,T,R,2,LOS,0,0,0,0,V,V,80\n142e9,T,R,2,LOS,abc,0,0,0,V,V,80\n");
        FAIL() << "expected BadNumeric";
    }
    catch (const Error &e)
    {
        EXPECT_EQ(e.code(), Errc::bad_numeric);
        EXPECT_EQ(e.row(), 2u);
        EXPECT_EQ(e.column(), "tx_az_deg");
    }
}

TEST(PathLossCsv, OtherInvariants)
{
    EXPECT_EQ(parse_error(header + "\n142e9,T,R,2,OLOS,0,0,0,0,V,V,80\n"), Errc::invariant_violation);
    EXPECT_EQ(parse_error(header + "\n142e9,T,R,2,LOS,0,0,0,0,X,V,80\n"), Errc::invariant_violation);
    EXPECT_EQ(parse_error(header + "\n142e9,T,R,2,LOS,0,0,0,0,V,V,0\n"), Errc::invariant_violation);
    EXPECT_EQ(parse_error(header + "\n142e9,T,R,2,LOS,0,0,0,V,V,80\n"), Errc::invariant_violation);
    EXPECT_EQ(parse_error(header + "\n142e9,T,R,2,LOS,0,0,0,0,V,V,nan\n"), Errc::bad_numeric);
}

TEST(PathLossCsv, MissingFile)
{
    try
    {
        load_path_loss_csv("/nonexistent/dir/none.csv");
        FAIL();
    }
    catch (const Error &e)
    {
        EXPECT_EQ(e.code(), Errc::file_not_found);
    }
}

TEST(PathLossCsv, RoundTripIsLossless)
{
    std::mt19937_64 rng(20191217);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial)
    {
        std::vector<PathLossSample> samples;
        for (int i = 0; i < 50; ++i)
        {
            PathLossSample s;
            s.frequency_hz = 1e9 + u(rng) * 300e9;
            s.tx_id = "TX" + std::to_string(i % 3);
            s.rx_id = "RX" + std::to_string(i);
            s.distance_m = 1.0 + u(rng) * 50.0;
            s.environment = u(rng) < 0.5 ? Environment::LOS : Environment::NLOS;
            s.tx_az_deg = u(rng) * 360.0;
            s.tx_el_deg = -8.0 + 16.0 * u(rng);
            s.rx_az_deg = u(rng) * 360.0;
            s.rx_el_deg = -8.0 + 16.0 * u(rng);
            s.tx_pol = u(rng) < 0.5 ? Polarization::V : Polarization::H;
            s.rx_pol = u(rng) < 0.5 ? Polarization::V : Polarization::H;
            s.path_loss_db = 60.0 + u(rng) * 100.0;
            samples.push_back(s);
        }
        std::stringstream buf;
        write_path_loss_csv(buf, samples);
        EXPECT_EQ(parse_path_loss_csv(buf), samples);
    }
}

TEST(ReflectionCsv, ParseAndRoundTrip)
{
    std::istringstream in(std::string(reflection_csv_header) + "\n142e9,10,9.81\n142e9,80,0.36\n");
    const auto samples = parse_reflection_csv(in);
    ASSERT_EQ(samples.size(), 2u);
    EXPECT_DOUBLE_EQ(samples[1].reflection_loss_db, 0.36);

    std::stringstream buf;
    write_reflection_csv(buf, samples);
    EXPECT_EQ(parse_reflection_csv(buf), samples);
}

TEST(ReflectionCsv, RejectsNegativeLossAndBadAngles)
{
    const auto code = [](const std::string &row) {
        std::istringstream in(std::string(reflection_csv_header) + "\n" + row + "\n");
        try
        {
            parse_reflection_csv(in);
        }
        catch (const Error &e)
        {
            return e.code();
        }
        return Errc::invalid_argument;
    };
    EXPECT_EQ(code("142e9,10,-9.81"), Errc::invariant_violation);
    EXPECT_EQ(code("142e9,90,1"), Errc::invariant_violation);
    EXPECT_EQ(code("142e9,0,1"), Errc::invariant_violation);
}

TEST(PatternCsv, Parse)
{
    std::istringstream in(std::string(pattern_csv_header) + "\n10,-30.5\n100,0\n");
    const auto pts = parse_pattern_csv(in);
    ASSERT_EQ(pts.size(), 2u);
    EXPECT_DOUBLE_EQ(pts[0].relative_power_db, -30.5);
}
