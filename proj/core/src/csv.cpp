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
#include "thzprop/csv.hpp"

#include "thzprop/error.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string>

namespace thzprop
{
namespace
{

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true)
    {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return fields;
}

/// Header-indexed CSV reader shared by the ingestion schemas.
class Table
{
public:
    Table(std::istream &in, std::span<const std::string_view> required) : in_(in)
    {
        std::string header;
        while (std::getline(in_, header) && trim(header).empty())
        {
        }
        if (header.size() >= 3 && header.compare(0, 3, "\xEF\xBB\xBF") == 0)
            header.erase(0, 3);

        const auto names = split(header);
        for (std::size_t i = 0; i < names.size(); ++i)
            index_.emplace(std::string(names[i]), i);
        width_ = names.size();

        for (const auto name : required)
            if (!index_.contains(std::string(name)))
                throw Error(Errc::missing_column, "missing column '" + std::string(name) + "'", 0,
                            std::string(name));
    }

    bool next()
    {
        while (std::getline(in_, line_))
        {
            if (trim(line_).empty())
                continue;
            ++row_;
            fields_ = split(line_);
            if (fields_.size() != width_)
                throw Error(Errc::invariant_violation,
                            "row " + std::to_string(row_) + ": expected " + std::to_string(width_) +
                                " fields, found " + std::to_string(fields_.size()),
                            row_);
            return true;
        }
        return false;
    }

    std::size_t row() const { return row_; }

    std::string_view text(std::string_view column) const { return fields_[index_.at(std::string(column))]; }

    double number(std::string_view column) const
    {
        const auto field = text(column);
        double value = 0.0;
        const auto *end = field.data() + field.size();
        const auto [ptr, ec] = std::from_chars(field.data(), end, value);
        if (field.empty() || ec != std::errc() || ptr != end || !std::isfinite(value))
            throw Error(Errc::bad_numeric,
                        "row " + std::to_string(row_) + ", column " + std::string(column) + ": '" +
                            std::string(field) + "' is not a finite number",
                        row_, std::string(column));
        return value;
    }

    [[noreturn]] void violation(const std::string &what) const
    {
        throw Error(Errc::invariant_violation, "row " + std::to_string(row_) + ": " + what, row_);
    }

private:
    std::istream &in_;
    std::map<std::string, std::size_t, std::less<>> index_;
    std::size_t width_ = 0;
    std::size_t row_ = 0;
    std::string line_;
    std::vector<std::string_view> fields_;
};

std::ifstream open_or_throw(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::file_not_found, "cannot open '" + path.string() + "'");
    return in;
}

void put_number(std::ostream &out, double v)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    out.write(buf.data(), ptr - buf.data());
}

constexpr std::array<std::string_view, 12> path_loss_columns = {
    "freq_hz",   "tx_id",     "rx_id",     "distance_m", "environment", "tx_az_deg",
    "tx_el_deg", "rx_az_deg", "rx_el_deg", "tx_pol",     "rx_pol",      "path_loss_db"};

constexpr std::array<std::string_view, 3> reflection_columns = {"freq_hz", "incident_angle_deg",
                                                                "reflection_loss_db"};

constexpr std::array<std::string_view, 2> pattern_columns = {"observation_angle_deg", "relative_power_db"};

} // namespace

std::vector<PathLossSample> parse_path_loss_csv(std::istream &in)
{
    Table table(in, path_loss_columns);
    std::vector<PathLossSample> samples;

    while (table.next())
    {
        PathLossSample s;
        s.frequency_hz = table.number("freq_hz");
        s.tx_id = std::string(table.text("tx_id"));
        s.rx_id = std::string(table.text("rx_id"));
        s.distance_m = table.number("distance_m");
        s.tx_az_deg = table.number("tx_az_deg");
        s.tx_el_deg = table.number("tx_el_deg");
        s.rx_az_deg = table.number("rx_az_deg");
        s.rx_el_deg = table.number("rx_el_deg");
        s.path_loss_db = table.number("path_loss_db");

        const auto env = parse_environment(table.text("environment"));
        if (!env)
            table.violation("environment must be LOS or NLOS");
        s.environment = *env;

        const auto tx_pol = parse_polarization(table.text("tx_pol"));
        const auto rx_pol = parse_polarization(table.text("rx_pol"));
        if (!tx_pol || !rx_pol)
            table.violation("polarization must be V or H");
        s.tx_pol = *tx_pol;
        s.rx_pol = *rx_pol;

        if (s.frequency_hz <= 0.0)
            table.violation("freq_hz must be positive");
        if (s.distance_m < 1.0)
            table.violation("distance_m below the 1 m reference distance");
        if (s.path_loss_db <= 0.0)
            table.violation("path_loss_db must be positive");

        samples.push_back(std::move(s));
    }
    return samples;
}

std::vector<PathLossSample> load_path_loss_csv(const std::filesystem::path &path)
{
    auto in = open_or_throw(path);
    return parse_path_loss_csv(in);
}

void write_path_loss_csv(std::ostream &out, std::span<const PathLossSample> samples)
{
    out << path_loss_csv_header << '\n';
    for (const auto &s : samples)
    {
        put_number(out, s.frequency_hz);
        out << ',' << s.tx_id << ',' << s.rx_id << ',';
        put_number(out, s.distance_m);
        out << ',' << to_string(s.environment) << ',';
        put_number(out, s.tx_az_deg);
        out << ',';
        put_number(out, s.tx_el_deg);
        out << ',';
        put_number(out, s.rx_az_deg);
        out << ',';
        put_number(out, s.rx_el_deg);
        out << ',' << to_string(s.tx_pol) << ',' << to_string(s.rx_pol) << ',';
        put_number(out, s.path_loss_db);
        out << '\n';
    }
}

std::vector<ReflectionSample> parse_reflection_csv(std::istream &in)
{
    Table table(in, reflection_columns);
    std::vector<ReflectionSample> samples;

    while (table.next())
    {
        ReflectionSample s{table.number("freq_hz"), table.number("incident_angle_deg"),
                           table.number("reflection_loss_db")};
        if (s.frequency_hz <= 0.0)
            table.violation("freq_hz must be positive");
        if (!(s.incident_angle_deg > 0.0 && s.incident_angle_deg < 90.0))
            table.violation("incident_angle_deg must lie in (0, 90)");
        if (s.reflection_loss_db < 0.0)
            table.violation("reflection_loss_db must be non-negative (store losses as positive dB)");
        samples.push_back(s);
    }
    return samples;
}

std::vector<ReflectionSample> load_reflection_csv(const std::filesystem::path &path)
{
    auto in = open_or_throw(path);
    return parse_reflection_csv(in);
}

void write_reflection_csv(std::ostream &out, std::span<const ReflectionSample> samples)
{
    out << reflection_csv_header << '\n';
    for (const auto &s : samples)
    {
        put_number(out, s.frequency_hz);
        out << ',';
        put_number(out, s.incident_angle_deg);
        out << ',';
        put_number(out, s.reflection_loss_db);
        out << '\n';
    }
}

std::vector<ScatterPatternPoint> parse_pattern_csv(std::istream &in)
{
    Table table(in, pattern_columns);
    std::vector<ScatterPatternPoint> points;
    while (table.next())
    {
        ScatterPatternPoint p{table.number("observation_angle_deg"), table.number("relative_power_db")};
        if (!(p.observation_angle_deg >= 0.0 && p.observation_angle_deg <= 180.0))
            table.violation("observation_angle_deg must lie in [0, 180]");
        points.push_back(p);
    }
    return points;
}

std::vector<ScatterPatternPoint> load_pattern_csv(const std::filesystem::path &path)
{
    auto in = open_or_throw(path);
    return parse_pattern_csv(in);
}

} // namespace thzprop
