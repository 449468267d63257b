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
#include "thzprop/datasets.hpp"

#include "thzprop/error.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace thzprop
{
namespace
{

constexpr double ghz = 1e9;

PaperDataset build_paper_dataset()
{
    PaperDataset d;

    // Sounder summary. XPD is per carrier and shared by both horns.
    d.bands = {
        {{28.0 * ghz, "28GHz"}, 1.0 * ghz, {{30.0, 15.0, 19.30}, {10.0, 24.5, 19.30}}},
        {{73.0 * ghz, "73GHz"}, 1.0 * ghz, {{15.0, 20.0, 28.94}, {7.0, 27.0, 28.94}}},
        {{142.0 * ghz, "142GHz"}, 1.0 * ghz, {{8.0, 27.0, 44.18}}},
    };

    // Drywall reflection loss, positive dB.
    const double angles[] = {10.0, 30.0, 60.0, 80.0};
    const std::pair<double, std::array<double, 4>> reflection_rows[] = {
        {28.0 * ghz, {12.98, 4.22, 4.06, 3.18}},
        {73.0 * ghz, {12.65, 8.08, 3.16, 1.28}},
        {142.0 * ghz, {9.81, 7.53, 3.54, 0.36}},
    };
    for (const auto &[f, losses] : reflection_rows)
        for (std::size_t i = 0; i < losses.size(); ++i)
            d.reflection.push_back({f, angles[i], losses[i]});

    using P = Polarization;
    struct Row
    {
        P tx, rx;
        double mean[3];
        double stdev[3];
    };
    const double freqs[] = {28.0 * ghz, 73.0 * ghz, 142.0 * ghz};
    const Row glass[] = {
        {P::V, P::V, {1.53, 7.17, 10.22}, {0.60, 0.17, 0.22}},
        {P::V, P::H, {20.63, 37.65, 46.92}, {1.32, 0.53, 2.05}},
        {P::H, P::V, {22.25, 36.92, 37.37}, {0.88, 1.11, 1.79}},
        {P::H, P::H, {1.48, 7.15, 10.43}, {0.54, 0.44, 0.55}},
    };
    const Row dry[] = {
        {P::V, P::V, {4.15, 2.57, 8.46}, {0.59, 0.61, 1.22}},
        {P::V, P::H, {25.59, 24.97, 27.28}, {2.85, 0.58, 1.77}},
        {P::H, P::V, {25.81, 23.38, 26.00}, {0.65, 0.65, 1.42}},
        {P::H, P::H, {3.31, 3.17, 9.31}, {1.13, 0.68, 0.61}},
    };
    const auto add_table = [&](std::string_view material, std::span<const Row> rows) {
        for (std::size_t k = 0; k < 3; ++k)
            for (const Row &r : rows)
                d.partition.push_back({freqs[k], std::string(material), r.tx, r.rx, r.mean[k], r.stdev[k]});
    };
    add_table(clear_glass, glass);
    add_table(drywall, dry);

    using E = CiEnvironment;
    const double ple[3][3] = {{1.70, 3.00, 4.40}, {1.60, 3.40, 5.30}, {1.99, 3.03, 4.70}};
    const double sigma[3][3] = {{2.50, 10.80, 11.60}, {3.20, 11.80, 15.70}, {2.71, 6.91, 14.10}};
    const E envs[] = {E::LOS, E::NLOS_BEST, E::NLOS};
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t e = 0; e < 3; ++e)
            d.ci_fits.push_back({freqs[k], envs[e], ple[k][e], sigma[k][e]});

    return d;
}

} // namespace

const AntennaSpec &SounderBand::narrow_beam() const
{
    return *std::min_element(antennas.begin(), antennas.end(),
                             [](const AntennaSpec &a, const AntennaSpec &b) { return a.hpbw_deg < b.hpbw_deg; });
}

const PaperDataset &paper_dataset()
{
    static const PaperDataset dataset = build_paper_dataset();
    return dataset;
}

const SounderBand &PaperDataset::band(double frequency_hz) const
{
    for (const auto &b : bands)
        if (same_frequency(b.band.center_frequency_hz, frequency_hz))
            return b;
    throw Error(Errc::invalid_argument, "no sounder band at " + std::to_string(frequency_hz) + " Hz");
}

double PaperDataset::xpd_db(double frequency_hz) const
{
    return band(frequency_hz).antennas.front().xpd_db;
}

std::vector<ReflectionSample> PaperDataset::reflection_at(double frequency_hz) const
{
    std::vector<ReflectionSample> out;
    std::copy_if(reflection.begin(), reflection.end(), std::back_inserter(out),
                 [&](const ReflectionSample &s) { return same_frequency(s.frequency_hz, frequency_hz); });
    return out;
}

const PartitionRecord &PaperDataset::partition_record(std::string_view material, double frequency_hz,
                                                      Polarization tx, Polarization rx) const
{
    for (const auto &r : partition)
        if (r.material_name == material && same_frequency(r.frequency_hz, frequency_hz) && r.tx_pol == tx &&
            r.rx_pol == rx)
            return r;
    throw Error(Errc::invalid_argument, "no partition record for " + std::string(material));
}

const CiFitRecord &PaperDataset::ci_fit(double frequency_hz, CiEnvironment env) const
{
    for (const auto &r : ci_fits)
        if (same_frequency(r.frequency_hz, frequency_hz) && r.environment == env)
            return r;
    throw Error(Errc::invalid_argument, "no CI fit at " + std::to_string(frequency_hz) + " Hz");
}

std::vector<double> PaperDataset::frequencies_hz() const
{
    std::vector<double> out;
    for (const auto &b : bands)
        out.push_back(b.band.center_frequency_hz);
    return out;
}

ValidationReport validate_dataset(std::span<const PathLossSample> samples)
{
    ValidationReport report;

    using Key = std::tuple<double, std::string, std::string, double, double, double, double, Polarization,
                           Polarization>;
    std::map<Key, std::size_t> counts;
    std::vector<Key> order;

    for (const auto &s : samples)
    {
        if (s.environment == Environment::LOS)
            ++report.los_count;
        else
            ++report.nlos_count;

        report.min_distance_m = std::min(report.min_distance_m.value_or(s.distance_m), s.distance_m);
        report.max_distance_m = std::max(report.max_distance_m.value_or(s.distance_m), s.distance_m);

        Key key{s.frequency_hz, s.tx_id, s.rx_id, s.tx_az_deg, s.tx_el_deg,
                s.rx_az_deg,    s.rx_el_deg, s.tx_pol, s.rx_pol};
        if (counts[key]++ == 1)
            order.push_back(key);
    }

    for (const auto &key : order)
    {
        const auto &[f, tx, rx, taz, tel, raz, rel, tp, rp] = key;
        report.duplicates.push_back({f, tx, rx, taz, tel, raz, rel, tp, rp, counts[key]});
    }
    return report;
}

} // namespace thzprop
