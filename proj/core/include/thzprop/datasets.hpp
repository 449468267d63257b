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

#include "thzprop/types.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thzprop
{

struct FrequencyBand
{
    double center_frequency_hz = 0.0;
    std::string label;
};

struct AntennaSpec
{
    double hpbw_deg = 0.0;
    double gain_dbi = 0.0;
    double xpd_db = 0.0;
};

/// One channel-sounder configuration: the carrier, its RF bandwidth and the
/// horn antennas used at that carrier (wide and narrow beam where both exist).
struct SounderBand
{
    FrequencyBand band;
    double rf_bandwidth_hz = 0.0;
    std::vector<AntennaSpec> antennas;

    /// Narrowest-beam horn; the one used for reflection and scattering sweeps.
    const AntennaSpec &narrow_beam() const;
};

/// Reflection loss is stored as a positive dB magnitude. A printed "-12.98 dB"
/// reflection entry is held here as 12.98.
struct ReflectionSample
{
    double frequency_hz = 0.0;
    double incident_angle_deg = 0.0;
    double reflection_loss_db = 0.0;

    bool operator==(const ReflectionSample &) const = default;
};

struct PartitionRecord
{
    double frequency_hz = 0.0;
    std::string material_name;
    Polarization tx_pol = Polarization::V;
    Polarization rx_pol = Polarization::V;
    double mean_loss_db = 0.0;
    double std_db = 0.0;
};

struct CiFitRecord
{
    double frequency_hz = 0.0;
    CiEnvironment environment = CiEnvironment::LOS;
    double ple = 0.0;
    double sigma_db = 0.0;
};

struct PathLossSample
{
    double frequency_hz = 0.0;
    std::string tx_id;
    std::string rx_id;
    double distance_m = 0.0;
    Environment environment = Environment::LOS;
    double tx_az_deg = 0.0;
    double tx_el_deg = 0.0;
    double rx_az_deg = 0.0;
    double rx_el_deg = 0.0;
    Polarization tx_pol = Polarization::V;
    Polarization rx_pol = Polarization::V;
    double path_loss_db = 0.0;

    bool operator==(const PathLossSample &) const = default;
};

/// Published measurement tables for drywall and clear glass at 28, 73 and
/// 142 GHz, together with the sounder antennas and the directional CI fits.
struct PaperDataset
{
    std::vector<SounderBand> bands;
    std::vector<ReflectionSample> reflection;
    std::vector<PartitionRecord> partition;
    std::vector<CiFitRecord> ci_fits;

    const SounderBand &band(double frequency_hz) const;
    double xpd_db(double frequency_hz) const;
    std::vector<ReflectionSample> reflection_at(double frequency_hz) const;
    const PartitionRecord &partition_record(std::string_view material, double frequency_hz,
                                            Polarization tx, Polarization rx) const;
    const CiFitRecord &ci_fit(double frequency_hz, CiEnvironment env) const;
    std::vector<double> frequencies_hz() const;
};

/// Immutable embedded reference tables. The same object is returned on every
/// call.
const PaperDataset &paper_dataset();

inline constexpr std::string_view drywall = "drywall";
inline constexpr std::string_view clear_glass = "clear_glass";

struct DuplicateKey
{
    double frequency_hz = 0.0;
    std::string tx_id;
    std::string rx_id;
    double tx_az_deg = 0.0;
    double tx_el_deg = 0.0;
    double rx_az_deg = 0.0;
    double rx_el_deg = 0.0;
    Polarization tx_pol = Polarization::V;
    Polarization rx_pol = Polarization::V;
    std::size_t occurrences = 0;
};

struct ValidationReport
{
    std::size_t los_count = 0;
    std::size_t nlos_count = 0;
    std::optional<double> min_distance_m;
    std::optional<double> max_distance_m;
    std::vector<DuplicateKey> duplicates;
};

/// Summarizes a path-loss sample set. Duplicated (tx, rx, pointing, polarization)
/// keys are listed once each, in order of first appearance.
ValidationReport validate_dataset(std::span<const PathLossSample> samples);

} // namespace thzprop
