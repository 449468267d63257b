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
#include "thzprop/scattering.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace thzprop
{

/// Column order written by write_path_loss_csv(). Readers accept the columns
/// in any order; every one must be present.
inline constexpr std::string_view path_loss_csv_header =
    "freq_hz,tx_id,rx_id,distance_m,environment,tx_az_deg,tx_el_deg,rx_az_deg,rx_el_deg,tx_pol,rx_pol,path_loss_db";

inline constexpr std::string_view reflection_csv_header = "freq_hz,incident_angle_deg,reflection_loss_db";

/// Parses the path-loss CSV schema. Blank lines are skipped. Errors carry
/// the 1-based data row of the first offending record:
///   MissingColumn        header lacks a required column
///   BadNumeric           a numeric field does not parse as a finite number
///   InvariantViolation   distance_m < 1, path_loss_db <= 0, freq_hz <= 0,
///                        unknown environment/polarization, or wrong field count
std::vector<PathLossSample> parse_path_loss_csv(std::istream &in);
std::vector<PathLossSample> load_path_loss_csv(const std::filesystem::path &path);

/// Writes shortest round-trip representations, so parse(write(x)) == x.
void write_path_loss_csv(std::ostream &out, std::span<const PathLossSample> samples);

std::vector<ReflectionSample> parse_reflection_csv(std::istream &in);
std::vector<ReflectionSample> load_reflection_csv(const std::filesystem::path &path);
void write_reflection_csv(std::ostream &out, std::span<const ReflectionSample> samples);

inline constexpr std::string_view pattern_csv_header = "observation_angle_deg,relative_power_db";

/// Scatter pattern as emitted by the CLI. Angles must lie on the [0, 180]
/// observation arc; relative power may be any finite dB value.
std::vector<ScatterPatternPoint> parse_pattern_csv(std::istream &in);
std::vector<ScatterPatternPoint> load_pattern_csv(const std::filesystem::path &path);

} // namespace thzprop
