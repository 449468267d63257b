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

#include <optional>
#include <string_view>

namespace thzprop
{

enum class Polarization
{
    V,
    H
};

/// Environment label carried by a measured path-loss record.
enum class Environment
{
    LOS,
    NLOS
};

/// Environment class of a fitted CI model; NLOS_BEST is the per-location
/// minimum-loss subset of the NLOS records.
enum class CiEnvironment
{
    LOS,
    NLOS_BEST,
    NLOS
};

std::string_view to_string(Polarization p) noexcept;
std::string_view to_string(Environment e) noexcept;
std::string_view to_string(CiEnvironment e) noexcept;

std::optional<Polarization> parse_polarization(std::string_view text) noexcept;
std::optional<Environment> parse_environment(std::string_view text) noexcept;
std::optional<CiEnvironment> parse_ci_environment(std::string_view text) noexcept;

/// Two carrier frequencies are treated as the same band when they agree to
/// a relative 1e-9.
bool same_frequency(double a_hz, double b_hz) noexcept;

inline constexpr double pi = 3.14159265358979323846;

inline constexpr double deg_to_rad(double deg) noexcept { return deg * pi / 180.0; }
inline constexpr double rad_to_deg(double rad) noexcept { return rad * 180.0 / pi; }

} // namespace thzprop
