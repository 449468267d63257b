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
#include "thzprop/types.hpp"

#include <algorithm>
#include <cmath>

namespace thzprop
{

std::string_view to_string(Polarization p) noexcept
{
    return p == Polarization::V ? "V" : "H";
}

std::string_view to_string(Environment e) noexcept
{
    return e == Environment::LOS ? "LOS" : "NLOS";
}

std::string_view to_string(CiEnvironment e) noexcept
{
    switch (e)
    {
    case CiEnvironment::LOS:
        return "LOS";
    case CiEnvironment::NLOS_BEST:
        return "NLOS_BEST";
    case CiEnvironment::NLOS:
        return "NLOS";
    }
    return "NLOS";
}

std::optional<Polarization> parse_polarization(std::string_view text) noexcept
{
    if (text == "V")
        return Polarization::V;
    if (text == "H")
        return Polarization::H;
    return std::nullopt;
}

std::optional<Environment> parse_environment(std::string_view text) noexcept
{
    if (text == "LOS")
        return Environment::LOS;
    if (text == "NLOS")
        return Environment::NLOS;
    return std::nullopt;
}

std::optional<CiEnvironment> parse_ci_environment(std::string_view text) noexcept
{
    if (text == "LOS")
        return CiEnvironment::LOS;
    if (text == "NLOS_BEST")
        return CiEnvironment::NLOS_BEST;
    if (text == "NLOS")
        return CiEnvironment::NLOS;
    return std::nullopt;
}

bool same_frequency(double a_hz, double b_hz) noexcept
{
    const double scale = std::max(std::abs(a_hz), std::abs(b_hz));
    return std::abs(a_hz - b_hz) <= 1e-9 * scale;
}

} // namespace thzprop
