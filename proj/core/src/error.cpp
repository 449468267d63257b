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
#include "thzprop/error.hpp"

#include <utility>

namespace thzprop
{

std::string_view error_name(Errc code) noexcept
{
    switch (code)
    {
    case Errc::invalid_argument:
        return "InvalidArgument";
    case Errc::file_not_found:
        return "FileNotFound";
    case Errc::missing_column:
        return "MissingColumn";
    case Errc::bad_numeric:
        return "BadNumeric";
    case Errc::invariant_violation:
        return "InvariantViolation";
    case Errc::perfect_transmission:
        return "PerfectTransmission";
    case Errc::too_few_samples:
        return "TooFewSamples";
    case Errc::mixed_frequencies:
        return "MixedFrequencies";
    case Errc::degenerate_angles:
        return "DegenerateAngles";
    case Errc::missing_specular_angle:
        return "MissingSpecularAngle";
    case Errc::one_sided_pattern:
        return "OneSidedPattern";
    case Errc::over_unity_budget:
        return "OverUnityBudget";
    case Errc::below_reference_distance:
        return "BelowReferenceDistance";
    case Errc::all_at_reference_distance:
        return "AllAtReferenceDistance";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string &what)
    : std::runtime_error(what), code_(code)
{
}

Error::Error(Errc code, const std::string &what, std::size_t row, std::string column)
    : std::runtime_error(what), code_(code), row_(row), column_(std::move(column))
{
}

} // namespace thzprop
