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

#include <json.hpp>

#include <string>

namespace thzprop::cli
{

using Json = nlohmann::ordered_json;

/// Pretty-prints with two-space indentation and every floating-point value
/// in fixed 4-decimal form. Non-finite floats become null. Ends with '\n'.
std::string render_json(const Json &value);

/// Fixed 4-decimal text for one number, with "-0.0000" folded to "0.0000".
std::string format_fixed(double value);

/// Frequencies are whole hertz in every payload.
Json hz(double frequency_hz);

} // namespace thzprop::cli
