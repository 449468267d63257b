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
#include "cli/json_output.hpp"

#include <fmt/format.h>

#include <cmath>

namespace thzprop::cli
{
namespace
{

void render(const Json &v, std::string &out, int depth)
{
    const auto indent = [&](int d) { out.append(static_cast<std::size_t>(2 * d), ' '); };

    switch (v.type())
    {
    case Json::value_t::object: {
        if (v.empty())
        {
            out += "{}";
            return;
        }
        out += "{\n";
        std::size_t i = 0;
        for (const auto &[key, item] : v.items())
        {
            indent(depth + 1);
            out += Json(key).dump();
            out += ": ";
            render(item, out, depth + 1);
            out += ++i < v.size() ? ",\n" : "\n";
        }
        indent(depth);
        out += '}';
        return;
    }
    case Json::value_t::array: {
        if (v.empty())
        {
            out += "[]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < v.size(); ++i)
        {
            indent(depth + 1);
            render(v[i], out, depth + 1);
            out += i + 1 < v.size() ? ",\n" : "\n";
        }
        indent(depth);
        out += ']';
        return;
    }
    case Json::value_t::number_float: {
        const double d = v.get<double>();
        out += std::isfinite(d) ? format_fixed(d) : "null";
        return;
    }
    default:
        out += v.dump();
        return;
    }
}

} // namespace

std::string format_fixed(double value)
{
    auto text = fmt::format("{:.4f}", value);
    if (text == "-0.0000")
        text = "0.0000";
    return text;
}

std::string render_json(const Json &value)
{
    std::string out;
    render(value, out, 0);
    out += '\n';
    return out;
}

Json hz(double frequency_hz)
{
    if (std::isfinite(frequency_hz) && std::nearbyint(frequency_hz) == frequency_hz &&
        std::abs(frequency_hz) < 9e15)
        return static_cast<std::int64_t>(frequency_hz);
    return frequency_hz;
}

} // namespace thzprop::cli
