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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace thzprop
{

/// Failure categories raised by the library. The CLI prints the
/// CamelCase name returned by error_name() on stderr.
enum class Errc
{
    invalid_argument,
    file_not_found,
    missing_column,
    bad_numeric,
    invariant_violation,
    perfect_transmission,
    too_few_samples,
    mixed_frequencies,
    degenerate_angles,
    missing_specular_angle,
    one_sided_pattern,
    over_unity_budget,
    below_reference_distance,
    all_at_reference_distance,
};

std::string_view error_name(Errc code) noexcept;

class Error : public std::runtime_error
{
public:
    Error(Errc code, const std::string &what);

    /// For ingestion errors: 1-based data row (header excluded) and column name.
    Error(Errc code, const std::string &what, std::size_t row, std::string column = {});

    Errc code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }
    const std::optional<std::size_t> &row() const noexcept { return row_; }
    const std::string &column() const noexcept { return column_; }

private:
    Errc code_;
    std::optional<std::size_t> row_;
    std::string column_;
};

} // namespace thzprop
