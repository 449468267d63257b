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

#include <cmath>
#include <cstddef>
#include <vector>

namespace thzprop
{

struct QuadratureNode
{
    double x = 0.0;
    double w = 0.0;
};

/// n-point Gauss-Legendre rule mapped onto [a, b]. Nodes come from Newton
/// iteration on P_n, accurate to a few ulps for n up to several hundred.
std::vector<QuadratureNode> gauss_legendre(std::size_t n, double a, double b);

struct HemisphereGrid
{
    std::size_t elevation_points = 64;
    std::size_t azimuth_points = 128;

    HemisphereGrid doubled() const noexcept { return {2 * elevation_points, 2 * azimuth_points}; }
};

/// Integrates f(x, y, z) over the unit upper hemisphere (z >= 0) with respect
/// to solid angle: Gauss-Legendre in polar angle, periodic trapezoid in azimuth.
template <class F> double integrate_hemisphere(F &&f, HemisphereGrid grid = {})
{
    constexpr double pi = 3.14159265358979323846;
    const auto nodes = gauss_legendre(grid.elevation_points, 0.0, pi / 2.0);
    const double dphi = 2.0 * pi / static_cast<double>(grid.azimuth_points);

    std::vector<double> cos_phi(grid.azimuth_points), sin_phi(grid.azimuth_points);
    for (std::size_t j = 0; j < grid.azimuth_points; ++j)
    {
        cos_phi[j] = std::cos(dphi * static_cast<double>(j));
        sin_phi[j] = std::sin(dphi * static_cast<double>(j));
    }

    double total = 0.0;
    for (const auto &node : nodes)
    {
        const double st = std::sin(node.x);
        const double ct = std::cos(node.x);
        double ring = 0.0;
        for (std::size_t j = 0; j < grid.azimuth_points; ++j)
            ring += f(st * cos_phi[j], st * sin_phi[j], ct);
        total += node.w * st * ring * dphi;
    }
    return total;
}

} // namespace thzprop
