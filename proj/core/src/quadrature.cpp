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
#include "thzprop/quadrature.hpp"

#include "thzprop/error.hpp"

#include <cmath>

namespace thzprop
{

std::vector<QuadratureNode> gauss_legendre(std::size_t n, double a, double b)
{
    if (n == 0)
        throw Error(Errc::invalid_argument, "Gauss-Legendre rule needs at least one node");

    constexpr double pi = 3.14159265358979323846;
    std::vector<QuadratureNode> nodes(n);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    const auto nd = static_cast<double>(n);

    // Roots are symmetric; solve for the upper half only.
    for (std::size_t i = 0; i < (n + 1) / 2; ++i)
    {
        double x = std::cos(pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it)
        {
            double p0 = 1.0, p1 = x;
            for (std::size_t k = 2; k <= n; ++k)
            {
                const auto kd = static_cast<double>(k);
                const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
                p0 = p1;
                p1 = p2;
            }
            dp = nd * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        // Recompute the derivative at the converged root for the weight.
        double p0 = 1.0, p1 = x;
        for (std::size_t k = 2; k <= n; ++k)
        {
            const auto kd = static_cast<double>(k);
            const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
            p0 = p1;
            p1 = p2;
        }
        dp = nd * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);

        nodes[i] = {mid - half * x, half * w};
        nodes[n - 1 - i] = {mid + half * x, half * w};
    }
    return nodes;
}

} // namespace thzprop
