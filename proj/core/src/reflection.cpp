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
#include "thzprop/reflection.hpp"

#include "thzprop/error.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace thzprop
{

Permittivity::Permittivity(double eps_r) : eps_r_(eps_r)
{
    if (!std::isfinite(eps_r) || eps_r < 1.0)
        throw Error(Errc::invalid_argument, "relative permittivity must be >= 1, got " + std::to_string(eps_r));
}

IncidenceGeometry::IncidenceGeometry(double incident_angle_deg) : deg_(incident_angle_deg)
{
    if (!(incident_angle_deg >= 0.0 && incident_angle_deg < 90.0))
        throw Error(Errc::invalid_argument,
                    "incident angle must lie in [0, 90) degrees, got " + std::to_string(incident_angle_deg));
}

ReflectionCoefficient fresnel_gamma_perp(IncidenceGeometry theta, Permittivity eps)
{
    const double c = std::cos(theta.radians());
    const double s = std::sin(theta.radians());
    // eps >= 1 keeps the radicand non-negative; max() absorbs rounding.
    const double root = std::sqrt(std::max(0.0, eps.value() - s * s));
    return {(c - root) / (c + root)};
}

double reflection_loss_db(IncidenceGeometry theta, Permittivity eps)
{
    const double mag = fresnel_gamma_perp(theta, eps).magnitude();
    if (mag <= 1e-12)
        throw Error(Errc::perfect_transmission, "reflection coefficient vanishes; loss is unbounded");
    return -20.0 * std::log10(mag);
}

double mmse_objective(std::span<const ReflectionSample> samples, double eps_r)
{
    const Permittivity eps(eps_r);
    double sum = 0.0;
    for (const auto &s : samples)
    {
        const double g = fresnel_gamma_perp(IncidenceGeometry(s.incident_angle_deg), eps).value;
        const double r = measured_gamma_squared(s.reflection_loss_db) - g * g;
        sum += r * r;
    }
    return sum;
}

PermittivityEstimate estimate_permittivity_mmse(std::span<const ReflectionSample> samples)
{
    if (samples.size() < 2)
        throw Error(Errc::too_few_samples, "permittivity estimation needs at least 2 samples");
    for (const auto &s : samples)
        if (!same_frequency(s.frequency_hz, samples.front().frequency_hz))
            throw Error(Errc::mixed_frequencies, "reflection samples span more than one frequency");

    constexpr std::size_t grid_points = 300;
    const double lo = permittivity_search_min;
    const double hi = permittivity_search_max;
    const double step = (hi - lo) / static_cast<double>(grid_points - 1);
    const auto objective = [&](double e) { return mmse_objective(samples, e); };

    std::size_t best = 0;
    double best_value = objective(lo);
    for (std::size_t i = 1; i < grid_points; ++i)
    {
        const double v = objective(lo + step * static_cast<double>(i));
        if (v < best_value)
        {
            best_value = v;
            best = i;
        }
    }

    double a = lo + step * static_cast<double>(best == 0 ? 0 : best - 1);
    double b = std::min(hi, lo + step * static_cast<double>(best + 1));

    // Golden-section search. The bracket shrinks well below the 1e-4
    // tolerance; the extra iterations are cheap and make the result stable
    // against grid cross-checks.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = objective(x1);
    double f2 = objective(x2);
    for (int it = 0; it < 200 && (b - a) > 1e-10; ++it)
    {
        if (f1 <= f2)
        {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = objective(x1);
        }
        else
        {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = objective(x2);
        }
    }

    // Keep whichever candidate is lowest, including the grid point itself.
    std::array<double, 3> candidates = {0.5 * (a + b), x1, x2};
    double eps_best = lo + step * static_cast<double>(best);
    double f_best = best_value;
    for (double c : candidates)
    {
        const double v = objective(c);
        if (v < f_best)
        {
            f_best = v;
            eps_best = c;
        }
    }

    return {Permittivity(eps_best), f_best / static_cast<double>(samples.size()), samples.size()};
}

double LinearReflectionFit::evaluate(double theta_deg) const noexcept
{
    return std::clamp(slope_per_deg * theta_deg + intercept, 0.0, 1.0);
}

LinearFitResult fit_linear_reflection(std::span<const ReflectionSample> samples)
{
    if (samples.size() < 2)
        throw Error(Errc::too_few_samples, "linear reflection fit needs at least 2 samples");

    const double n = static_cast<double>(samples.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (const auto &s : samples)
    {
        mean_x += s.incident_angle_deg;
        mean_y += measured_gamma_magnitude(s.reflection_loss_db);
    }
    mean_x /= n;
    mean_y /= n;

    double sxx = 0.0, sxy = 0.0;
    for (const auto &s : samples)
    {
        const double dx = s.incident_angle_deg - mean_x;
        sxx += dx * dx;
        sxy += dx * (measured_gamma_magnitude(s.reflection_loss_db) - mean_y);
    }
    if (sxx <= 0.0)
        throw Error(Errc::degenerate_angles, "all samples share one incident angle");

    LinearFitResult result;
    result.fit.slope_per_deg = sxy / sxx;
    result.fit.intercept = mean_y - result.fit.slope_per_deg * mean_x;
    result.samples_used = samples.size();

    double sse = 0.0;
    for (const auto &s : samples)
    {
        const double r = measured_gamma_magnitude(s.reflection_loss_db) -
                         (result.fit.slope_per_deg * s.incident_angle_deg + result.fit.intercept);
        sse += r * r;
    }
    result.rmse = std::sqrt(sse / n);
    return result;
}

} // namespace thzprop
