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

#include <cmath>
#include <cstddef>
#include <span>

namespace thzprop
{

/// Real relative permittivity of a lossless dielectric, eps_r >= 1.
class Permittivity
{
public:
    explicit Permittivity(double eps_r);
    double value() const noexcept { return eps_r_; }

private:
    double eps_r_;
};

/// Incident angle measured from the surface normal, in [0, 90) degrees.
class IncidenceGeometry
{
public:
    explicit IncidenceGeometry(double incident_angle_deg);
    double degrees() const noexcept { return deg_; }
    double radians() const noexcept { return deg_to_rad(deg_); }

private:
    double deg_;
};

struct ReflectionCoefficient
{
    double value = 0.0; ///< signed field ratio E_r / E_i
    double magnitude() const noexcept { return std::abs(value); }
};

/// Fresnel coefficient for the E-field normal to the plane of incidence:
///   (cos t - sqrt(eps - sin^2 t)) / (cos t + sqrt(eps - sin^2 t))
ReflectionCoefficient fresnel_gamma_perp(IncidenceGeometry theta, Permittivity eps);

/// -20 log10 |Gamma_perp|. Throws PerfectTransmission when |Gamma_perp| vanishes.
double reflection_loss_db(IncidenceGeometry theta, Permittivity eps);

/// |Gamma|^2 implied by a measured positive reflection loss in dB.
inline double measured_gamma_squared(double reflection_loss_db)
{
    return std::pow(10.0, -reflection_loss_db / 10.0);
}

inline double measured_gamma_magnitude(double reflection_loss_db)
{
    return std::pow(10.0, -reflection_loss_db / 20.0);
}

struct PermittivityEstimate
{
    Permittivity eps{1.0};
    double mse = 0.0; ///< mean squared |Gamma|^2 residual at eps
    std::size_t samples_used = 0;
};

/// Sum over samples of (|Gamma_meas|^2 - |Gamma(theta; eps_r)|^2)^2.
double mmse_objective(std::span<const ReflectionSample> samples, double eps_r);

inline constexpr double permittivity_search_min = 1.0;
inline constexpr double permittivity_search_max = 30.0;

/// Minimizes mmse_objective over eps_r in [1, 30]: coarse 300-point grid to
/// bracket the minimum, then golden-section refinement.
/// Errors: TooFewSamples (< 2), MixedFrequencies.
PermittivityEstimate estimate_permittivity_mmse(std::span<const ReflectionSample> samples);

/// |Gamma_perp|(theta) ~= slope * theta_deg + intercept, clamped to [0, 1].
struct LinearReflectionFit
{
    double slope_per_deg = 0.0;
    double intercept = 0.0;

    double evaluate(double theta_deg) const noexcept;
};

struct LinearFitResult
{
    LinearReflectionFit fit;
    double rmse = 0.0;
    std::size_t samples_used = 0;
};

/// Ordinary least squares of measured |Gamma_perp| against incident angle in
/// degrees. Errors: TooFewSamples (< 2), DegenerateAngles (all angles equal).
LinearFitResult fit_linear_reflection(std::span<const ReflectionSample> samples);

} // namespace thzprop
