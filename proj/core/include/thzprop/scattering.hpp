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

#include "thzprop/quadrature.hpp"
#include "thzprop/reflection.hpp"

#include <span>
#include <vector>

namespace thzprop
{

/// Dual-lobe directive scattering parameters.
///
/// The scattered intensity towards unit direction d is
///
///   S^2 cos(theta_i) / F * [ L * g(psi_f, a_f) + (1 - L) * g(psi_b, a_b) ],
///   g(psi, a) = ((1 + cos psi) / 2)^a
///
/// where psi_f is measured from the specular direction, psi_b from the
/// backscatter direction (back towards the source) and F normalizes the
/// bracket to unit integral over the upper hemisphere.
struct DsParameters
{
    double scattering_coefficient = 0.4; ///< S in [0, 1]
    double forward_weight = 0.9;         ///< Lambda in [0, 1]
    int forward_sharpness = 4;           ///< alpha_r >= 1
    int backward_sharpness = 4;          ///< alpha_i >= 1

    void validate() const;
};

/// Unit vector in the frame where the surface is z = 0 and the plane of
/// incidence is y = 0. The source sits at x < 0, so the incident wave travels
/// towards +x.
struct Direction
{
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;
};

/// Observation arc convention: the receiver sits on a semicircle in the plane
/// of incidence. 0 deg lies along the surface on the source side, 90 deg on
/// the normal, 180 deg along the surface on the far side. A source at incident
/// angle theta_i sits at 90 - theta_i; its specular image at 90 + theta_i.
Direction observation_direction(double arc_deg);
double specular_arc_angle_deg(double incident_angle_deg) noexcept;
Direction specular_direction(double incident_angle_deg);
Direction backscatter_direction(double incident_angle_deg);

/// ((1 + cos psi) / 2)^alpha. Requires alpha >= 1.
double ds_lobe_gain(double psi_deg, int alpha);

/// Unnormalized dual-lobe bracket L * g_f + (1 - L) * g_b towards d.
double ds_pattern(const DsParameters &params, double incident_angle_deg, const Direction &d);

/// Hemispherical integral of ds_pattern() for the given incidence.
double ds_normalization(const DsParameters &params, double incident_angle_deg, HemisphereGrid grid = {});

/// Scattered intensity per unit incident power density on the patch:
/// S^2 cos(theta_i) ds_pattern(d) / F. Its hemispherical integral is
/// S^2 cos(theta_i).
double scattered_intensity(const DsParameters &params, double incident_angle_deg, double normalization,
                           const Direction &d);

struct ScatterGeometry
{
    double incident_angle_deg = 0.0;
    std::vector<double> observation_angles_deg; ///< arc convention, [0, 180]
    double tx_distance_m = 1.5;
    double rx_distance_m = 1.5;

    /// 10 deg to 170 deg in 10 deg steps.
    static std::vector<double> measured_arc();
};

struct ScatterPatternPoint
{
    double observation_angle_deg = 0.0;
    double relative_power_db = 0.0; ///< relative to the pattern peak, <= 0
};

struct ScatterPattern
{
    std::vector<ScatterPatternPoint> points;
    double specular_angle_deg = 0.0;
    double peak_angle_deg = 0.0;
    /// Peak received power relative to a free-space link of the unfolded
    /// length tx_distance + rx_distance.
    double peak_power_db = 0.0;
};

/// Received power on the observation arc as the incoherent sum of
///  - the specular term |Gamma_perp|^2 weighted by a Gaussian link beam
///    centered on the specular angle, and
///  - the dual-lobe scattered term from the illuminated patch,
/// normalized so the peak is 0 dB.
///
/// The link beam is the convolution of identical Gaussian TX and RX main
/// lobes (width sqrt(2) * HPBW). The illuminated patch is the antenna beam
/// solid angle times the squared reduced distance r_t r_r / (r_t + r_r), which
/// keeps the result reciprocal in r_t, r_r and invariant to scaling both.
///
/// Errors: InvalidArgument for fewer than 2 angles or angles off the arc,
/// MissingSpecularAngle when the sweep lacks 90 + theta_i.
ScatterPattern predict_pattern(const ScatterGeometry &geom, Permittivity eps, const DsParameters &params,
                               double antenna_hpbw_deg);

/// Peak power minus the strongest point on the source side (arc < 90 deg).
/// Errors: OneSidedPattern when either side of the normal has no points.
double backscatter_margin_db(std::span<const ScatterPatternPoint> pattern, double incident_angle_deg);

inline constexpr double smooth_backscatter_margin_db = 20.0;
inline constexpr double smooth_specular_window_deg = 10.0;
inline constexpr double smooth_specular_window_drop_db = 10.0;

/// True when the backscatter margin exceeds 20 dB and every point within
/// +-10 deg of the specular angle stays within 10 dB of the peak.
bool classify_smooth(std::span<const ScatterPatternPoint> pattern, double incident_angle_deg);

} // namespace thzprop
