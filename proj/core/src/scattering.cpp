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
#include "thzprop/scattering.hpp"

#include "thzprop/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace thzprop
{
namespace
{

constexpr double angle_match_deg = 1e-6;

double dot(const Direction &a, const Direction &b) noexcept
{
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

double lobe(double cos_psi, int alpha)
{
    const double base = std::clamp(0.5 * (1.0 + cos_psi), 0.0, 1.0);
    return std::pow(base, alpha);
}

double peak_of(std::span<const ScatterPatternPoint> pattern)
{
    double peak = -std::numeric_limits<double>::infinity();
    for (const auto &p : pattern)
        peak = std::max(peak, p.relative_power_db);
    return peak;
}

} // namespace

void DsParameters::validate() const
{
    if (!(scattering_coefficient >= 0.0 && scattering_coefficient <= 1.0))
        throw Error(Errc::invalid_argument, "scattering coefficient S must lie in [0, 1]");
    if (!(forward_weight >= 0.0 && forward_weight <= 1.0))
        throw Error(Errc::invalid_argument, "lobe weight Lambda must lie in [0, 1]");
    if (forward_sharpness < 1 || backward_sharpness < 1)
        throw Error(Errc::invalid_argument, "lobe sharpness must be a positive integer");
}

Direction observation_direction(double arc_deg)
{
    // Signed angle from the normal, positive on the far side.
    const double t = deg_to_rad(arc_deg - 90.0);
    return {std::sin(t), 0.0, std::cos(t)};
}

double specular_arc_angle_deg(double incident_angle_deg) noexcept
{
    return 90.0 + incident_angle_deg;
}

Direction specular_direction(double incident_angle_deg)
{
    const double t = deg_to_rad(incident_angle_deg);
    return {std::sin(t), 0.0, std::cos(t)};
}

Direction backscatter_direction(double incident_angle_deg)
{
    const double t = deg_to_rad(incident_angle_deg);
    return {-std::sin(t), 0.0, std::cos(t)};
}

double ds_lobe_gain(double psi_deg, int alpha)
{
    if (alpha < 1)
        throw Error(Errc::invalid_argument, "lobe sharpness must be >= 1");
    return lobe(std::cos(deg_to_rad(psi_deg)), alpha);
}

double ds_pattern(const DsParameters &params, double incident_angle_deg, const Direction &d)
{
    const double forward = lobe(dot(d, specular_direction(incident_angle_deg)), params.forward_sharpness);
    const double backward = lobe(dot(d, backscatter_direction(incident_angle_deg)), params.backward_sharpness);
    return params.forward_weight * forward + (1.0 - params.forward_weight) * backward;
}

double ds_normalization(const DsParameters &params, double incident_angle_deg, HemisphereGrid grid)
{
    params.validate();
    IncidenceGeometry{incident_angle_deg};

    const Direction spec = specular_direction(incident_angle_deg);
    const Direction back = backscatter_direction(incident_angle_deg);
    return integrate_hemisphere(
        [&](double x, double y, double z) {
            const Direction d{x, y, z};
            return params.forward_weight * lobe(dot(d, spec), params.forward_sharpness) +
                   (1.0 - params.forward_weight) * lobe(dot(d, back), params.backward_sharpness);
        },
        grid);
}

double scattered_intensity(const DsParameters &params, double incident_angle_deg, double normalization,
                           const Direction &d)
{
    const double s = params.scattering_coefficient;
    return s * s * std::cos(deg_to_rad(incident_angle_deg)) * ds_pattern(params, incident_angle_deg, d) /
           normalization;
}

std::vector<double> ScatterGeometry::measured_arc()
{
    std::vector<double> arc;
    for (int a = 10; a <= 170; a += 10)
        arc.push_back(static_cast<double>(a));
    return arc;
}

ScatterPattern predict_pattern(const ScatterGeometry &geom, Permittivity eps, const DsParameters &params,
                               double antenna_hpbw_deg)
{
    params.validate();
    const IncidenceGeometry theta(geom.incident_angle_deg);
    if (!(antenna_hpbw_deg > 0.0 && antenna_hpbw_deg < 180.0))
        throw Error(Errc::invalid_argument, "antenna HPBW must lie in (0, 180) degrees");
    if (!(geom.tx_distance_m > 0.0 && geom.rx_distance_m > 0.0))
        throw Error(Errc::invalid_argument, "TX and RX distances must be positive");
    if (geom.observation_angles_deg.size() < 2)
        throw Error(Errc::invalid_argument, "a pattern sweep needs at least 2 observation angles");
    for (double a : geom.observation_angles_deg)
        if (!(a >= 0.0 && a <= 180.0))
            throw Error(Errc::invalid_argument, "observation angle " + std::to_string(a) + " is off the arc");

    const double specular = specular_arc_angle_deg(theta.degrees());
    const bool has_specular =
        std::any_of(geom.observation_angles_deg.begin(), geom.observation_angles_deg.end(),
                    [&](double a) { return std::abs(a - specular) <= angle_match_deg; });
    if (!has_specular)
        throw Error(Errc::missing_specular_angle,
                    "sweep does not include the specular angle " + std::to_string(specular) + " deg");

    const double gamma2 = std::pow(fresnel_gamma_perp(theta, eps).value, 2);
    const double norm = ds_normalization(params, theta.degrees());

    const double hpbw = deg_to_rad(antenna_hpbw_deg);
    const double beam_solid_angle = pi * hpbw * hpbw / (4.0 * std::log(2.0));
    const double link_hpbw_deg = std::sqrt(2.0) * antenna_hpbw_deg;

    // Both terms are expressed relative to free space over the unfolded
    // length r_t + r_r. With the patch area Omega * (r_t r_r / (r_t + r_r))^2,
    // the scattered term's 1 / (r_t r_r)^2 spreading reduces to the same
    // 1 / (r_t + r_r)^2, so the distances cancel.
    const double rt = geom.tx_distance_m;
    const double rr = geom.rx_distance_m;
    const double reduced = rt * rr / (rt + rr);
    const double patch_area = beam_solid_angle * reduced * reduced;
    const double unfolded2 = (rt + rr) * (rt + rr);
    const double scatter_scale = patch_area * unfolded2 / (rt * rt * rr * rr);

    std::vector<double> linear;
    linear.reserve(geom.observation_angles_deg.size());
    for (double arc : geom.observation_angles_deg)
    {
        const double offset = arc - specular;
        const double beam = std::exp(-4.0 * std::log(2.0) * (offset / link_hpbw_deg) * (offset / link_hpbw_deg));
        const double scattered = scattered_intensity(params, theta.degrees(), norm, observation_direction(arc));
        linear.push_back(gamma2 * beam + scatter_scale * scattered);
    }

    const auto peak_it = std::max_element(linear.begin(), linear.end());
    const double peak = *peak_it;

    ScatterPattern out;
    out.specular_angle_deg = specular;
    out.peak_angle_deg = geom.observation_angles_deg[static_cast<std::size_t>(peak_it - linear.begin())];
    out.peak_power_db = 10.0 * std::log10(peak);
    out.points.reserve(linear.size());
    for (std::size_t i = 0; i < linear.size(); ++i)
        out.points.push_back({geom.observation_angles_deg[i], 10.0 * std::log10(linear[i] / peak)});
    return out;
}

double backscatter_margin_db(std::span<const ScatterPatternPoint> pattern, double incident_angle_deg)
{
    IncidenceGeometry{incident_angle_deg};

    double source_side = -std::numeric_limits<double>::infinity();
    bool far_side = false;
    for (const auto &p : pattern)
    {
        if (p.observation_angle_deg < 90.0)
            source_side = std::max(source_side, p.relative_power_db);
        else if (p.observation_angle_deg > 90.0)
            far_side = true;
    }
    if (!far_side || source_side == -std::numeric_limits<double>::infinity())
        throw Error(Errc::one_sided_pattern, "pattern must cover both sides of the surface normal");

    return std::max(0.0, peak_of(pattern) - source_side);
}

bool classify_smooth(std::span<const ScatterPatternPoint> pattern, double incident_angle_deg)
{
    if (backscatter_margin_db(pattern, incident_angle_deg) <= smooth_backscatter_margin_db)
        return false;

    const double peak = peak_of(pattern);
    const double specular = specular_arc_angle_deg(incident_angle_deg);
    for (const auto &p : pattern)
        if (std::abs(p.observation_angle_deg - specular) <= smooth_specular_window_deg + angle_match_deg &&
            p.relative_power_db < peak - smooth_specular_window_drop_db)
            return false;
    return true;
}

} // namespace thzprop
