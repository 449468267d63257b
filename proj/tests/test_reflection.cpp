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
#include "oracles.hpp"

#include <thzprop/error.hpp>
#include <thzprop/reflection.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace thzprop;
namespace oracle = thzprop::test;

namespace
{

double loss(double theta, double eps)
{
    return reflection_loss_db(IncidenceGeometry(theta), Permittivity(eps));
}

double gamma(double theta, double eps)
{
    return fresnel_gamma_perp(IncidenceGeometry(theta), Permittivity(eps)).value;
}

std::vector<ReflectionSample> synthetic(double eps, double f = 142e9)
{
    std::vector<ReflectionSample> out;
    for (double a : {10.0, 30.0, 60.0, 80.0})
        out.push_back({f, a, loss(a, eps)});
    return out;
}

Errc error_of(auto &&fn)
{
    try
    {
        fn();
    }
    catch (const Error &e)
    {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return Errc::invalid_argument;
}

} // namespace

TEST(Fresnel, NormalIncidence)
{
    EXPECT_NEAR(gamma(0.0, 6.4), oracle::gamma_normal_eps_6p4, 1e-15);
    EXPECT_NEAR(loss(0.0, 6.4), oracle::loss_normal_eps_6p4_db, 1e-12);
    EXPECT_NEAR(loss(0.0, 6.4), 7.25, 0.05);
}

TEST(Fresnel, ObliqueIncidence)
{
    EXPECT_NEAR(loss(30.0, 4.7), oracle::loss_30deg_eps_4p7_db, 1e-12);
}

TEST(Fresnel, AgreesWithSnellForm)
{
    for (double eps = 1.1; eps < 30.0; eps += 0.7)
        for (double theta = 0.0; theta < 89.9; theta += 2.5)
            EXPECT_NEAR(gamma(theta, eps), static_cast<double>(oracle::fresnel_via_snell(theta, eps)), 1e-13)
                << "eps=" << eps << " theta=" << theta;
}

TEST(Fresnel, MagnitudeMonotone)
{
    for (double eps : {1.5, 4.7, 6.4, 20.0})
    {
        double prev = 0.0;
        for (double theta = 0.0; theta < 89.5; theta += 1.0)
        {
            const double g = std::abs(gamma(theta, eps));
            EXPECT_GT(g, prev);
            EXPECT_LT(g, 1.0);
            prev = g;
        }
    }
    for (double theta : {0.0, 30.0, 60.0, 80.0})
        EXPECT_GT(std::abs(gamma(theta, 8.0)), std::abs(gamma(theta, 4.0)));
}

TEST(Fresnel, Errors)
{
    EXPECT_EQ(error_of([] { Permittivity(0.5); }), Errc::invalid_argument);
    EXPECT_EQ(error_of([] { IncidenceGeometry(90.0); }), Errc::invalid_argument);
    EXPECT_EQ(error_of([] { IncidenceGeometry(-1.0); }), Errc::invalid_argument);
    EXPECT_EQ(error_of([] { loss(0.0, 1.0); }), Errc::perfect_transmission);
}

TEST(Mmse, RecoversRandomPermittivity)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(1.5, 20.0);
    for (int i = 0; i < 200; ++i)
    {
        const double eps = u(rng);
        const auto est = estimate_permittivity_mmse(synthetic(eps));
        EXPECT_NEAR(est.eps.value(), eps, 1e-3);
        EXPECT_EQ(est.samples_used, 4u);
        EXPECT_LT(est.mse, 1e-12);
    }
}

TEST(Mmse, NoWorseThanFineGrid)
{
    const auto &rows = paper_dataset().reflection;
    for (double f : {28e9, 73e9, 142e9})
    {
        std::vector<ReflectionSample> s;
        for (const auto &r : rows)
            if (r.frequency_hz == f)
                s.push_back(r);
        const auto est = estimate_permittivity_mmse(s);
        const auto objective = [&](double e) { return mmse_objective(s, e); };
        const double grid_best = oracle::grid_argmin(objective, 1.0, 30.0, 1000);
        EXPECT_LE(objective(est.eps.value()), objective(grid_best) + 1e-15);
        EXPECT_NEAR(est.mse, objective(est.eps.value()) / 4.0, 1e-15);
    }
}

TEST(Mmse, MeasuredTableEstimatesRiseWithFrequency)
{
    const auto &d = paper_dataset();
    const double e28 = estimate_permittivity_mmse(d.reflection_at(28e9)).eps.value();
    const double e73 = estimate_permittivity_mmse(d.reflection_at(73e9)).eps.value();
    const double e142 = estimate_permittivity_mmse(d.reflection_at(142e9)).eps.value();
    EXPECT_LT(e28, e73);
    EXPECT_LT(e73, e142);
    EXPECT_NEAR(e28, 4.7, 1.0);
    EXPECT_NEAR(e73, 5.2, 1.0);
    EXPECT_NEAR(e142, 6.4, 1.0);
}

TEST(Mmse, Errors)
{
    const std::vector<ReflectionSample> one = {{142e9, 10.0, 9.81}};
    EXPECT_EQ(error_of([&] { estimate_permittivity_mmse(one); }), Errc::too_few_samples);
    const std::vector<ReflectionSample> mixed = {{142e9, 10.0, 9.81}, {28e9, 30.0, 4.22}};
    EXPECT_EQ(error_of([&] { estimate_permittivity_mmse(mixed); }), Errc::mixed_frequencies);
}

TEST(LinearFit, TwoPointsExact)
{
    const std::vector<ReflectionSample> s = {{142e9, 10.0, 20.0}, {142e9, 60.0, 6.0}};
    const auto r = fit_linear_reflection(s);
    const double g1 = measured_gamma_magnitude(20.0);
    const double g2 = measured_gamma_magnitude(6.0);
    EXPECT_NEAR(r.fit.slope_per_deg, (g2 - g1) / 50.0, 1e-15);
    EXPECT_NEAR(r.fit.evaluate(10.0), g1, 1e-14);
    EXPECT_NEAR(r.fit.evaluate(60.0), g2, 1e-14);
    EXPECT_NEAR(r.rmse, 0.0, 1e-14);
}

TEST(LinearFit, ConstantMagnitudeGivesFlatLine)
{
    const std::vector<ReflectionSample> s = {{73e9, 10.0, 5.0}, {73e9, 40.0, 5.0}, {73e9, 70.0, 5.0}};
    const auto r = fit_linear_reflection(s);
    EXPECT_NEAR(r.fit.slope_per_deg, 0.0, 1e-15);
    EXPECT_NEAR(r.fit.intercept, measured_gamma_magnitude(5.0), 1e-15);
}

TEST(LinearFit, EvaluateClamps)
{
    const LinearReflectionFit fit{0.02, 0.1};
    EXPECT_DOUBLE_EQ(fit.evaluate(100.0), 1.0);
    EXPECT_DOUBLE_EQ(fit.evaluate(-50.0), 0.0);
}

TEST(LinearFit, MeasuredSlopesPositive)
{
    const auto &d = paper_dataset();
    for (double f : {28e9, 73e9, 142e9})
        EXPECT_GT(fit_linear_reflection(d.reflection_at(f)).fit.slope_per_deg, 0.0);
}

TEST(LinearFit, Errors)
{
    const std::vector<ReflectionSample> one = {{142e9, 10.0, 9.81}};
    EXPECT_EQ(error_of([&] { fit_linear_reflection(one); }), Errc::too_few_samples);
    const std::vector<ReflectionSample> same = {{142e9, 30.0, 9.81}, {142e9, 30.0, 7.0}};
    EXPECT_EQ(error_of([&] { fit_linear_reflection(same); }), Errc::degenerate_angles);
}
