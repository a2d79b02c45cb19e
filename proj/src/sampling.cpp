// SPDX-License-Identifier: Apache-2.0
//
// nfsample - planar near-field sampling and reconstruction
// Copyright (C) 2026 The nfsample authors
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

#include "nfsample/sampling.hpp"

#include "nfsample/error.hpp"
#include "nfsample/io.hpp"
#include "nfsample/warp.hpp"

#include <cmath>

namespace nfsample
{

std::string to_string(Scheme scheme)
{
    switch (scheme)
    {
    case Scheme::HalfWavelength: return "half";
    case Scheme::WarpedNonuniform: return "warped";
    case Scheme::OversampledWarped: return "oversampled";
    case Scheme::UniformLinearized: return "uniform";
    }
    return "unknown";
}

Scheme scheme_from_string(const std::string &name)
{
    if (name == "half" || name == "half-wavelength")
        return Scheme::HalfWavelength;
    if (name == "warped")
        return Scheme::WarpedNonuniform;
    if (name == "oversampled")
        return Scheme::OversampledWarped;
    if (name == "uniform")
        return Scheme::UniformLinearized;
    throw Error(ErrorCode::Config, "unknown sampling scheme '" + name + "'");
}

long integer_part(double value)
{
    const double magnitude = std::floor(std::abs(value) + 1e-9);
    return static_cast<long>(value < 0.0 ? -magnitude : magnitude);
}

namespace
{

Eigen::VectorXd centered_axis(double step, long half_count)
{
    Eigen::VectorXd axis(2 * half_count + 1);
    for (long i = -half_count; i <= half_count; ++i)
        axis[i + half_count] = static_cast<double>(i) * step;
    return axis;
}

// n points with spacing `step`, symmetric about 0; staggered when n is even.
Eigen::VectorXd symmetric_axis(double step, long n)
{
    Eigen::VectorXd axis(n);
    const double center = 0.5 * static_cast<double>(n - 1);
    for (long i = 0; i < n; ++i)
        axis[i] = (static_cast<double>(i) - center) * step;
    return axis;
}

template <typename Invert>
Eigen::VectorXd warped_axis(long half_count, double warped_step, Invert &&invert)
{
    Eigen::VectorXd axis(2 * half_count + 1);
    axis[half_count] = 0.0;
    for (long i = 1; i <= half_count; ++i)
    {
        const double x = invert(static_cast<double>(i) * warped_step);
        axis[half_count + i] = x;
        axis[half_count - i] = -x;
    }
    return axis;
}

void require_increasing(const Eigen::VectorXd &axis, const char *name)
{
    for (Eigen::Index i = 1; i < axis.size(); ++i)
        if (!(axis[i] > axis[i - 1]))
            throw Error(ErrorCode::NoRoot, std::string("non-monotone warped variable along ") + name +
                                               "; choose other oversampling constants");
}

} // namespace

double uniform_step_x(const Geometry &g) { return AxisWarp<double>(g.a, g.d).uniform_step(); }
double uniform_step_y(const Geometry &g) { return AxisWarp<double>(g.b, g.d).uniform_step(); }

SamplingPlan plan_half_wavelength(const Geometry &g, double step)
{
    validate(g);
    if (!(step > 0.0))
        throw Error(ErrorCode::NonPositiveStep, "sampling step must be positive, got " + format_number(step));

    SamplingPlan plan;
    plan.scheme = Scheme::HalfWavelength;
    plan.params.step = step;
    plan.x = centered_axis(step, integer_part(g.x_obs / step));
    plan.y = centered_axis(step, integer_part(g.y_obs / step));
    plan.step_x = step;
    plan.step_y = step;
    if (step > 0.5 + 1e-12)
        plan.warnings.push_back("step " + format_number(step) + " lam exceeds half a wavelength");
    return plan;
}

SamplingPlan plan_warped(const Geometry &g)
{
    validate(g);
    const AxisWarp<double> wx(g.a, g.d), wy(g.b, g.d);

    SamplingPlan plan;
    plan.scheme = Scheme::WarpedNonuniform;
    const long n1 = integer_part(wx.eta(g.x_obs) / wx.warped_step());
    const long n2 = integer_part(wy.eta(g.y_obs) / wy.warped_step());
    plan.x = warped_axis(n1, wx.warped_step(), [&](double v) { return wx.invert_eta(v); });
    plan.y = warped_axis(n2, wy.warped_step(), [&](double v) { return wy.invert_eta(v); });

    if (g.x_obs > g.a)
        plan.warnings.push_back("Xo > a: the warped series under-samples the field outside the source extent along x");
    if (g.y_obs > g.b)
        plan.warnings.push_back("Yo > b: the warped series under-samples the field outside the source extent along y");
    return plan;
}

SamplingPlan plan_oversampled_warped(const Geometry &g, double alpha1, double alpha2, int p)
{
    validate(g);
    const SinusoidalWarp<double> wx(AxisWarp<double>(g.a, g.d), alpha1, p, g.x_obs);
    const SinusoidalWarp<double> wy(AxisWarp<double>(g.b, g.d), alpha2, p, g.y_obs);

    SamplingPlan plan;
    plan.scheme = Scheme::OversampledWarped;
    plan.params.alpha1 = alpha1;
    plan.params.alpha2 = alpha2;
    plan.params.p = p;

    const double step_x = wx.base().warped_step();
    const double step_y = wy.base().warped_step();
    const long m1 = integer_part(wx.value(g.x_obs) / step_x);
    const long m2 = integer_part(wy.value(g.y_obs) / step_y);
    plan.x = warped_axis(m1, step_x, [&](double v) { return wx.invert(v); });
    plan.y = warped_axis(m2, step_y, [&](double v) { return wy.invert(v); });
    require_increasing(plan.x, "x");
    require_increasing(plan.y, "y");

    if (alpha1 < 1.0 || alpha2 < 1.0)
        plan.warnings.push_back("alpha < 1 lowers the sampling rate towards the edges (under-sampling)");
    return plan;
}

SamplingPlan plan_uniform(const Geometry &g, bool inclusive_edge, double step_resolution)
{
    validate(g);
    SamplingPlan plan;
    plan.scheme = Scheme::UniformLinearized;
    plan.params.inclusive_edge = inclusive_edge;
    plan.params.step_resolution = step_resolution;

    double dx = uniform_step_x(g);
    double dy = uniform_step_y(g);
    if (!inclusive_edge)
    {
        plan.x = centered_axis(dx, integer_part(g.x_obs / dx));
        plan.y = centered_axis(dy, integer_part(g.y_obs / dy));
    }
    else
    {
        if (!(step_resolution > 0.0))
            throw Error(ErrorCode::NonPositiveStep, "step resolution must be positive");
        // Steps truncated to the scanner resolution; the grid then fills [-Xo, Xo].
        dx = static_cast<double>(integer_part(dx / step_resolution)) * step_resolution;
        dy = static_cast<double>(integer_part(dy / step_resolution)) * step_resolution;
        if (!(dx > 0.0) || !(dy > 0.0))
            throw Error(ErrorCode::NonPositiveStep, "step resolution coarser than the uniform step");
        plan.x = symmetric_axis(dx, integer_part(2.0 * g.x_obs / dx) + 1);
        plan.y = symmetric_axis(dy, integer_part(2.0 * g.y_obs / dy) + 1);
    }
    plan.step_x = dx;
    plan.step_y = dy;
    return plan;
}

namespace
{

SamplingPlan dispatch(const Geometry &g, Scheme scheme, const SchemeParams &params)
{
    switch (scheme)
    {
    case Scheme::HalfWavelength:
        return plan_half_wavelength(g, params.step);
    case Scheme::WarpedNonuniform:
        return plan_warped(g);
    case Scheme::OversampledWarped:
        return plan_oversampled_warped(g, params.alpha1, params.alpha2, params.p);
    case Scheme::UniformLinearized:
        return plan_uniform(g, params.inclusive_edge, params.step_resolution);
    }
    throw Error(ErrorCode::Config, "unknown sampling scheme");
}

} // namespace

SamplingPlan make_plan(const Geometry &g, Scheme scheme, const SchemeParams &params)
{
    SamplingPlan plan = dispatch(g, scheme, params);
    plan.params = params;
    return plan;
}

long ndf_estimate(const Geometry &g)
{
    validate(g);
    const AxisWarp<double> wx(g.a, g.d), wy(g.b, g.d);
    return (2 * integer_part(wx.eta(g.x_obs) / wx.warped_step()) + 1) *
           (2 * integer_part(wy.eta(g.y_obs) / wy.warped_step()) + 1);
}

PlanStats stats(const SamplingPlan &plan, const Geometry &g)
{
    const AxisWarp<double> wx(g.a, g.d), wy(g.b, g.d);
    PlanStats s;
    s.ndf = ndf_estimate(g);
    s.count = static_cast<long>(plan.count());
    const double ref = plan.params.step > 0.0 ? plan.params.step : 0.5;
    s.count_halfwave = (2 * integer_part(g.x_obs / ref) + 1) * (2 * integer_part(g.y_obs / ref) + 1);
    s.reduction_pct = (1.0 - static_cast<double>(s.count) / static_cast<double>(s.count_halfwave)) * 100.0;
    s.reduction_pct_asymptotic = (1.0 - g.a * g.b / (wx.center_distance() * wy.center_distance())) * 100.0;
    return s;
}

} // namespace nfsample
