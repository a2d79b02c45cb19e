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

#pragma once

#include "nfsample/geometry.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

namespace nfsample
{

enum class Scheme
{
    HalfWavelength,
    WarpedNonuniform,
    OversampledWarped,
    UniformLinearized
};

/// Short names used on the command line and in file headers: half, warped, oversampled, uniform.
std::string to_string(Scheme scheme);
Scheme scheme_from_string(const std::string &name);

struct SchemeParams
{
    double step = 0.5;           // half-wavelength step, in wavelengths
    double alpha1 = 1.5;         // edge value of the x oversampling factor
    double alpha2 = 1.5;         // edge value of the y oversampling factor
    int p = 2;                   // exponent of the sinusoidal oversampling factor
    bool inclusive_edge = false; // uniform scheme: fill the observation span with scanner-resolution steps
    double step_resolution = 0.01;
};

/// Factorized probe grid. Positions are in wavelengths and sorted per axis.
struct SamplingPlan
{
    Scheme scheme = Scheme::HalfWavelength;
    Eigen::VectorXd x;
    Eigen::VectorXd y;
    std::optional<double> step_x; // empty for non-uniform axes
    std::optional<double> step_y;
    SchemeParams params;
    std::vector<std::string> warnings;

    Eigen::Index nx() const { return x.size(); }
    Eigen::Index ny() const { return y.size(); }
    Eigen::Index count() const { return nx() * ny(); }
};

struct PlanStats
{
    long ndf = 0;            // (2[ka eta(Xo)/pi] + 1)(2[kb zeta(Yo)/pi] + 1)
    long count = 0;          // samples in the plan
    long count_halfwave = 0; // (2[Xo/s] + 1)(2[Yo/s] + 1), s = params.step (0.5 lam by default)
    double reduction_pct = 0.0;
    double reduction_pct_asymptotic = 0.0;
};

/// Integer part used by every count formula, tolerant to representation error at exact integers.
long integer_part(double value);

SamplingPlan plan_half_wavelength(const Geometry &g, double step = 0.5);
SamplingPlan plan_warped(const Geometry &g);
SamplingPlan plan_oversampled_warped(const Geometry &g, double alpha1, double alpha2, int p);
SamplingPlan plan_uniform(const Geometry &g, bool inclusive_edge = false, double step_resolution = 0.01);

/// Dispatches on `scheme` using the matching fields of `params`.
SamplingPlan make_plan(const Geometry &g, Scheme scheme, const SchemeParams &params);

/// Uniform steps (lambda/2) sqrt(a^2+d^2)/a and (lambda/2) sqrt(b^2+d^2)/b.
double uniform_step_x(const Geometry &g);
double uniform_step_y(const Geometry &g);

/// Non-redundant sample count (2[ka eta(Xo)/pi] + 1)(2[kb zeta(Yo)/pi] + 1).
long ndf_estimate(const Geometry &g);

PlanStats stats(const SamplingPlan &plan, const Geometry &g);

} // namespace nfsample
