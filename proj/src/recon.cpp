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

#include "nfsample/recon.hpp"

#include "nfsample/error.hpp"
#include "nfsample/warp.hpp"

#include <cmath>
#include <numbers>

namespace nfsample
{

Interpolant::Interpolant(SamplingPlan plan, Eigen::MatrixXcd samples, Geometry geometry)
    : plan_(std::move(plan)), samples_(std::move(samples)), geometry_(geometry)
{
    validate(geometry_);
    if (samples_.rows() != plan_.ny() || samples_.cols() != plan_.nx())
        throw Error(ErrorCode::GridMismatch, "sample matrix shape does not match the sampling plan");
    const bool uniform = plan_.scheme == Scheme::HalfWavelength || plan_.scheme == Scheme::UniformLinearized;
    if (uniform && (!plan_.step_x || !plan_.step_y))
        throw Error(ErrorCode::NonUniformGrid, "uniform series requires plan steps");
}

bool Interpolant::covers(double x, double y) const
{
    return std::abs(x) <= geometry_.x_obs + 1e-12 && std::abs(y) <= geometry_.y_obs + 1e-12;
}

Eigen::MatrixXcd Interpolant::axis_basis(bool along_x, const Eigen::VectorXd &ts, Eigen::VectorXcd &outer) const
{
    constexpr double k = Geometry::k();
    constexpr double pi = std::numbers::pi;

    const Eigen::VectorXd &nodes = along_x ? plan_.x : plan_.y;
    const double source_half = along_x ? geometry_.a : geometry_.b;
    const double obs_half = along_x ? geometry_.x_obs : geometry_.y_obs;
    const AxisWarp<double> warp(source_half, geometry_.d);
    const Eigen::Index n = nodes.size();

    Eigen::MatrixXcd basis(ts.size(), n);
    outer.resize(ts.size());

    const auto phase = [&](double t) { return k * source_half * warp.gamma(t); };

    switch (plan_.scheme)
    {
    case Scheme::HalfWavelength:
    case Scheme::UniformLinearized:
    {
        const double step = along_x ? *plan_.step_x : *plan_.step_y;
        const bool demodulate = plan_.scheme == Scheme::UniformLinearized;
        for (Eigen::Index i = 0; i < ts.size(); ++i)
        {
            outer[i] = demodulate ? std::polar(1.0, -phase(ts[i])) : cplx(1.0, 0.0);
            for (Eigen::Index p = 0; p < n; ++p)
            {
                const double s = sinc(pi * (ts[i] - nodes[p]) / step);
                basis(i, p) = demodulate ? std::polar(s, phase(nodes[p])) : cplx(s, 0.0);
            }
        }
        break;
    }
    case Scheme::WarpedNonuniform:
    case Scheme::OversampledWarped:
    {
        const bool oversampled = plan_.scheme == Scheme::OversampledWarped;
        const double alpha = along_x ? plan_.params.alpha1 : plan_.params.alpha2;
        const auto warped = [&](double t) {
            return oversampled ? chi_sinusoidal(t, alpha, plan_.params.p, obs_half) * warp.eta(t) : warp.eta(t);
        };
        const double scale = k * source_half;
        const Eigen::Index half = (n - 1) / 2;
        Eigen::VectorXcd node_phase(n);
        for (Eigen::Index p = 0; p < n; ++p)
            node_phase[p] = std::polar(1.0, phase(nodes[p]));
        for (Eigen::Index i = 0; i < ts.size(); ++i)
        {
            outer[i] = std::polar(1.0, -phase(ts[i]));
            const double w = scale * warped(ts[i]);
            for (Eigen::Index p = 0; p < n; ++p)
                basis(i, p) = node_phase[p] * sinc(w - static_cast<double>(p - half) * pi);
        }
        break;
    }
    }
    return basis;
}

Eigen::MatrixXcd Interpolant::evaluate(const Eigen::VectorXd &xs, const Eigen::VectorXd &ys) const
{
    Eigen::VectorXcd px, py;
    const Eigen::MatrixXcd bx = axis_basis(true, xs, px);
    const Eigen::MatrixXcd by = axis_basis(false, ys, py);
    Eigen::MatrixXcd out = by * samples_ * bx.transpose();
    return py.asDiagonal() * out * px.asDiagonal();
}

cplx Interpolant::operator()(double x, double y) const
{
    return evaluate(Eigen::VectorXd::Constant(1, x), Eigen::VectorXd::Constant(1, y))(0, 0);
}

namespace
{
cplx eval_checked(const Interpolant &interp, Scheme expected, double x, double y)
{
    if (interp.scheme() != expected)
        throw Error(ErrorCode::SchemeMismatch,
                    "interpolant holds a " + to_string(interp.scheme()) + " plan, evaluator expects " + to_string(expected));
    return interp(x, y);
}
} // namespace

cplx eval_warped(const Interpolant &interp, double x, double y)
{
    return eval_checked(interp, Scheme::WarpedNonuniform, x, y);
}

cplx eval_oversampled(const Interpolant &interp, double x, double y)
{
    return eval_checked(interp, Scheme::OversampledWarped, x, y);
}

cplx eval_uniform(const Interpolant &interp, double x, double y)
{
    return eval_checked(interp, Scheme::UniformLinearized, x, y);
}

cplx eval_classical(const Interpolant &interp, double x, double y)
{
    return eval_checked(interp, Scheme::HalfWavelength, x, y);
}

FieldGrid resample(const Interpolant &interp, const SamplingPlan &target)
{
    FieldGrid f;
    f.grid = target;
    f.values = interp.evaluate(target.x, target.y);
    f.provenance = Provenance::Reconstructed;
    return f;
}

} // namespace nfsample
