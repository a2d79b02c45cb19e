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

#include "nfsample/field.hpp"
#include "nfsample/geometry.hpp"
#include "nfsample/sampling.hpp"

#include <Eigen/Core>

namespace nfsample
{

/// Sampling series of the near field built from the samples of one plan.
///
/// Every scheme shares the separable structure
///   E(x,y) = P_x(x) P_y(y) sum_pq E_pq Q_x(x_p) Q_y(y_q) S_x,p(x) S_y,q(y)
/// where P/Q are the phase factors exp(-/+ j k a gamma) (unity for the classical
/// series) and S are the sinc kernels of the respective warped coordinate.
class Interpolant
{
public:
    /// `samples` is (plan.ny(), plan.nx()). Throws GridMismatch on a shape mismatch.
    Interpolant(SamplingPlan plan, Eigen::MatrixXcd samples, Geometry geometry);
    explicit Interpolant(const FieldGrid &field, const Geometry &geometry)
        : Interpolant(field.grid, field.values, geometry) {}

    const SamplingPlan &plan() const { return plan_; }
    const Eigen::MatrixXcd &samples() const { return samples_; }
    const Geometry &geometry() const { return geometry_; }
    Scheme scheme() const { return plan_.scheme; }

    cplx operator()(double x, double y) const;

    /// Series evaluated on the factorized grid xs x ys, returned as (ys.size(), xs.size()).
    Eigen::MatrixXcd evaluate(const Eigen::VectorXd &xs, const Eigen::VectorXd &ys) const;

    /// True inside the observation domain; the truncation error is unbounded outside it.
    bool covers(double x, double y) const;

private:
    // Row i holds the series kernels of axis sample p for target ts[i], already
    // multiplied by the node phase; `outer` receives the target phase factor.
    Eigen::MatrixXcd axis_basis(bool along_x, const Eigen::VectorXd &ts, Eigen::VectorXcd &outer) const;

    SamplingPlan plan_;
    Eigen::MatrixXcd samples_;
    Geometry geometry_;
};

cplx eval_warped(const Interpolant &interp, double x, double y);
cplx eval_oversampled(const Interpolant &interp, double x, double y);
cplx eval_uniform(const Interpolant &interp, double x, double y);
cplx eval_classical(const Interpolant &interp, double x, double y);

/// Evaluates the series at every node of `target`; provenance Reconstructed.
FieldGrid resample(const Interpolant &interp, const SamplingPlan &target);

} // namespace nfsample
