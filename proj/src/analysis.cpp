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

#include "nfsample/analysis.hpp"

#include "nfsample/error.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace nfsample
{

OperatorMatrix discretize_operator(const Geometry &g, double src_density, double obs_density, Eigen::Index max_dimension)
{
    validate(g);
    if (g.d < 1.0 - 1e-12)
        throw Error(ErrorCode::PreconditionViolated, "the amplitude kernel assumes d >= 1 wavelength");

    OperatorMatrix op;
    op.col_grid = midpoint_grid(g.a, g.b, src_density);
    op.row_grid = midpoint_grid(g.x_obs, g.y_obs, obs_density);
    const Eigen::Index rows = op.row_grid.x.size() * op.row_grid.y.size();
    const Eigen::Index cols = op.col_grid.x.size() * op.col_grid.y.size();
    if (rows > max_dimension || cols > max_dimension)
        throw Error(ErrorCode::DimensionOverflow, "operator matrix " + std::to_string(rows) + " x " +
                                                      std::to_string(cols) + " exceeds the budget of " +
                                                      std::to_string(max_dimension));

    const auto &src = op.col_grid;
    const auto &obs = op.row_grid;
    op.entries.resize(rows, cols);
    for (Eigen::Index oy = 0, i = 0; oy < obs.y.size(); ++oy)
        for (Eigen::Index ox = 0; ox < obs.x.size(); ++ox, ++i)
            for (Eigen::Index sy = 0, j = 0; sy < src.y.size(); ++sy)
                for (Eigen::Index sx = 0; sx < src.x.size(); ++sx, ++j)
                    op.entries(i, j) = radiation_kernel(obs.x[ox] - src.x[sx], obs.y[oy] - src.y[sy], g.d) * src.cell_area;
    return op;
}

Eigen::VectorXd singular_spectrum(const Eigen::MatrixXcd &weighted)
{
    if (!weighted.allFinite())
        throw Error(ErrorCode::FactorizationFailure, "operator matrix has non-finite entries");
    if (weighted.size() == 0)
        return {};
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(weighted);
    if (svd.info() != Eigen::Success)
        throw Error(ErrorCode::FactorizationFailure, "singular value decomposition did not converge");
    return svd.singularValues();
}

Eigen::VectorXd singular_spectrum(const OperatorMatrix &op)
{
    // entries already carry one source cell area; rebalance to sqrt(obs area * src area)
    const double scale = std::sqrt(op.row_grid.cell_area / op.col_grid.cell_area);
    return singular_spectrum(Eigen::MatrixXcd(op.entries * scale));
}

Eigen::Index knee_index(const Eigen::VectorXd &sigma, double threshold)
{
    if (sigma.size() == 0 || !(sigma[0] > 0.0))
        return 0;
    Eigen::Index n = 0;
    while (n < sigma.size() && sigma[n] >= threshold * sigma[0])
        ++n;
    return n;
}

MetricsReport rrmse(const FieldGrid &reference, const FieldGrid &candidate, int guard_band)
{
    const auto same_axis = [](const Eigen::VectorXd &p, const Eigen::VectorXd &q) {
        return p.size() == q.size() && (p.size() == 0 || (p - q).cwiseAbs().maxCoeff() <= 1e-9);
    };
    if (!same_axis(reference.grid.x, candidate.grid.x) || !same_axis(reference.grid.y, candidate.grid.y) ||
        reference.values.rows() != candidate.values.rows() || reference.values.cols() != candidate.values.cols())
        throw Error(ErrorCode::GridMismatch, "fields are not defined on the same positions");
    if (guard_band < 0)
        throw Error(ErrorCode::Config, "guard band must be non-negative");

    const Eigen::Index rows = reference.values.rows() - 2 * guard_band;
    const Eigen::Index cols = reference.values.cols() - 2 * guard_band;
    if (rows <= 0 || cols <= 0)
        throw Error(ErrorCode::GridMismatch, "guard band leaves no points to compare");

    const auto ref = reference.values.block(guard_band, guard_band, rows, cols);
    const auto diff = (candidate.values.block(guard_band, guard_band, rows, cols) - ref).eval();
    const double ref_norm2 = ref.squaredNorm();
    if (!(ref_norm2 > 0.0))
        throw Error(ErrorCode::ZeroReference, "reference field has zero norm");

    MetricsReport m;
    m.rrmse_squared = diff.squaredNorm() / ref_norm2;
    m.rrmse_sqrt = std::sqrt(m.rrmse_squared);
    m.max_abs_err = diff.cwiseAbs().maxCoeff();
    m.compared_points = rows * cols;
    return m;
}

} // namespace nfsample
