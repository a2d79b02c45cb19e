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
#include "nfsample/sampling.hpp"

#include <Eigen/Core>

#include <optional>

namespace nfsample
{

inline constexpr Eigen::Index kDefaultMatrixBudget = 4000;
inline constexpr double kDefaultKneeThreshold = 1e-2;

/// Quadrature discretization of the radiation operator.
///
/// entries(i, j) = kernel(obs_i, src_j) * source cell area, so that entries * J
/// reproduces radiate() for a current density J sampled on the source cells.
struct OperatorMatrix
{
    Eigen::MatrixXcd entries;
    QuadratureGrid row_grid; // observation cells, row index = iy * nx + ix
    QuadratureGrid col_grid; // source cells, column index = iy * nx + ix

    Eigen::VectorXcd apply(const Eigen::VectorXcd &current) const { return entries * current; }

    /// Discrete adjoint: sum over observation cells of conj(kernel) * field * cell area.
    Eigen::VectorXcd apply_adjoint(const Eigen::VectorXcd &field) const
    {
        return entries.adjoint() * field * (row_grid.cell_area / col_grid.cell_area);
    }
};

OperatorMatrix discretize_operator(const Geometry &g, double src_density, double obs_density,
                                   Eigen::Index max_dimension = kDefaultMatrixBudget);

/// Singular values, non-increasing, of the operator with sqrt(cell area) weighting on both
/// sides so they approximate those of the continuous operator.
Eigen::VectorXd singular_spectrum(const OperatorMatrix &op);
Eigen::VectorXd singular_spectrum(const Eigen::MatrixXcd &weighted);

/// Number of singular values with sigma_n >= threshold * sigma_1.
Eigen::Index knee_index(const Eigen::VectorXd &sigma, double threshold = kDefaultKneeThreshold);

struct MetricsReport
{
    double rrmse_squared = 0.0; // ||E - E_ref||^2 / ||E_ref||^2
    double rrmse_sqrt = 0.0;
    double max_abs_err = 0.0;
    Eigen::Index compared_points = 0;
    std::optional<PlanStats> plan_stats;
};

/// Compares two fields on identical grids, skipping `guard_band` samples along every border.
MetricsReport rrmse(const FieldGrid &reference, const FieldGrid &candidate, int guard_band = 1);

} // namespace nfsample
