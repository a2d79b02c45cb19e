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
#include "nfsample/sampling.hpp"

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <variant>

namespace nfsample
{

using cplx = std::complex<double>;

enum class Provenance
{
    Oracle,
    Reconstructed,
    FileLoaded
};

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string &name);

/// Complex scalar field on a factorized grid; values(iy, ix) belongs to (grid.x[ix], grid.y[iy]).
struct FieldGrid
{
    SamplingPlan grid;
    Eigen::MatrixXcd values;
    Provenance provenance = Provenance::Oracle;
    std::string component = "E";

    bool consistent() const { return values.rows() == grid.ny() && values.cols() == grid.nx() && values.allFinite(); }
};

/// Midpoint quadrature grid over [-hx,hx] x [-hy,hy].
struct QuadratureGrid
{
    Eigen::VectorXd x;
    Eigen::VectorXd y;
    double cell_area = 0.0;
};

/// Minimum quadrature density accepted by the radiation oracle (points per wavelength).
inline constexpr double kMinQuadratureDensity = 4.0;
inline constexpr double kDefaultQuadratureDensity = 16.0;

QuadratureGrid midpoint_grid(double half_x, double half_y, double density);

// ---- source models ----

/// J = amplitude over the whole source domain.
struct UniformAperture
{
    cplx amplitude{1.0, 0.0};
};

enum class Lattice
{
    Rectangular,
    Triangular
};

enum class Taper
{
    None,
    Cosine
};

/// Isotropic point elements on a lattice filling the source domain, with linear steering phase.
struct SteeredLatticeArray
{
    double pitch = 0.5;
    Lattice lattice = Lattice::Triangular;
    double steer_u = 0.0; // direction cosines of the main beam
    double steer_v = 0.0;
    Taper taper = Taper::None;
    cplx amplitude{1.0, 0.0};
};

/// Current density samples at the centers of a regular grid of cells.
struct UserGrid
{
    Eigen::VectorXd x;
    Eigen::VectorXd y;
    Eigen::MatrixXcd current; // (ny, nx)
};

using SourceModel = std::variant<UniformAperture, SteeredLatticeArray, UserGrid>;

/// Weighted point currents: the quadrature (or element) representation of a source.
struct PointCurrents
{
    Eigen::VectorXd x;
    Eigen::VectorXd y;
    Eigen::VectorXcd weight;
};

PointCurrents discretize(const SourceModel &source, const Geometry &g, double density = kDefaultQuadratureDensity);

/// Element positions of a lattice array (without weights).
PointCurrents lattice_elements(const SteeredLatticeArray &array, const Geometry &g);

// ---- radiation operator ----

/// Kernel of the radiation operator, -j k d / (4 pi R^2) exp(-j k R), lengths in wavelengths.
inline cplx radiation_kernel(double dx, double dy, double d)
{
    constexpr double k = Geometry::k();
    const double r2 = dx * dx + dy * dy + d * d;
    const double r = std::sqrt(r2);
    const double amp = k * d / (4.0 * std::numbers::pi * r2);
    // -j * amp * exp(-j k r)
    return {-amp * std::sin(k * r), -amp * std::cos(k * r)};
}

/// Field of the point currents on the factorized target grid, (ny, nx).
Eigen::MatrixXcd radiate(const PointCurrents &currents, const Geometry &g, const Eigen::VectorXd &xs,
                         const Eigen::VectorXd &ys);

/// Oracle field of `source` at every node of `plan`.
FieldGrid radiate(const SourceModel &source, const Geometry &g, const SamplingPlan &plan,
                  double density = kDefaultQuadratureDensity);

/// Adjoint operator: integral over the observation grid of conj(kernel) * field.
/// `field` is (ny, nx) on `obs`; result is (ys.size(), xs.size()).
Eigen::MatrixXcd adjoint_apply(const Eigen::MatrixXcd &field, const QuadratureGrid &obs, const Geometry &g,
                               const Eigen::VectorXd &xs, const Eigen::VectorXd &ys);

/// Builds a uniform-step grid plan (classical layout) used for dense oracle and resampling grids.
SamplingPlan dense_grid(const Geometry &g, double step);

} // namespace nfsample
