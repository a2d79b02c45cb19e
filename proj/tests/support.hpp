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

#include <complex>
#include <random>

namespace nfsample::testing
{

// Scanner geometry of the measured Vivaldi array: 6x10 lambda aperture, 7 lambda away.
inline Geometry scan_geometry() { return {3.0, 5.0, 7.0, 14.5, 9.75}; }

// Small square case used for degrees-of-freedom checks.
inline Geometry square_geometry() { return {2.0, 2.0, 2.0, 2.0, 2.0}; }

inline double relative_error(std::complex<double> got, std::complex<double> want)
{
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline Eigen::MatrixXcd random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937 &rng)
{
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i)
            m(i, j) = {n(rng), n(rng)};
    return m;
}

} // namespace nfsample::testing
