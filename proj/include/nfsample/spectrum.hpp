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

#include <Eigen/Core>

namespace nfsample
{

inline constexpr int kDefaultZeroPad = 4;

/// Plane-wave spectrum over direction cosines; values(iv, iu).
struct SpectrumGrid
{
    Eigen::VectorXd u;
    Eigen::VectorXd v;
    Eigen::MatrixXcd values;
    int zero_pad_factor = 1;

    /// True for bins with u^2 + v^2 <= 1.
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> visible_mask() const;
};

/// Unnormalized 2-D transform sum_n E_n exp(+j k (u x_n + v y_n)) of a uniform grid.
///
/// The samples are zero padded to `zero_pad_factor` times their count per axis and the
/// output is DC-centred. When the padded length is even the lone bin at -1/(2 step) is
/// dropped so that both axes stay symmetric about zero.
/// Throws NonUniformGrid when the positions are not an equally spaced lattice and
/// PreconditionViolated when a step exceeds half a wavelength.
SpectrumGrid far_field_spectrum(const FieldGrid &grid, int zero_pad_factor = kDefaultZeroPad);

struct PrincipalCuts
{
    Eigen::VectorXd u;
    Eigen::VectorXd u_db; // cut at v = 0
    Eigen::VectorXd v;
    Eigen::VectorXd v_db; // cut at u = 0
};

/// Cuts through the spectrum centre, in dB relative to the global peak magnitude.
PrincipalCuts principal_cuts(const SpectrumGrid &spectrum);

/// Largest |a - b| over the points where the reference cut is within `window_db` of 0 dB.
double max_cut_deviation_db(const Eigen::VectorXd &reference_db, const Eigen::VectorXd &candidate_db,
                            double window_db = 20.0);

} // namespace nfsample
