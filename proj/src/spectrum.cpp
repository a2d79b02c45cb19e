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

#include "nfsample/spectrum.hpp"

#include "nfsample/error.hpp"
#include "nfsample/io.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <numbers>
#include <vector>

namespace nfsample
{

Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> SpectrumGrid::visible_mask() const
{
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> mask(v.size(), u.size());
    for (Eigen::Index iv = 0; iv < v.size(); ++iv)
        for (Eigen::Index iu = 0; iu < u.size(); ++iu)
            mask(iv, iu) = u[iu] * u[iu] + v[iv] * v[iv] <= 1.0;
    return mask;
}

namespace
{

double check_uniform_axis(const Eigen::VectorXd &axis, const std::optional<double> &step, const char *name)
{
    if (axis.size() < 2)
        throw Error(ErrorCode::NonUniformGrid, std::string("need at least two samples along ") + name);
    const double h = step ? *step : axis[1] - axis[0];
    for (Eigen::Index i = 1; i < axis.size(); ++i)
        if (std::abs(axis[i] - axis[i - 1] - h) > 1e-9 * std::max(1.0, std::abs(h)))
            throw Error(ErrorCode::NonUniformGrid, std::string("positions along ") + name + " are not equally spaced");
    if (h > 0.5 + 1e-9)
        throw Error(ErrorCode::PreconditionViolated,
                    std::string("step along ") + name + " is " + format_number(h) + " lam, above half a wavelength");
    return h;
}

// Signed frequency indices kept in the output, ascending.
std::vector<Eigen::Index> centred_indices(Eigen::Index n)
{
    const Eigen::Index lo = -((n - 1) / 2);
    const Eigen::Index hi = (n - 1) / 2;
    std::vector<Eigen::Index> idx;
    for (Eigen::Index m = lo; m <= hi; ++m)
        idx.push_back(m);
    return idx;
}

} // namespace

SpectrumGrid far_field_spectrum(const FieldGrid &grid, int zero_pad_factor)
{
    if (zero_pad_factor < 1)
        throw Error(ErrorCode::Config, "zero padding factor must be >= 1");
    if (!grid.consistent())
        throw Error(ErrorCode::GridMismatch, "field values do not match the grid or are not finite");

    const double hx = check_uniform_axis(grid.grid.x, grid.grid.step_x, "x");
    const double hy = check_uniform_axis(grid.grid.y, grid.grid.step_y, "y");
    const Eigen::Index nx = grid.grid.nx() * zero_pad_factor;
    const Eigen::Index ny = grid.grid.ny() * zero_pad_factor;

    Eigen::MatrixXcd padded = Eigen::MatrixXcd::Zero(ny, nx);
    padded.topLeftCorner(grid.values.rows(), grid.values.cols()) = grid.values;

    Eigen::FFT<double> fft;
    fft.SetFlag(Eigen::FFT<double>::Unscaled);
    // inverse transforms carry the exp(+j ...) kernel
    std::vector<cplx> in, out;
    for (Eigen::Index r = 0; r < ny; ++r)
    {
        in.resize(nx);
        for (Eigen::Index c = 0; c < nx; ++c)
            in[c] = padded(r, c);
        fft.inv(out, in);
        for (Eigen::Index c = 0; c < nx; ++c)
            padded(r, c) = out[c];
    }
    for (Eigen::Index c = 0; c < nx; ++c)
    {
        in.resize(ny);
        for (Eigen::Index r = 0; r < ny; ++r)
            in[r] = padded(r, c);
        fft.inv(out, in);
        for (Eigen::Index r = 0; r < ny; ++r)
            padded(r, c) = out[r];
    }

    const auto ui = centred_indices(nx);
    const auto vi = centred_indices(ny);
    SpectrumGrid s;
    s.zero_pad_factor = zero_pad_factor;
    s.u.resize(static_cast<Eigen::Index>(ui.size()));
    s.v.resize(static_cast<Eigen::Index>(vi.size()));
    for (std::size_t i = 0; i < ui.size(); ++i)
        s.u[i] = static_cast<double>(ui[i]) / (static_cast<double>(nx) * hx);
    for (std::size_t i = 0; i < vi.size(); ++i)
        s.v[i] = static_cast<double>(vi[i]) / (static_cast<double>(ny) * hy);

    // reference the phase to the coordinate origin instead of the first sample
    constexpr double k = Geometry::k();
    const double x0 = grid.grid.x[0];
    const double y0 = grid.grid.y[0];
    s.values.resize(s.v.size(), s.u.size());
    for (Eigen::Index iv = 0; iv < s.v.size(); ++iv)
        for (Eigen::Index iu = 0; iu < s.u.size(); ++iu)
        {
            const Eigen::Index r = (vi[iv] + ny) % ny;
            const Eigen::Index c = (ui[iu] + nx) % nx;
            s.values(iv, iu) = padded(r, c) * std::polar(1.0, k * (s.u[iu] * x0 + s.v[iv] * y0));
        }
    return s;
}

PrincipalCuts principal_cuts(const SpectrumGrid &spectrum)
{
    const double peak = spectrum.values.cwiseAbs().maxCoeff();
    const Eigen::Index cu = (spectrum.u.size() - 1) / 2;
    const Eigen::Index cv = (spectrum.v.size() - 1) / 2;
    const auto to_db = [peak](cplx value) {
        const double mag = std::abs(value);
        return (peak > 0.0 && mag > 0.0) ? 20.0 * std::log10(mag / peak) : -300.0;
    };

    PrincipalCuts cuts;
    cuts.u = spectrum.u;
    cuts.v = spectrum.v;
    cuts.u_db.resize(spectrum.u.size());
    cuts.v_db.resize(spectrum.v.size());
    for (Eigen::Index i = 0; i < spectrum.u.size(); ++i)
        cuts.u_db[i] = to_db(spectrum.values(cv, i));
    for (Eigen::Index i = 0; i < spectrum.v.size(); ++i)
        cuts.v_db[i] = to_db(spectrum.values(i, cu));
    return cuts;
}

double max_cut_deviation_db(const Eigen::VectorXd &reference_db, const Eigen::VectorXd &candidate_db, double window_db)
{
    if (reference_db.size() != candidate_db.size())
        throw Error(ErrorCode::GridMismatch, "cuts have different lengths");
    double worst = 0.0;
    for (Eigen::Index i = 0; i < reference_db.size(); ++i)
        if (reference_db[i] >= -window_db)
            worst = std::max(worst, std::abs(reference_db[i] - candidate_db[i]));
    return worst;
}

} // namespace nfsample
