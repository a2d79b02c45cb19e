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

#include "nfsample/field.hpp"

#include "nfsample/error.hpp"
#include "nfsample/io.hpp"

#include <cmath>
#include <vector>

namespace nfsample
{

std::string to_string(Provenance p)
{
    switch (p)
    {
    case Provenance::Oracle: return "oracle";
    case Provenance::Reconstructed: return "reconstructed";
    case Provenance::FileLoaded: return "file";
    }
    return "unknown";
}

Provenance provenance_from_string(const std::string &name)
{
    if (name == "oracle")
        return Provenance::Oracle;
    if (name == "reconstructed")
        return Provenance::Reconstructed;
    if (name == "file")
        return Provenance::FileLoaded;
    throw Error(ErrorCode::Parse, "unknown provenance '" + name + "'");
}

QuadratureGrid midpoint_grid(double half_x, double half_y, double density)
{
    if (!(density >= kMinQuadratureDensity))
        throw Error(ErrorCode::QuadratureUnderresolved,
                    "quadrature density " + format_number(density) + " below 4 points per wavelength");
    const auto axis = [density](double half) {
        const auto n = static_cast<Eigen::Index>(std::ceil(2.0 * half * density - 1e-9));
        const double h = 2.0 * half / static_cast<double>(n);
        Eigen::VectorXd v(n);
        for (Eigen::Index i = 0; i < n; ++i)
            v[i] = -half + (static_cast<double>(i) + 0.5) * h;
        return std::pair{v, h};
    };
    auto [x, hx] = axis(half_x);
    auto [y, hy] = axis(half_y);
    return {std::move(x), std::move(y), hx * hy};
}

PointCurrents lattice_elements(const SteeredLatticeArray &array, const Geometry &g)
{
    if (!(array.pitch > 0.0))
        throw Error(ErrorCode::NonPositiveStep, "lattice pitch must be positive");

    const double row_step = array.lattice == Lattice::Triangular ? array.pitch * std::sqrt(3.0) / 2.0 : array.pitch;
    const long rows = integer_part(g.b / row_step);
    std::vector<double> xs, ys;
    for (long j = -rows; j <= rows; ++j)
    {
        const double y = static_cast<double>(j) * row_step;
        const double offset = (array.lattice == Lattice::Triangular && (j % 2 != 0)) ? 0.5 * array.pitch : 0.0;
        const long cols = integer_part((g.a - offset) / array.pitch);
        for (long i = -cols - 1; i <= cols; ++i)
        {
            const double x = static_cast<double>(i) * array.pitch + offset;
            if (std::abs(x) <= g.a + 1e-12)
                xs.push_back(x), ys.push_back(y);
        }
    }

    PointCurrents pc;
    pc.x = Eigen::Map<Eigen::VectorXd>(xs.data(), static_cast<Eigen::Index>(xs.size()));
    pc.y = Eigen::Map<Eigen::VectorXd>(ys.data(), static_cast<Eigen::Index>(ys.size()));
    pc.weight = Eigen::VectorXcd::Ones(pc.x.size());
    return pc;
}

namespace
{

struct Discretizer
{
    const Geometry &g;
    double density;

    PointCurrents operator()(const UniformAperture &src) const
    {
        const QuadratureGrid q = midpoint_grid(g.a, g.b, density);
        PointCurrents pc;
        const Eigen::Index n = q.x.size() * q.y.size();
        pc.x.resize(n);
        pc.y.resize(n);
        pc.weight = Eigen::VectorXcd::Constant(n, src.amplitude * q.cell_area);
        for (Eigen::Index iy = 0, k = 0; iy < q.y.size(); ++iy)
            for (Eigen::Index ix = 0; ix < q.x.size(); ++ix, ++k)
            {
                pc.x[k] = q.x[ix];
                pc.y[k] = q.y[iy];
            }
        return pc;
    }

    PointCurrents operator()(const SteeredLatticeArray &src) const
    {
        constexpr double k = Geometry::k();
        PointCurrents pc = lattice_elements(src, g);
        for (Eigen::Index i = 0; i < pc.x.size(); ++i)
        {
            double taper = 1.0;
            if (src.taper == Taper::Cosine)
                taper = std::cos(std::numbers::pi * pc.x[i] / (2.0 * g.a)) * std::cos(std::numbers::pi * pc.y[i] / (2.0 * g.b));
            const double phase = -k * (src.steer_u * pc.x[i] + src.steer_v * pc.y[i]);
            pc.weight[i] = src.amplitude * taper * std::polar(1.0, phase);
        }
        return pc;
    }

    PointCurrents operator()(const UserGrid &src) const
    {
        if (src.current.rows() != src.y.size() || src.current.cols() != src.x.size())
            throw Error(ErrorCode::GridMismatch, "user current grid shape does not match its axes");
        if (src.x.size() < 2 || src.y.size() < 2)
        {
            if (src.x.size() != 1 || src.y.size() != 1)
                throw Error(ErrorCode::GridMismatch, "user current grid needs at least two cells per axis");
        }
        const double hx = src.x.size() > 1 ? src.x[1] - src.x[0] : 1.0 / density;
        const double hy = src.y.size() > 1 ? src.y[1] - src.y[0] : 1.0 / density;
        if (hx > 0.25 + 1e-12 || hy > 0.25 + 1e-12)
            throw Error(ErrorCode::QuadratureUnderresolved, "user current spacing exceeds a quarter wavelength");
        if (src.x.cwiseAbs().maxCoeff() > g.a + 1e-9 || src.y.cwiseAbs().maxCoeff() > g.b + 1e-9)
            throw Error(ErrorCode::OutOfRange, "user current extends outside the source domain");

        PointCurrents pc;
        const Eigen::Index n = src.x.size() * src.y.size();
        pc.x.resize(n);
        pc.y.resize(n);
        pc.weight.resize(n);
        for (Eigen::Index iy = 0, k = 0; iy < src.y.size(); ++iy)
            for (Eigen::Index ix = 0; ix < src.x.size(); ++ix, ++k)
            {
                pc.x[k] = src.x[ix];
                pc.y[k] = src.y[iy];
                pc.weight[k] = src.current(iy, ix) * hx * hy;
            }
        return pc;
    }
};

void require_far_enough(const Geometry &g)
{
    if (g.d < 1.0 - 1e-12)
        throw Error(ErrorCode::PreconditionViolated,
                    "the amplitude kernel assumes d >= 1 wavelength, got d = " + format_number(g.d));
}

} // namespace

PointCurrents discretize(const SourceModel &source, const Geometry &g, double density)
{
    validate(g);
    if (!(density >= kMinQuadratureDensity))
        throw Error(ErrorCode::QuadratureUnderresolved,
                    "quadrature density " + format_number(density) + " below 4 points per wavelength");
    return std::visit(Discretizer{g, density}, source);
}

Eigen::MatrixXcd radiate(const PointCurrents &currents, const Geometry &g, const Eigen::VectorXd &xs,
                         const Eigen::VectorXd &ys)
{
    validate(g);
    require_far_enough(g);
    Eigen::MatrixXcd out(ys.size(), xs.size());
    const Eigen::Index n = currents.x.size();
    for (Eigen::Index iy = 0; iy < ys.size(); ++iy)
        for (Eigen::Index ix = 0; ix < xs.size(); ++ix)
        {
            cplx acc{0.0, 0.0};
            for (Eigen::Index s = 0; s < n; ++s)
                acc += radiation_kernel(xs[ix] - currents.x[s], ys[iy] - currents.y[s], g.d) * currents.weight[s];
            out(iy, ix) = acc;
        }
    return out;
}

FieldGrid radiate(const SourceModel &source, const Geometry &g, const SamplingPlan &plan, double density)
{
    FieldGrid f;
    f.grid = plan;
    f.values = radiate(discretize(source, g, density), g, plan.x, plan.y);
    f.provenance = Provenance::Oracle;
    return f;
}

Eigen::MatrixXcd adjoint_apply(const Eigen::MatrixXcd &field, const QuadratureGrid &obs, const Geometry &g,
                               const Eigen::VectorXd &xs, const Eigen::VectorXd &ys)
{
    validate(g);
    require_far_enough(g);
    if (field.rows() != obs.y.size() || field.cols() != obs.x.size())
        throw Error(ErrorCode::GridMismatch, "field shape does not match the observation grid");

    Eigen::MatrixXcd out(ys.size(), xs.size());
    for (Eigen::Index sy = 0; sy < ys.size(); ++sy)
        for (Eigen::Index sx = 0; sx < xs.size(); ++sx)
        {
            cplx acc{0.0, 0.0};
            for (Eigen::Index oy = 0; oy < obs.y.size(); ++oy)
                for (Eigen::Index ox = 0; ox < obs.x.size(); ++ox)
                    acc += std::conj(radiation_kernel(obs.x[ox] - xs[sx], obs.y[oy] - ys[sy], g.d)) * field(oy, ox);
            out(sy, sx) = acc * obs.cell_area;
        }
    return out;
}

SamplingPlan dense_grid(const Geometry &g, double step)
{
    SamplingPlan plan = plan_half_wavelength(g, step);
    plan.warnings.clear();
    return plan;
}

} // namespace nfsample
