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

#include "support.hpp"

#include "nfsample/error.hpp"
#include "nfsample/field.hpp"

#include <doctest.h>

#include <random>

using namespace nfsample;
using namespace std::complex_literals;

namespace
{

constexpr double kPi = 3.14159265358979323846;

std::complex<double> green(double x, double y, double xs, double ys, double d)
{
    const double k = 2.0 * kPi;
    const double r = std::sqrt((x - xs) * (x - xs) + (y - ys) * (y - ys) + d * d);
    return -1i * k * d / (4.0 * kPi * r * r) * std::exp(-1i * k * r);
}

Eigen::MatrixXcd smooth_pattern(const QuadratureGrid &q, double half_x, double half_y, double fx, double fy, double phase)
{
    Eigen::MatrixXcd m(q.y.size(), q.x.size());
    for (Eigen::Index iy = 0; iy < q.y.size(); ++iy)
        for (Eigen::Index ix = 0; ix < q.x.size(); ++ix)
        {
            const double wx = std::cos(kPi * q.x[ix] / (2.0 * half_x)), wy = std::cos(kPi * q.y[iy] / (2.0 * half_y));
            m(iy, ix) = wx * wy * std::exp(1i * (fx * q.x[ix] + fy * q.y[iy] + phase));
        }
    return m;
}

UserGrid user_grid_from(const QuadratureGrid &q, const Eigen::MatrixXcd &current) { return {q.x, q.y, current}; }

} // namespace

TEST_CASE("midpoint grid")
{
    const QuadratureGrid q = midpoint_grid(2.0, 1.0, 8.0);
    CHECK(q.x.size() == 32);
    CHECK(q.y.size() == 16);
    CHECK(q.x[0] == doctest::Approx(-2.0 + 1.0 / 16.0));
    CHECK(q.cell_area == doctest::Approx(1.0 / 64.0));
    CHECK_THROWS_AS(midpoint_grid(2.0, 2.0, 3.0), Error);
    try
    {
        midpoint_grid(2.0, 2.0, 3.9);
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::QuadratureUnderresolved);
    }
}

TEST_CASE("kernel matches the direct complex exponential")
{
    for (double dx : {0.0, 1.3, -4.2})
        for (double d : {1.0, 3.0, 7.0})
            CHECK(testing::relative_error(radiation_kernel(dx, 0.7, d), green(dx, 0.7, 0.0, 0.0, d)) < 1e-13);
}

TEST_CASE("single cell source at the origin")
{
    const Geometry g = testing::square_geometry();
    const QuadratureGrid q = midpoint_grid(g.a, g.b, 4.0);
    // Shift the grid so one cell sits exactly on the origin.
    UserGrid src{q.x.array() + 0.125, q.y.array() + 0.125, Eigen::MatrixXcd::Zero(q.y.size(), q.x.size())};
    src.x[src.x.size() - 1] = g.a;
    src.y[src.y.size() - 1] = g.b;
    src.x = src.x.array() - 0.0;
    Eigen::Index cx = 0, cy = 0;
    src.x.cwiseAbs().minCoeff(&cx);
    src.y.cwiseAbs().minCoeff(&cy);
    REQUIRE(src.x[cx] == 0.0);
    const cplx current{0.3, -1.1};
    src.current(cy, cx) = current;

    const PointCurrents pc = discretize(src, g, 16.0);
    const Eigen::MatrixXcd e = radiate(pc, g, Eigen::VectorXd::Zero(1), Eigen::VectorXd::Zero(1));
    const double k = 2.0 * kPi, d = g.d;
    const cplx expected = -1i * k * d / (4.0 * kPi * d * d) * std::exp(-1i * k * d) * (0.25 * 0.25) * current;
    CHECK(testing::relative_error(e(0, 0), expected) < 1e-13);
}

TEST_CASE("boresight amplitude of a point source follows the kernel")
{
    PointCurrents pc{Eigen::VectorXd::Zero(1), Eigen::VectorXd::Zero(1), Eigen::VectorXcd::Ones(1)};
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(1);
    const double e3 = std::abs(radiate(pc, {1.0, 1.0, 3.0, 1.0, 1.0}, zero, zero)(0, 0));
    const double e6 = std::abs(radiate(pc, {1.0, 1.0, 6.0, 1.0, 1.0}, zero, zero)(0, 0));
    CHECK(e3 / e6 == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("symmetric aperture gives point-symmetric field")
{
    const Geometry g = testing::square_geometry();
    const PointCurrents pc = discretize(UniformAperture{}, g, 8.0);
    Eigen::VectorXd xs(3), ys(3);
    xs << -1.3, 0.0, 1.3;
    ys << -0.7, 0.0, 0.7;
    const Eigen::MatrixXcd e = radiate(pc, g, xs, ys);
    CHECK(testing::relative_error(e(0, 0), e(2, 2)) < 1e-12);
    CHECK(testing::relative_error(e(0, 2), e(2, 0)) < 1e-12);
}

TEST_CASE("midpoint quadrature converges at second order")
{
    const Geometry g = testing::square_geometry();
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(1);
    const auto at_centre = [&](double density) { return radiate(discretize(UniformAperture{}, g, density), g, zero, zero)(0, 0); };
    const cplx e8 = at_centre(8.0), e16 = at_centre(16.0), e32 = at_centre(32.0);
    const double first = std::abs(e16 - e8), second = std::abs(e32 - e16);
    CHECK(first / second >= 4.0);
    CHECK(second / std::abs(e32) < 1e-2);
}

TEST_CASE("radiation is linear and order independent")
{
    const Geometry g = testing::square_geometry();
    const QuadratureGrid q = midpoint_grid(g.a, g.b, 4.0);
    const Eigen::MatrixXcd j1 = smooth_pattern(q, g.a, g.b, 1.0, 0.0, 0.0);
    const Eigen::MatrixXcd j2 = smooth_pattern(q, g.a, g.b, -0.5, 2.0, 1.0);
    const cplx alpha{0.4, 1.2}, beta{-2.0, 0.3};

    Eigen::VectorXd xs = Eigen::VectorXd::LinSpaced(7, -2.0, 2.0), ys = Eigen::VectorXd::LinSpaced(5, -2.0, 2.0);
    const auto field = [&](const Eigen::MatrixXcd &j) {
        return radiate(discretize(user_grid_from(q, j), g, 16.0), g, xs, ys);
    };
    const Eigen::MatrixXcd lhs = field(alpha * j1 + beta * j2);
    const Eigen::MatrixXcd rhs = alpha * field(j1) + beta * field(j2);
    CHECK((lhs - rhs).norm() <= 1e-12 * rhs.norm());

    const Eigen::MatrixXcd forward = field(j1);
    const Eigen::VectorXd rx = xs.reverse(), ry = ys.reverse();
    const Eigen::MatrixXcd backward = radiate(discretize(user_grid_from(q, j1), g, 16.0), g, rx, ry);
    CHECK(backward.reverse() == forward);
}

TEST_CASE("user grids are validated")
{
    const Geometry g = testing::square_geometry();
    UserGrid wide{Eigen::VectorXd::LinSpaced(5, -2.0, 2.0), Eigen::VectorXd::LinSpaced(5, -2.0, 2.0),
                  Eigen::MatrixXcd::Ones(5, 5)};
    CHECK_THROWS_AS(discretize(wide, g, 16.0), Error);
    UserGrid outside{Eigen::VectorXd::LinSpaced(21, -2.5, 2.5), Eigen::VectorXd::LinSpaced(21, -2.5, 2.5),
                     Eigen::MatrixXcd::Ones(21, 21)};
    CHECK_THROWS_AS(discretize(outside, g, 16.0), Error);
    UserGrid misshaped{Eigen::VectorXd::LinSpaced(17, -2.0, 2.0), Eigen::VectorXd::LinSpaced(17, -2.0, 2.0),
                       Eigen::MatrixXcd::Ones(3, 17)};
    CHECK_THROWS_AS(discretize(misshaped, g, 16.0), Error);
}

TEST_CASE("preconditions")
{
    const Geometry near{2.0, 2.0, 0.5, 2.0, 2.0};
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(1);
    try
    {
        radiate(discretize(UniformAperture{}, near, 8.0), near, zero, zero);
        FAIL("expected an error");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::PreconditionViolated);
    }
    CHECK_THROWS_AS(discretize(UniformAperture{}, testing::square_geometry(), 2.0), Error);
}

TEST_CASE("triangular lattice layout")
{
    const Geometry g = testing::scan_geometry();
    const PointCurrents pc = lattice_elements(SteeredLatticeArray{}, g);
    CHECK(pc.x.size() == 287);
    CHECK(pc.x.cwiseAbs().maxCoeff() <= g.a + 1e-12);
    CHECK(pc.y.cwiseAbs().maxCoeff() <= g.b + 1e-12);

    int centre_row = 0, first_row = 0;
    for (Eigen::Index i = 0; i < pc.x.size(); ++i)
    {
        if (pc.y[i] == 0.0)
            ++centre_row;
        if (std::abs(pc.y[i] - 0.5 * std::sqrt(3.0) / 2.0) < 1e-12)
        {
            ++first_row;
            CHECK(std::abs(std::fmod(std::abs(pc.x[i]), 0.5) - 0.25) < 1e-12);
        }
    }
    CHECK(centre_row == 13);
    CHECK(first_row == 12);

    SteeredLatticeArray rect;
    rect.lattice = Lattice::Rectangular;
    CHECK(lattice_elements(rect, g).x.size() == 13 * 21);
}

TEST_CASE("steering and taper weights")
{
    const Geometry g = testing::scan_geometry();
    SteeredLatticeArray array;
    array.steer_u = 0.2;
    array.taper = Taper::Cosine;
    array.amplitude = 2.0;
    const PointCurrents pc = discretize(array, g);
    for (Eigen::Index i = 0; i < pc.x.size(); i += 17)
    {
        const double taper = std::cos(kPi * pc.x[i] / 6.0) * std::cos(kPi * pc.y[i] / 10.0);
        const cplx want = 2.0 * taper * std::exp(-1i * 2.0 * kPi * 0.2 * pc.x[i]);
        CHECK(std::abs(pc.weight[i] - want) < 1e-13);
    }
    array.amplitude = 0.0;
    const FieldGrid f = radiate(array, g, dense_grid(g, 0.5));
    CHECK(f.values.cwiseAbs().maxCoeff() == 0.0);
    CHECK(f.provenance == Provenance::Oracle);
    CHECK(f.consistent());
}

TEST_CASE("adjoint of the zero field vanishes")
{
    const Geometry g = testing::square_geometry();
    const QuadratureGrid obs = midpoint_grid(g.x_obs, g.y_obs, 4.0);
    const QuadratureGrid src = midpoint_grid(g.a, g.b, 4.0);
    const Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(obs.y.size(), obs.x.size());
    CHECK(adjoint_apply(zero, obs, g, src.x, src.y).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(adjoint_apply(Eigen::MatrixXcd::Zero(3, 3), obs, g, src.x, src.y), Error);
}

TEST_CASE("adjoint identity against a direct double sum")
{
    const Geometry g = testing::square_geometry();
    const QuadratureGrid src = midpoint_grid(g.a, g.b, 8.0);
    const QuadratureGrid obs = midpoint_grid(g.x_obs, g.y_obs, 8.0);
    const Eigen::MatrixXcd j = smooth_pattern(src, g.a, g.b, 1.5, -0.5, 0.2);
    const Eigen::MatrixXcd e = smooth_pattern(obs, g.x_obs, g.y_obs, -2.0, 1.0, 0.9);

    cplx direct{0.0, 0.0};
    for (Eigen::Index oy = 0; oy < obs.y.size(); ++oy)
        for (Eigen::Index ox = 0; ox < obs.x.size(); ++ox)
            for (Eigen::Index sy = 0; sy < src.y.size(); ++sy)
                for (Eigen::Index sx = 0; sx < src.x.size(); ++sx)
                    direct += std::conj(e(oy, ox)) * green(obs.x[ox], obs.y[oy], src.x[sx], src.y[sy], g.d) *
                              j(sy, sx) * src.cell_area * obs.cell_area;

    const Eigen::MatrixXcd tj = radiate(discretize(user_grid_from(src, j), g, 8.0), g, obs.x, obs.y);
    const cplx forward = (e.conjugate().cwiseProduct(tj)).sum() * obs.cell_area;
    const Eigen::MatrixXcd te = adjoint_apply(e, obs, g, src.x, src.y);
    const cplx backward = (te.conjugate().cwiseProduct(j)).sum() * src.cell_area;
    CHECK(std::abs(forward - direct) <= 1e-12 * std::abs(direct));
    CHECK(std::abs(backward - direct) <= 1e-12 * std::abs(direct));
}
