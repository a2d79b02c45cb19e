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
#include "nfsample/spectrum.hpp"

#include <doctest.h>

#include <random>

using namespace nfsample;
using namespace std::complex_literals;

namespace
{

constexpr double kK = 2.0 * 3.14159265358979323846;

FieldGrid lattice_field(const Geometry &g, double step, const auto &fn)
{
    FieldGrid f;
    f.grid = dense_grid(g, step);
    f.values.resize(f.grid.ny(), f.grid.nx());
    for (Eigen::Index q = 0; q < f.grid.ny(); ++q)
        for (Eigen::Index p = 0; p < f.grid.nx(); ++p)
            f.values(q, p) = fn(f.grid.x[p], f.grid.y[q]);
    return f;
}

cplx direct_transform(const FieldGrid &f, double u, double v)
{
    cplx acc{0.0, 0.0};
    for (Eigen::Index q = 0; q < f.grid.ny(); ++q)
        for (Eigen::Index p = 0; p < f.grid.nx(); ++p)
            acc += f.values(q, p) * std::exp(1i * kK * (u * f.grid.x[p] + v * f.grid.y[q]));
    return acc;
}

} // namespace

TEST_CASE("constant field concentrates at the origin")
{
    const FieldGrid f = lattice_field(Geometry{1.0, 1.0, 1.0, 5.0, 5.0}, 0.5, [](double, double) { return cplx(0.5, 2.0); });
    REQUIRE(f.grid.nx() == 21);
    const SpectrumGrid s = far_field_spectrum(f, 1);
    CHECK(s.u.size() == 21);
    CHECK(s.u[10] == 0.0);
    CHECK(std::abs(s.values(10, 10) - cplx(0.5, 2.0) * 441.0) < 1e-10);
    CHECK(s.values.cwiseAbs().maxCoeff() == doctest::Approx(std::abs(cplx(0.5, 2.0)) * 441.0));
    for (Eigen::Index i = 0; i < 21; ++i)
        CHECK(s.u[i] == doctest::Approx(-s.u[20 - i]));
}

TEST_CASE("transform matches a direct sum")
{
    std::mt19937 rng(17);
    std::normal_distribution<double> n(0.0, 1.0);
    const FieldGrid f = lattice_field(Geometry{1.0, 1.0, 1.0, 2.0, 1.5}, 0.5, [&](double, double) { return cplx(n(rng), n(rng)); });
    const SpectrumGrid s = far_field_spectrum(f, 2);
    CHECK(s.u.size() == 17);
    CHECK(s.v.size() == 13);
    for (Eigen::Index iv = 0; iv < s.v.size(); ++iv)
        for (Eigen::Index iu = 0; iu < s.u.size(); ++iu)
            CHECK(std::abs(s.values(iv, iu) - direct_transform(f, s.u[iu], s.v[iv])) < 1e-11);
}

TEST_CASE("linear phase moves the peak")
{
    const double u0 = 0.3;
    const FieldGrid f = lattice_field(Geometry{1.0, 1.0, 1.0, 10.0, 6.0}, 0.5,
                                      [&](double x, double) { return std::exp(-1i * kK * u0 * x); });
    const SpectrumGrid s = far_field_spectrum(f, 4);
    Eigen::Index iv = 0, iu = 0;
    s.values.cwiseAbs().maxCoeff(&iv, &iu);
    CHECK(std::abs(s.u[iu] - u0) <= s.u[1] - s.u[0]);
    CHECK(std::abs(s.v[iv]) < 1e-12);
}

TEST_CASE("energy is preserved")
{
    std::mt19937 rng(23);
    std::normal_distribution<double> n(0.0, 1.0);
    const FieldGrid f = lattice_field(Geometry{1.0, 1.0, 1.0, 4.0, 3.0}, 0.45, [&](double, double) { return cplx(n(rng), n(rng)); });
    const SpectrumGrid s = far_field_spectrum(f, 1);
    const double hx = 0.45, hy = 0.45;
    const double du = s.u[1] - s.u[0], dv = s.v[1] - s.v[0];
    const double near = f.values.squaredNorm() * hx * hy;
    const double far = s.values.squaredNorm() * du * dv * (hx * hy) * (hx * hy);
    CHECK(far == doctest::Approx(near).epsilon(1e-10));
}

TEST_CASE("zero padding keeps coincident bins")
{
    const FieldGrid f = lattice_field(Geometry{1.0, 1.0, 1.0, 3.0, 2.0}, 0.5,
                                      [](double x, double y) { return std::exp(-0.1 * (x * x + y * y)) * std::exp(0.4i * x); });
    const SpectrumGrid s1 = far_field_spectrum(f, 1);
    const SpectrumGrid s3 = far_field_spectrum(f, 3);
    const Eigen::Index c1u = (s1.u.size() - 1) / 2, c1v = (s1.v.size() - 1) / 2;
    const Eigen::Index c3u = (s3.u.size() - 1) / 2, c3v = (s3.v.size() - 1) / 2;
    for (Eigen::Index m = -c1v; m <= c1v; ++m)
        for (Eigen::Index l = -c1u; l <= c1u; ++l)
        {
            CHECK(s3.u[c3u + 3 * l] == doctest::Approx(s1.u[c1u + l]));
            CHECK(std::abs(s3.values(c3v + 3 * m, c3u + 3 * l) - s1.values(c1v + m, c1u + l)) < 1e-12);
        }
}

TEST_CASE("visible region mask")
{
    const FieldGrid f = lattice_field(Geometry{1.0, 1.0, 1.0, 3.0, 2.0}, 0.5, [](double, double) { return cplx(1.0); });
    const SpectrumGrid s = far_field_spectrum(f, 4);
    const auto mask = s.visible_mask();
    Eigen::Index inside = 0;
    for (Eigen::Index iv = 0; iv < s.v.size(); ++iv)
        for (Eigen::Index iu = 0; iu < s.u.size(); ++iu)
        {
            CHECK(mask(iv, iu) == (s.u[iu] * s.u[iu] + s.v[iv] * s.v[iv] <= 1.0));
            inside += mask(iv, iu);
        }
    CHECK(inside > 0);
    CHECK(inside < mask.size());
}

TEST_CASE("input validation")
{
    const Geometry g = testing::square_geometry();
    FieldGrid warped;
    warped.grid = plan_warped(g);
    warped.values = Eigen::MatrixXcd::Ones(warped.grid.ny(), warped.grid.nx());
    warped.grid.step_x.reset();
    try
    {
        far_field_spectrum(warped);
        FAIL("expected NonUniformGrid");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::NonUniformGrid);
    }

    const FieldGrid coarse = lattice_field(Geometry{1.0, 1.0, 1.0, 3.0, 3.0}, 0.6, [](double, double) { return cplx(1.0); });
    CHECK_THROWS_AS(far_field_spectrum(coarse), Error);
    const FieldGrid single = lattice_field(Geometry{1.0, 1.0, 1.0, 0.2, 3.0}, 0.5, [](double, double) { return cplx(1.0); });
    CHECK_THROWS_AS(far_field_spectrum(single), Error);
}

TEST_CASE("principal cuts")
{
    const FieldGrid f = lattice_field(Geometry{1.0, 1.0, 1.0, 6.0, 4.0}, 0.5,
                                      [](double x, double y) { return cplx(std::exp(-0.05 * (x * x + 2.0 * y * y))); });
    const PrincipalCuts cuts = principal_cuts(far_field_spectrum(f, 4));
    CHECK(cuts.u_db.maxCoeff() == doctest::Approx(0.0));
    CHECK(cuts.v_db.maxCoeff() == doctest::Approx(0.0));
    const Eigen::Index n = cuts.u_db.size();
    for (Eigen::Index i = 0; i < n; ++i)
        CHECK(cuts.u_db[i] == doctest::Approx(cuts.u_db[n - 1 - i]).epsilon(1e-9));

    CHECK(max_cut_deviation_db(cuts.u_db, cuts.u_db) == 0.0);
    Eigen::VectorXd shifted = cuts.u_db;
    shifted.array() += 0.3;
    CHECK(max_cut_deviation_db(cuts.u_db, shifted) == doctest::Approx(0.3));
    CHECK_THROWS_AS(max_cut_deviation_db(cuts.u_db, cuts.v_db), Error);
}

TEST_CASE("uniform line source has its first null at half the inverse width")
{
    const double a = 4.0;
    const FieldGrid f = lattice_field(Geometry{1.0, 1.0, 1.0, 20.0, 0.1}, 0.05,
                                      [&](double x, double) { return cplx(std::abs(x) <= a + 1e-9 ? 1.0 : 0.0); });
    const SpectrumGrid s = far_field_spectrum(f, 4);
    const PrincipalCuts cuts = principal_cuts(s);
    const Eigen::Index centre = (cuts.u.size() - 1) / 2;
    Eigen::Index null = centre + 1;
    while (cuts.u_db[null + 1] < cuts.u_db[null])
        ++null;
    CHECK(std::abs(cuts.u[null] - 1.0 / (2.0 * a)) <= 1.5 * (cuts.u[1] - cuts.u[0]));
}
