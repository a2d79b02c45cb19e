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

#include <map>
#include <numbers>
#include <string>

namespace nfsample
{

/// Planar near-field measurement configuration.
///
/// The source occupies SD = [-a,a] x [-b,b] at z = 0 and the field is probed over
/// OD = [-x_obs,x_obs] x [-y_obs,y_obs] at z = d. Every length is stored in
/// wavelengths; `wavelength_m` is only consulted when converting to or from meters.
struct Geometry
{
    double a = 0.0;
    double b = 0.0;
    double d = 0.0;
    double x_obs = 0.0;
    double y_obs = 0.0;
    double wavelength_m = 1.0;

    /// Wavenumber in radians per wavelength.
    static constexpr double k() { return 2.0 * std::numbers::pi; }

    bool x_covers_source() const { return x_obs >= a; }
    bool y_covers_source() const { return y_obs >= b; }
    bool od_contains_sd() const { return x_covers_source() && y_covers_source(); }

    double to_meters(double length_lambda) const { return length_lambda * wavelength_m; }
    double from_meters(double length_m) const { return length_m / wavelength_m; }

    /// Same geometry expressed in meters (fields a..y_obs) for I/O.
    Geometry in_meters() const;
    /// Inverse of in_meters().
    static Geometry from_meters_geometry(const Geometry &g_m);
};

/// Returns `g` unchanged or throws Error(NonPositiveDimension) naming the offending field.
const Geometry &validate(const Geometry &g);

/// Parses a length value: "3 lam", "3lam", "3 λ" are wavelengths, a bare number is meters.
double parse_length(const std::string &text, double wavelength_m);

/// Builds a geometry from `key = value` pairs (keys a, b, d, Xo, Yo, wavelength).
/// Keys that are absent keep the values of `defaults`.
Geometry geometry_from_keys(const std::map<std::string, std::string> &keys,
                            const Geometry &defaults = {});

/// Header lines echoing the geometry (lengths in wavelengths).
std::map<std::string, std::string> geometry_echo(const Geometry &g);

} // namespace nfsample
