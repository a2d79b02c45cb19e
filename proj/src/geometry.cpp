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

#include "nfsample/geometry.hpp"

#include "nfsample/error.hpp"
#include "nfsample/io.hpp"

#include <cctype>
#include <cmath>
#include <string_view>

namespace nfsample
{

const char *to_string(ErrorCode code)
{
    switch (code)
    {
    case ErrorCode::NonPositiveDimension: return "NonPositiveDimension";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::NonPositiveStep: return "NonPositiveStep";
    case ErrorCode::QuadratureUnderresolved: return "QuadratureUnderresolved";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::SchemeMismatch: return "SchemeMismatch";
    case ErrorCode::NonUniformGrid: return "NonUniformGrid";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::ZeroReference: return "ZeroReference";
    case ErrorCode::DimensionOverflow: return "DimensionOverflow";
    case ErrorCode::FactorizationFailure: return "FactorizationFailure";
    case ErrorCode::Config: return "ConfigError";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Io: return "IoError";
    }
    return "UnknownError";
}

Geometry Geometry::in_meters() const
{
    Geometry g = *this;
    g.a = to_meters(a);
    g.b = to_meters(b);
    g.d = to_meters(d);
    g.x_obs = to_meters(x_obs);
    g.y_obs = to_meters(y_obs);
    return g;
}

Geometry Geometry::from_meters_geometry(const Geometry &g_m)
{
    Geometry g = g_m;
    g.a = g_m.from_meters(g_m.a);
    g.b = g_m.from_meters(g_m.b);
    g.d = g_m.from_meters(g_m.d);
    g.x_obs = g_m.from_meters(g_m.x_obs);
    g.y_obs = g_m.from_meters(g_m.y_obs);
    return g;
}

const Geometry &validate(const Geometry &g)
{
    const std::pair<const char *, double> fields[] = {
        {"a", g.a}, {"b", g.b}, {"d", g.d}, {"Xo", g.x_obs}, {"Yo", g.y_obs}, {"wavelength", g.wavelength_m}};
    for (const auto &[name, value] : fields)
        if (!(value > 0.0) || !std::isfinite(value))
            throw Error(ErrorCode::NonPositiveDimension, std::string(name) + " must be positive, got " + format_number(value));
    return g;
}

namespace
{
std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}
} // namespace

double parse_length(const std::string &text, double wavelength_m)
{
    std::string_view s = trim(text);
    bool in_lambda = false;
    for (std::string_view suffix : {std::string_view("lambda"), std::string_view("lam"), std::string_view("λ")})
    {
        if (s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix)
        {
            s = trim(s.substr(0, s.size() - suffix.size()));
            in_lambda = true;
            break;
        }
    }
    const double value = parse_number(std::string(s));
    return in_lambda ? value : value / wavelength_m;
}

Geometry geometry_from_keys(const std::map<std::string, std::string> &keys, const Geometry &defaults)
{
    Geometry g = defaults;
    if (auto it = keys.find("wavelength"); it != keys.end())
        g.wavelength_m = parse_number(std::string(trim(it->second)));
    if (!(g.wavelength_m > 0.0))
        throw Error(ErrorCode::NonPositiveDimension, "wavelength must be positive");

    const std::pair<const char *, double Geometry::*> lengths[] = {
        {"a", &Geometry::a}, {"b", &Geometry::b}, {"d", &Geometry::d}, {"Xo", &Geometry::x_obs}, {"Yo", &Geometry::y_obs}};
    for (const auto &[key, member] : lengths)
        if (auto it = keys.find(key); it != keys.end())
            g.*member = parse_length(it->second, g.wavelength_m);
    return g;
}

std::map<std::string, std::string> geometry_echo(const Geometry &g)
{
    return {{"a", format_number(g.a) + " lam"},
            {"b", format_number(g.b) + " lam"},
            {"d", format_number(g.d) + " lam"},
            {"Xo", format_number(g.x_obs) + " lam"},
            {"Yo", format_number(g.y_obs) + " lam"},
            {"wavelength", format_number(g.wavelength_m)}};
}

} // namespace nfsample
