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

#include "config.hpp"

#include "nfsample/error.hpp"
#include "nfsample/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace nfsample::cli
{

namespace
{

std::string trimmed(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

const std::set<std::string> &known_keys()
{
    static const std::set<std::string> keys = {
        "a", "b", "d", "Xo", "Yo", "wavelength",
        "scheme", "step", "alpha1", "alpha2", "p", "inclusive_edge", "step_resolution",
        "source", "amplitude", "pitch", "lattice", "steer_u", "steer_v", "taper", "source_file",
        "quadrature", "src_density", "obs_density", "matrix_budget", "knee_threshold",
        "zero_pad", "guard_band", "grid_step", "out"};
    return keys;
}

double number(const std::map<std::string, std::string> &keys, const std::string &key)
{
    try
    {
        return parse_number(keys.at(key));
    }
    catch (const Error &)
    {
        throw Error(ErrorCode::Config, "key '" + key + "' expects a number, got '" + keys.at(key) + "'");
    }
}

bool boolean(const std::string &key, const std::string &value)
{
    if (value == "true" || value == "yes" || value == "1")
        return true;
    if (value == "false" || value == "no" || value == "0")
        return false;
    throw Error(ErrorCode::Config, "key '" + key + "' expects true/false, got '" + value + "'");
}

} // namespace

std::map<std::string, std::string> parse_config_text(const std::string &text)
{
    std::map<std::string, std::string> keys;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trimmed(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::Config, "line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trimmed(line.substr(0, eq));
        const std::string value = trimmed(line.substr(eq + 1));
        if (!known_keys().contains(key))
            throw Error(ErrorCode::Config, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        if (!keys.emplace(key, value).second)
            throw Error(ErrorCode::Config, "line " + std::to_string(lineno) + ": key '" + key + "' given twice");
    }
    return keys;
}

RunConfig apply_config(const std::map<std::string, std::string> &keys, RunConfig cfg)
{
    for (const auto &[key, value] : keys)
        if (!known_keys().contains(key))
            throw Error(ErrorCode::Config, "unknown key '" + key + "'");

    try
    {
        cfg.geometry = geometry_from_keys(keys, cfg.geometry);
    }
    catch (const Error &e)
    {
        throw Error(ErrorCode::Config, e.what());
    }

    const auto has = [&](const char *k) { return keys.contains(k); };
    if (has("scheme"))
        cfg.scheme = scheme_from_string(keys.at("scheme"));
    if (has("step"))
        cfg.params.step = parse_length(keys.at("step"), cfg.geometry.wavelength_m);
    if (has("alpha1"))
        cfg.params.alpha1 = number(keys, "alpha1");
    if (has("alpha2"))
        cfg.params.alpha2 = number(keys, "alpha2");
    if (has("p"))
        cfg.params.p = static_cast<int>(number(keys, "p"));
    if (has("inclusive_edge"))
        cfg.params.inclusive_edge = boolean("inclusive_edge", keys.at("inclusive_edge"));
    if (has("step_resolution"))
        cfg.params.step_resolution = parse_length(keys.at("step_resolution"), cfg.geometry.wavelength_m);

    if (has("source"))
    {
        const std::string &s = keys.at("source");
        if (s == "aperture")
            cfg.source.kind = SourceKind::Aperture;
        else if (s == "lattice")
            cfg.source.kind = SourceKind::Lattice;
        else if (s == "user")
            cfg.source.kind = SourceKind::User;
        else
            throw Error(ErrorCode::Config, "source must be aperture, lattice or user, got '" + s + "'");
    }
    if (has("amplitude"))
        cfg.source.amplitude = number(keys, "amplitude");
    if (has("pitch"))
        cfg.source.pitch = parse_length(keys.at("pitch"), cfg.geometry.wavelength_m);
    if (has("lattice"))
    {
        const std::string &s = keys.at("lattice");
        if (s == "triangular")
            cfg.source.lattice = Lattice::Triangular;
        else if (s == "rectangular")
            cfg.source.lattice = Lattice::Rectangular;
        else
            throw Error(ErrorCode::Config, "lattice must be triangular or rectangular");
    }
    if (has("steer_u"))
        cfg.source.steer_u = number(keys, "steer_u");
    if (has("steer_v"))
        cfg.source.steer_v = number(keys, "steer_v");
    if (has("taper"))
    {
        const std::string &s = keys.at("taper");
        if (s == "none")
            cfg.source.taper = Taper::None;
        else if (s == "cosine")
            cfg.source.taper = Taper::Cosine;
        else
            throw Error(ErrorCode::Config, "taper must be none or cosine");
    }
    if (has("source_file"))
        cfg.source.file = keys.at("source_file");

    if (has("quadrature"))
        cfg.quadrature = number(keys, "quadrature");
    if (has("src_density"))
        cfg.src_density = number(keys, "src_density");
    if (has("obs_density"))
        cfg.obs_density = number(keys, "obs_density");
    if (has("matrix_budget"))
        cfg.matrix_budget = static_cast<long>(number(keys, "matrix_budget"));
    if (has("knee_threshold"))
        cfg.knee_threshold = number(keys, "knee_threshold");
    if (has("zero_pad"))
        cfg.zero_pad = static_cast<int>(number(keys, "zero_pad"));
    if (has("guard_band"))
        cfg.guard_band = static_cast<int>(number(keys, "guard_band"));
    if (has("grid_step"))
        cfg.grid_step = parse_length(keys.at("grid_step"), cfg.geometry.wavelength_m);
    if (has("out"))
        cfg.out = keys.at("out");
    return cfg;
}

RunConfig load_config_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open config '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return apply_config(parse_config_text(ss.str()));
}

SourceModel make_source(const SourceSpec &spec)
{
    switch (spec.kind)
    {
    case SourceKind::Aperture:
        return UniformAperture{spec.amplitude};
    case SourceKind::Lattice:
    {
        SteeredLatticeArray arr;
        arr.pitch = spec.pitch;
        arr.lattice = spec.lattice;
        arr.steer_u = spec.steer_u;
        arr.steer_v = spec.steer_v;
        arr.taper = spec.taper;
        arr.amplitude = spec.amplitude;
        return arr;
    }
    case SourceKind::User:
    {
        if (spec.file.empty())
            throw Error(ErrorCode::Config, "source = user needs source_file");
        UserGrid grid = read_user_grid(read_table_file(spec.file));
        grid.current *= spec.amplitude;
        return grid;
    }
    }
    throw Error(ErrorCode::Config, "unknown source kind");
}

} // namespace nfsample::cli
