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
#include "nfsample/geometry.hpp"
#include "nfsample/sampling.hpp"

#include <map>
#include <string>

namespace nfsample::cli
{

enum class SourceKind
{
    Aperture,
    Lattice,
    User
};

struct SourceSpec
{
    SourceKind kind = SourceKind::Lattice;
    cplx amplitude{1.0, 0.0};
    double pitch = 0.5;
    Lattice lattice = Lattice::Triangular;
    double steer_u = 0.0;
    double steer_v = 0.0;
    Taper taper = Taper::None;
    std::string file; // UserGrid current file
};

struct RunConfig
{
    Geometry geometry;
    Scheme scheme = Scheme::UniformLinearized;
    SchemeParams params;
    SourceSpec source;
    double quadrature = kDefaultQuadratureDensity;
    double src_density = 8.0;
    double obs_density = 8.0;
    long matrix_budget = 4000;
    double knee_threshold = 1e-2;
    int zero_pad = 4;
    int guard_band = 1;
    double grid_step = 0.5;
    std::string out;
};

/// Parses `key = value` lines; '#' starts a comment. Unknown or repeated keys are errors.
std::map<std::string, std::string> parse_config_text(const std::string &text);

/// Applies recognised keys on top of `base`. Throws Error(Config) on unknown keys or bad values.
RunConfig apply_config(const std::map<std::string, std::string> &keys, RunConfig base = {});

RunConfig load_config_file(const std::string &path);

SourceModel make_source(const SourceSpec &spec);

} // namespace nfsample::cli
