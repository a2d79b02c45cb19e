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

// Text file formats shared by the command line tools.
//
// Every file is UTF-8 with LF line endings: `# key = value` header lines followed by
// tab-separated numeric rows written with 12 significant digits. Grids are stored
// row-major with y as the outer index.

#include "nfsample/field.hpp"
#include "nfsample/geometry.hpp"
#include "nfsample/sampling.hpp"
#include "nfsample/spectrum.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nfsample
{

/// "%.12g", with negative zero printed as 0.
std::string format_number(double value);
/// Strict decimal parse; throws Error(Parse).
double parse_number(const std::string &text);

using Header = std::vector<std::pair<std::string, std::string>>;

struct Table
{
    Header header;
    std::vector<std::vector<double>> rows;

    const std::string *find(const std::string &key) const;
    std::map<std::string, std::string> header_map() const;
};

Table read_table(std::istream &in);
Table read_table_file(const std::string &path);
void write_table(std::ostream &out, const Table &table);
void write_text_file(const std::string &path, const std::string &content);

/// Header describing a plan (scheme, steps, scheme constants) plus the geometry echo.
Header plan_header(const SamplingPlan &plan, const Geometry &g);

void write_plan(std::ostream &out, const SamplingPlan &plan, const Geometry &g);

struct LoadedPlan
{
    SamplingPlan plan;
    Geometry geometry;
};
LoadedPlan read_plan(const Table &table);

void write_field(std::ostream &out, const FieldGrid &field, const Geometry &g);

struct LoadedField
{
    FieldGrid field;
    Geometry geometry;
};
LoadedField read_field(const Table &table);

/// Source current files share the field layout with `domain = source`.
void write_user_grid(std::ostream &out, const UserGrid &grid, const Geometry &g);
UserGrid read_user_grid(const Table &table);

void write_spectrum(std::ostream &out, const SpectrumGrid &spectrum);
void write_cut(std::ostream &out, const Eigen::VectorXd &axis, const Eigen::VectorXd &db, const std::string &axis_name);
void write_singular_values(std::ostream &out, const Eigen::VectorXd &sigma);

} // namespace nfsample
