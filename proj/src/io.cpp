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

#include "nfsample/io.hpp"

#include "nfsample/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace nfsample
{

std::string format_number(double value)
{
    if (value == 0.0)
        value = 0.0; // drops the sign of -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

double parse_number(const std::string &text)
{
    std::size_t begin = text.find_first_not_of(" \t\r");
    std::size_t end = text.find_last_not_of(" \t\r");
    if (begin == std::string::npos)
        throw Error(ErrorCode::Parse, "empty number");
    const char *first = text.data() + begin;
    const char *last = text.data() + end + 1;
    if (*first == '+')
        ++first;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw Error(ErrorCode::Parse, "not a number: '" + text + "'");
    return value;
}

const std::string *Table::find(const std::string &key) const
{
    for (const auto &[k, v] : header)
        if (k == key)
            return &v;
    return nullptr;
}

std::map<std::string, std::string> Table::header_map() const
{
    return {header.begin(), header.end()};
}

Table read_table(std::istream &in)
{
    Table t;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (line[0] == '#')
        {
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                continue; // free-form comment
            auto key = line.substr(1, eq - 1);
            auto value = line.substr(eq + 1);
            key.erase(0, key.find_first_not_of(" \t"));
            key.erase(key.find_last_not_of(" \t") + 1);
            value.erase(0, value.find_first_not_of(" \t"));
            value.erase(value.find_last_not_of(" \t") + 1);
            t.header.emplace_back(std::move(key), std::move(value));
            continue;
        }
        std::vector<double> row;
        std::size_t pos = 0;
        while (pos <= line.size())
        {
            const std::size_t tab = line.find('\t', pos);
            const std::string cell = line.substr(pos, tab == std::string::npos ? std::string::npos : tab - pos);
            try
            {
                row.push_back(parse_number(cell));
            }
            catch (const Error &e)
            {
                throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": " + e.what());
            }
            if (tab == std::string::npos)
                break;
            pos = tab + 1;
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table read_table_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    return read_table(in);
}

void write_table(std::ostream &out, const Table &table)
{
    for (const auto &[k, v] : table.header)
        out << "# " << k << " = " << v << '\n';
    for (const auto &row : table.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "\t" : "") << format_number(row[i]);
        out << '\n';
    }
}

void write_text_file(const std::string &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorCode::Io, "cannot write '" + path + "'");
    out << content;
    if (!out)
        throw Error(ErrorCode::Io, "write failed for '" + path + "'");
}

Header plan_header(const SamplingPlan &plan, const Geometry &g)
{
    const auto step = [](const std::optional<double> &s) { return s ? format_number(*s) : std::string("nonuniform"); };
    Header h;
    h.emplace_back("scheme", to_string(plan.scheme));
    h.emplace_back("step_x", step(plan.step_x));
    h.emplace_back("step_y", step(plan.step_y));
    switch (plan.scheme)
    {
    case Scheme::HalfWavelength:
        h.emplace_back("step", format_number(plan.params.step));
        break;
    case Scheme::OversampledWarped:
        h.emplace_back("alpha1", format_number(plan.params.alpha1));
        h.emplace_back("alpha2", format_number(plan.params.alpha2));
        h.emplace_back("p", std::to_string(plan.params.p));
        break;
    case Scheme::UniformLinearized:
        h.emplace_back("inclusive_edge", plan.params.inclusive_edge ? "true" : "false");
        if (plan.params.inclusive_edge)
            h.emplace_back("step_resolution", format_number(plan.params.step_resolution));
        break;
    case Scheme::WarpedNonuniform:
        break;
    }
    h.emplace_back("nx", std::to_string(plan.nx()));
    h.emplace_back("ny", std::to_string(plan.ny()));
    for (const char *key : {"a", "b", "d", "Xo", "Yo", "wavelength"})
        h.emplace_back(key, geometry_echo(g).at(key));
    return h;
}

void write_plan(std::ostream &out, const SamplingPlan &plan, const Geometry &g)
{
    Table t;
    t.header.emplace_back("format", "plan");
    for (auto &kv : plan_header(plan, g))
        t.header.push_back(std::move(kv));
    t.rows.reserve(static_cast<std::size_t>(plan.count()));
    for (Eigen::Index iy = 0; iy < plan.ny(); ++iy)
        for (Eigen::Index ix = 0; ix < plan.nx(); ++ix)
            t.rows.push_back({plan.x[ix], plan.y[iy]});
    write_table(out, t);
}

namespace
{

bool parse_bool(const std::string &s)
{
    if (s == "true" || s == "1" || s == "yes")
        return true;
    if (s == "false" || s == "0" || s == "no")
        return false;
    throw Error(ErrorCode::Parse, "not a boolean: '" + s + "'");
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> factorized_axes(const Table &t, std::size_t min_cols)
{
    if (t.rows.empty())
        throw Error(ErrorCode::Parse, "file has no data rows");
    for (const auto &row : t.rows)
        if (row.size() < min_cols)
            throw Error(ErrorCode::Parse, "data row with " + std::to_string(row.size()) + " columns, expected " +
                                              std::to_string(min_cols));
    std::size_t nx = 1;
    while (nx < t.rows.size() && t.rows[nx][1] == t.rows[0][1])
        ++nx;
    if (t.rows.size() % nx != 0)
        throw Error(ErrorCode::Parse, "rows do not form a factorized grid");
    const std::size_t ny = t.rows.size() / nx;
    Eigen::VectorXd x(static_cast<Eigen::Index>(nx)), y(static_cast<Eigen::Index>(ny));
    for (std::size_t i = 0; i < nx; ++i)
        x[static_cast<Eigen::Index>(i)] = t.rows[i][0];
    for (std::size_t j = 0; j < ny; ++j)
    {
        y[static_cast<Eigen::Index>(j)] = t.rows[j * nx][1];
        for (std::size_t i = 0; i < nx; ++i)
        {
            const auto &row = t.rows[j * nx + i];
            if (row[0] != x[static_cast<Eigen::Index>(i)] || row[1] != y[static_cast<Eigen::Index>(j)])
                throw Error(ErrorCode::Parse, "rows do not form a factorized grid (y-major order expected)");
        }
    }
    return {x, y};
}

bool axes_match(const Eigen::VectorXd &p, const Eigen::VectorXd &q)
{
    if (p.size() != q.size())
        return false;
    for (Eigen::Index i = 0; i < p.size(); ++i)
        if (std::abs(p[i] - q[i]) > 1e-9 * std::max(1.0, std::abs(q[i])))
            return false;
    return true;
}

LoadedPlan plan_from_table(const Table &t, std::size_t min_cols)
{
    const auto keys = t.header_map();
    LoadedPlan lp;
    lp.geometry = geometry_from_keys(keys);
    validate(lp.geometry);

    const auto get = [&](const char *key) -> const std::string * { return t.find(key); };
    SamplingPlan &plan = lp.plan;
    plan.scheme = get("scheme") ? scheme_from_string(*get("scheme")) : Scheme::HalfWavelength;
    if (auto s = get("step"))
        plan.params.step = parse_number(*s);
    if (auto s = get("alpha1"))
        plan.params.alpha1 = parse_number(*s);
    if (auto s = get("alpha2"))
        plan.params.alpha2 = parse_number(*s);
    if (auto s = get("p"))
        plan.params.p = static_cast<int>(parse_number(*s));
    if (auto s = get("inclusive_edge"))
        plan.params.inclusive_edge = parse_bool(*s);
    if (auto s = get("step_resolution"))
        plan.params.step_resolution = parse_number(*s);
    for (auto [key, member] : {std::pair{"step_x", &SamplingPlan::step_x}, std::pair{"step_y", &SamplingPlan::step_y}})
        if (auto s = get(key); s && *s != "nonuniform")
            plan.*member = parse_number(*s);

    auto [x, y] = factorized_axes(t, min_cols);

    // Regenerate the plan from its description so that positions are exact rather
    // than rounded to 12 digits; fall back to the listed positions when they differ.
    try
    {
        SamplingPlan regen = make_plan(lp.geometry, plan.scheme, plan.params);
        if (axes_match(x, regen.x) && axes_match(y, regen.y))
        {
            plan.x = regen.x;
            plan.y = regen.y;
            plan.step_x = regen.step_x;
            plan.step_y = regen.step_y;
            return lp;
        }
    }
    catch (const Error &)
    {
    }
    plan.x = std::move(x);
    plan.y = std::move(y);
    return lp;
}

} // namespace

LoadedPlan read_plan(const Table &table) { return plan_from_table(table, 2); }

void write_field(std::ostream &out, const FieldGrid &field, const Geometry &g)
{
    if (!field.consistent())
        throw Error(ErrorCode::GridMismatch, "field values do not match the grid or are not finite");
    Table t;
    t.header.emplace_back("format", "field");
    t.header.emplace_back("domain", "observation");
    t.header.emplace_back("provenance", to_string(field.provenance));
    t.header.emplace_back("component", field.component);
    for (auto &kv : plan_header(field.grid, g))
        t.header.push_back(std::move(kv));
    const auto &plan = field.grid;
    t.rows.reserve(static_cast<std::size_t>(plan.count()));
    for (Eigen::Index iy = 0; iy < plan.ny(); ++iy)
        for (Eigen::Index ix = 0; ix < plan.nx(); ++ix)
        {
            const cplx v = field.values(iy, ix);
            t.rows.push_back({plan.x[ix], plan.y[iy], v.real(), v.imag()});
        }
    write_table(out, t);
}

LoadedField read_field(const Table &table)
{
    if (auto d = table.find("domain"); d && *d == "source")
        throw Error(ErrorCode::Parse, "expected an observation-domain field file, got a source file");
    LoadedPlan lp = plan_from_table(table, 4);
    LoadedField lf;
    lf.geometry = lp.geometry;
    lf.field.grid = std::move(lp.plan);
    const Eigen::Index nx = lf.field.grid.nx();
    const Eigen::Index ny = lf.field.grid.ny();
    lf.field.values.resize(ny, nx);
    for (Eigen::Index iy = 0; iy < ny; ++iy)
        for (Eigen::Index ix = 0; ix < nx; ++ix)
        {
            const auto &row = table.rows[static_cast<std::size_t>(iy * nx + ix)];
            lf.field.values(iy, ix) = cplx(row[2], row[3]);
        }
    lf.field.provenance = Provenance::FileLoaded;
    if (auto p = table.find("provenance"))
        lf.field.provenance = provenance_from_string(*p);
    if (auto c = table.find("component"))
        lf.field.component = *c;
    return lf;
}

void write_user_grid(std::ostream &out, const UserGrid &grid, const Geometry &g)
{
    Table t;
    t.header.emplace_back("format", "field");
    t.header.emplace_back("domain", "source");
    for (const char *key : {"a", "b", "d", "Xo", "Yo", "wavelength"})
        t.header.emplace_back(key, geometry_echo(g).at(key));
    for (Eigen::Index iy = 0; iy < grid.y.size(); ++iy)
        for (Eigen::Index ix = 0; ix < grid.x.size(); ++ix)
        {
            const cplx v = grid.current(iy, ix);
            t.rows.push_back({grid.x[ix], grid.y[iy], v.real(), v.imag()});
        }
    write_table(out, t);
}

UserGrid read_user_grid(const Table &table)
{
    const auto d = table.find("domain");
    if (!d || *d != "source")
        throw Error(ErrorCode::Parse, "source current files need a 'domain = source' header");
    auto [x, y] = factorized_axes(table, 4);
    UserGrid g;
    g.x = std::move(x);
    g.y = std::move(y);
    g.current.resize(g.y.size(), g.x.size());
    for (Eigen::Index iy = 0; iy < g.y.size(); ++iy)
        for (Eigen::Index ix = 0; ix < g.x.size(); ++ix)
        {
            const auto &row = table.rows[static_cast<std::size_t>(iy * g.x.size() + ix)];
            g.current(iy, ix) = cplx(row[2], row[3]);
        }
    return g;
}

void write_spectrum(std::ostream &out, const SpectrumGrid &spectrum)
{
    Table t;
    t.header.emplace_back("format", "spectrum");
    t.header.emplace_back("zero_pad", std::to_string(spectrum.zero_pad_factor));
    t.header.emplace_back("nu", std::to_string(spectrum.u.size()));
    t.header.emplace_back("nv", std::to_string(spectrum.v.size()));
    for (Eigen::Index iv = 0; iv < spectrum.v.size(); ++iv)
        for (Eigen::Index iu = 0; iu < spectrum.u.size(); ++iu)
        {
            const cplx v = spectrum.values(iv, iu);
            t.rows.push_back({spectrum.u[iu], spectrum.v[iv], v.real(), v.imag()});
        }
    write_table(out, t);
}

void write_cut(std::ostream &out, const Eigen::VectorXd &axis, const Eigen::VectorXd &db, const std::string &axis_name)
{
    Table t;
    t.header.emplace_back("format", "cut");
    t.header.emplace_back("axis", axis_name);
    for (Eigen::Index i = 0; i < axis.size(); ++i)
        t.rows.push_back({axis[i], db[i]});
    write_table(out, t);
}

void write_singular_values(std::ostream &out, const Eigen::VectorXd &sigma)
{
    Table t;
    t.header.emplace_back("format", "singular_values");
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
        t.rows.push_back({static_cast<double>(i + 1), sigma[i]});
    write_table(out, t);
}

} // namespace nfsample
