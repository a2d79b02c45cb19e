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

#include "cli.hpp"

#include "config.hpp"

#include "nfsample/analysis.hpp"
#include "nfsample/error.hpp"
#include "nfsample/io.hpp"
#include "nfsample/recon.hpp"
#include "nfsample/spectrum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace nfsample::cli
{

namespace
{

std::string fixed(double value, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, value);
    return buf;
}

struct Options
{
    std::string config_path;
    std::string out;
    std::vector<std::string> sets;
    std::string scheme;
    std::string step;
    double quadrature = 0.0;
    bool inclusive_edge = false;
    int guard_band = -1;
    int zero_pad = 0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    int p = 0;

    // command operands
    std::string input_a;
    std::string input_b;
    std::string target_plan;
    std::string grid_step;
    bool resample = false;
    bool no_resample = false;
};

RunConfig resolve(const Options &o)
{
    RunConfig cfg;
    std::map<std::string, std::string> keys;
    if (!o.config_path.empty())
    {
        std::ifstream in(o.config_path, std::ios::binary);
        if (!in)
            throw Error(ErrorCode::Io, "cannot open config '" + o.config_path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        keys = parse_config_text(ss.str());
    }
    for (const auto &s : o.sets)
    {
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::Config, "--set expects key=value, got '" + s + "'");
        std::string key = s.substr(0, eq), value = s.substr(eq + 1);
        key.erase(key.find_last_not_of(" \t") + 1);
        value.erase(0, value.find_first_not_of(" \t"));
        keys[key] = value;
    }
    if (!o.scheme.empty())
        keys["scheme"] = o.scheme;
    if (!o.step.empty())
        keys["step"] = o.step;
    if (!o.grid_step.empty())
        keys["grid_step"] = o.grid_step;
    cfg = apply_config(keys);

    if (o.quadrature > 0.0)
        cfg.quadrature = o.quadrature;
    if (o.inclusive_edge)
        cfg.params.inclusive_edge = true;
    if (o.guard_band >= 0)
        cfg.guard_band = o.guard_band;
    if (o.zero_pad > 0)
        cfg.zero_pad = o.zero_pad;
    if (o.alpha1 > 0.0)
        cfg.params.alpha1 = o.alpha1;
    if (o.alpha2 > 0.0)
        cfg.params.alpha2 = o.alpha2;
    if (o.p > 0)
        cfg.params.p = o.p;
    if (!o.out.empty())
        cfg.out = o.out;
    return cfg;
}

std::string render(const auto &writer)
{
    std::ostringstream ss;
    writer(ss);
    return ss.str();
}

void emit(const std::string &path, const std::string &content, std::ostream &out)
{
    if (path.empty() || path == "-")
        out << content;
    else
        write_text_file(path, content);
}

void warn(const SamplingPlan &plan, std::ostream &err)
{
    for (const auto &w : plan.warnings)
        err << "warning: " << w << '\n';
}

int cmd_plan(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    const Geometry &g = validate(cfg.geometry);
    const SamplingPlan plan = make_plan(g, cfg.scheme, cfg.params);
    warn(plan, err);
    const PlanStats s = stats(plan, g);

    const auto step = [](const std::optional<double> &v) { return v ? fixed(*v, 4) + " lam" : std::string("nonuniform"); };
    out << "scheme = " << to_string(plan.scheme) << '\n'
        << "step_x = " << step(plan.step_x) << '\n'
        << "step_y = " << step(plan.step_y) << '\n'
        << "Mx = " << plan.nx() << '\n'
        << "My = " << plan.ny() << '\n'
        << "M = " << s.count << '\n'
        << "M_half = " << s.count_halfwave << '\n'
        << "N = " << s.ndf << '\n'
        << "R = " << fixed(s.reduction_pct, 2) << " %\n"
        << "R_asymptotic = " << fixed(s.reduction_pct_asymptotic, 2) << " %\n";
    if (!cfg.out.empty())
        write_text_file(cfg.out, render([&](std::ostream &os) { write_plan(os, plan, g); }));
    return kExitOk;
}

int cmd_simulate(const RunConfig &cfg, const Options &o, std::ostream &out, std::ostream &)
{
    const LoadedPlan lp = read_plan(read_table_file(o.input_a));
    const FieldGrid field = radiate(make_source(cfg.source), lp.geometry, lp.plan, cfg.quadrature);
    emit(cfg.out, render([&](std::ostream &os) { write_field(os, field, lp.geometry); }), out);
    return kExitOk;
}

SamplingPlan target_grid(const RunConfig &cfg, const Options &o, const Geometry &g)
{
    if (!o.target_plan.empty())
        return read_plan(read_table_file(o.target_plan)).plan;
    return dense_grid(g, cfg.grid_step);
}

int cmd_reconstruct(const RunConfig &cfg, const Options &o, std::ostream &out, std::ostream &err)
{
    const LoadedField lf = read_field(read_table_file(o.input_a));
    if (!o.scheme.empty() && scheme_from_string(o.scheme) != lf.field.grid.scheme)
        throw Error(ErrorCode::SchemeMismatch, "field file holds a " + to_string(lf.field.grid.scheme) +
                                                   " plan, requested evaluator is " + o.scheme);
    const Interpolant interp(lf.field, lf.geometry);
    const SamplingPlan target = target_grid(cfg, o, lf.geometry);
    const bool outside = std::any_of(target.x.begin(), target.x.end(), [&](double x) { return !interp.covers(x, 0.0); }) ||
                         std::any_of(target.y.begin(), target.y.end(), [&](double y) { return !interp.covers(0.0, y); });
    if (outside)
        err << "warning: target grid extends outside the observation domain\n";
    FieldGrid rec = resample(interp, target);
    rec.component = lf.field.component;
    emit(cfg.out, render([&](std::ostream &os) { write_field(os, rec, lf.geometry); }), out);
    return kExitOk;
}

bool is_half_wave_lattice(const SamplingPlan &plan)
{
    return plan.step_x && plan.step_y && *plan.step_x <= 0.5 + 1e-9 && *plan.step_y <= 0.5 + 1e-9 &&
           (plan.scheme == Scheme::HalfWavelength || plan.scheme == Scheme::UniformLinearized);
}

int cmd_spectrum(const RunConfig &cfg, const Options &o, std::ostream &out, std::ostream &)
{
    const LoadedField lf = read_field(read_table_file(o.input_a));
    FieldGrid grid = lf.field;
    if (!is_half_wave_lattice(grid.grid))
    {
        if (o.no_resample)
            throw Error(ErrorCode::NonUniformGrid, "input is not a uniform lattice with steps <= lambda/2; resampling disabled");
        grid = resample(Interpolant(lf.field, lf.geometry), dense_grid(lf.geometry, cfg.grid_step));
    }
    const SpectrumGrid spectrum = far_field_spectrum(grid, cfg.zero_pad);
    const PrincipalCuts cuts = principal_cuts(spectrum);

    Eigen::Index iv = 0, iu = 0;
    spectrum.values.cwiseAbs().maxCoeff(&iv, &iu);
    out << "grid = " << grid.grid.nx() << " x " << grid.grid.ny() << '\n'
        << "spectrum = " << spectrum.u.size() << " x " << spectrum.v.size() << '\n'
        << "peak_u = " << fixed(spectrum.u[iu], 4) << '\n'
        << "peak_v = " << fixed(spectrum.v[iv], 4) << '\n';

    const std::string base = cfg.out.empty() ? std::string("spectrum") : cfg.out;
    write_text_file(base + ".spectrum.tsv", render([&](std::ostream &os) { write_spectrum(os, spectrum); }));
    write_text_file(base + ".ucut.tsv", render([&](std::ostream &os) { write_cut(os, cuts.u, cuts.u_db, "u"); }));
    write_text_file(base + ".vcut.tsv", render([&](std::ostream &os) { write_cut(os, cuts.v, cuts.v_db, "v"); }));
    return kExitOk;
}

int cmd_compare(const RunConfig &cfg, const Options &o, std::ostream &out, std::ostream &)
{
    const LoadedField a = read_field(read_table_file(o.input_a));
    LoadedField b = read_field(read_table_file(o.input_b));
    const bool same = a.field.grid.nx() == b.field.grid.nx() && a.field.grid.ny() == b.field.grid.ny() &&
                      (a.field.grid.x - b.field.grid.x).cwiseAbs().maxCoeff() <= 1e-9 &&
                      (a.field.grid.y - b.field.grid.y).cwiseAbs().maxCoeff() <= 1e-9;
    if (!same)
    {
        if (!o.resample)
            throw Error(ErrorCode::GridMismatch, "fields are on different grids; pass --resample to interpolate the second onto the first");
        b.field = resample(Interpolant(b.field, b.geometry), a.field.grid);
    }
    const MetricsReport m = rrmse(a.field, b.field, cfg.guard_band);

    out << "rrmse = " << format_number(m.rrmse_squared) << '\n'
        << "rrmse_sqrt = " << format_number(m.rrmse_sqrt) << '\n'
        << "max_abs_err = " << format_number(m.max_abs_err) << '\n'
        << "points = " << m.compared_points << '\n'
        << "guard_band = " << cfg.guard_band << '\n';

    if (!cfg.out.empty())
    {
        nlohmann::ordered_json j;
        j["rrmse_squared"] = m.rrmse_squared;
        j["rrmse_sqrt"] = m.rrmse_sqrt;
        j["max_abs_err"] = m.max_abs_err;
        j["compared_points"] = m.compared_points;
        j["guard_band"] = cfg.guard_band;
        j["resampled"] = !same;
        write_text_file(cfg.out, j.dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_svd(const RunConfig &cfg, std::ostream &out, std::ostream &)
{
    const Geometry &g = validate(cfg.geometry);
    const OperatorMatrix op = discretize_operator(g, cfg.src_density, cfg.obs_density, cfg.matrix_budget);
    const Eigen::VectorXd sigma = singular_spectrum(op);
    const Eigen::Index knee = knee_index(sigma, cfg.knee_threshold);

    out << "matrix = " << op.entries.rows() << " x " << op.entries.cols() << '\n'
        << "sigma_1 = " << format_number(sigma.size() ? sigma[0] : 0.0) << '\n'
        << "knee_threshold = " << format_number(cfg.knee_threshold) << '\n'
        << "knee = " << knee << '\n'
        << "N_predicted = " << ndf_estimate(g) << '\n';
    if (!cfg.out.empty())
        write_text_file(cfg.out, render([&](std::ostream &os) { write_singular_values(os, sigma); }));
    return kExitOk;
}

int exit_code(ErrorCode code)
{
    switch (error_class(code))
    {
    case ErrorClass::Config: return kExitConfig;
    case ErrorClass::Io: return kExitIo;
    case ErrorClass::Numeric: return kExitNumeric;
    }
    return kExitNumeric;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Planar near-field sampling planner and reconstruction toolkit", "nfsample"};
    app.require_subcommand(1);

    Options o;
    app.add_option("--config", o.config_path, "key = value configuration file");
    app.add_option("--out", o.out, "output path (or prefix for spectrum)");
    app.add_option("--set", o.sets, "override a configuration key, e.g. --set a=3lam");
    app.add_option("--quadrature", o.quadrature, "quadrature density, points per wavelength");
    app.add_flag("--inclusive-edge", o.inclusive_edge, "uniform scheme: fill the observation span at scanner step resolution");
    app.add_option("--guard-band", o.guard_band, "border samples excluded from rRMSE");
    app.add_option("--zero-pad", o.zero_pad, "zero padding factor of the spectrum transform");
    app.fallthrough();

    auto *plan = app.add_subcommand("plan", "generate a sampling plan and print its statistics");
    plan->add_option("--scheme", o.scheme, "half | warped | oversampled | uniform");
    plan->add_option("--step", o.step, "half-wavelength step, e.g. 0.48lam");
    plan->add_option("--alpha1", o.alpha1, "edge oversampling along x");
    plan->add_option("--alpha2", o.alpha2, "edge oversampling along y");
    plan->add_option("-p", o.p, "oversampling exponent");

    auto *simulate = app.add_subcommand("simulate", "evaluate the synthetic source on a plan");
    simulate->add_option("plan", o.input_a, "plan file")->required();

    auto *reconstruct = app.add_subcommand("reconstruct", "interpolate a field file onto another grid");
    reconstruct->add_option("field", o.input_a, "field file")->required();
    reconstruct->add_option("--target", o.target_plan, "plan file with the target positions");
    reconstruct->add_option("--grid-step", o.grid_step, "step of the dense target grid (default 0.5lam)");
    reconstruct->add_option("--scheme", o.scheme, "expected scheme of the field file");

    auto *spectrum = app.add_subcommand("spectrum", "plane-wave spectrum and principal cuts");
    spectrum->add_option("field", o.input_a, "field file")->required();
    spectrum->add_option("--grid-step", o.grid_step, "resampling step for non half-wavelength inputs");
    spectrum->add_flag("--no-resample", o.no_resample, "fail instead of resampling non-uniform inputs");

    auto *compare = app.add_subcommand("compare", "rRMSE between two field files");
    compare->add_option("reference", o.input_a, "reference field file")->required();
    compare->add_option("candidate", o.input_b, "candidate field file")->required();
    compare->add_flag("--resample", o.resample, "interpolate the candidate onto the reference grid");

    auto *svd = app.add_subcommand("svd", "singular values of the discretized radiation operator");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try
    {
        const RunConfig cfg = resolve(o);
        if (plan->parsed())
            return cmd_plan(cfg, out, err);
        if (simulate->parsed())
            return cmd_simulate(cfg, o, out, err);
        if (reconstruct->parsed())
            return cmd_reconstruct(cfg, o, out, err);
        if (spectrum->parsed())
            return cmd_spectrum(cfg, o, out, err);
        if (compare->parsed())
            return cmd_compare(cfg, o, out, err);
        if (svd->parsed())
            return cmd_svd(cfg, out, err);
    }
    catch (const Error &e)
    {
        err << "error: " << e.what() << '\n';
        return exit_code(e.code());
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
    return kExitConfig;
}

} // namespace nfsample::cli
