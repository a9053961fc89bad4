// SPDX-License-Identifier: Apache-2.0
//
// onebit-mcrb: performance bounds for estimation from one-bit quantized data
// Copyright (C) 2026 The onebit-mcrb authors
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

#include "onebit/scenario.hpp"

#include "onebit/bounds.hpp"
#include "onebit/complexity.hpp"
#include "onebit/errors.hpp"
#include "onebit/estimators.hpp"
#include "onebit/parallel.hpp"
#include "onebit/quantize.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <set>

namespace onebit
{

namespace
{

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

const std::set<std::string> point_metrics{"bias",         "pseudo_true", "mcrb",         "mse_bound",
                                          "crb",          "mc_rmse",     "mc_rmse_fine", "mc_bias",
                                          "mc_bias_fine", "mc_rmse_se"};
const std::set<std::string> surface_metrics{"af", "maf"};

const std::set<std::string> known_keys{
    "name",           "model.family",       "model.sensors",     "model.observation_interval",
    "model.base_sample_rate", "model.max_frequency", "noise.kind", "noise.variance",
    "noise.bandwidth", "sweep.doa_deg",     "sweep.freq_hz",     "sweep.angle_beta_deg",
    "sweep.snr_db",   "sweep.oversampling", "sweep.order",       "snr_reference",
    "search.grid",    "search.tolerance",   "mc.trials",         "mc.seed",
    "orthant.qmc_points", "orthant.fast",   "orthant.seed",      "outputs",
    "table.keys",     "surface.points",     "threads"};

std::string default_column(const std::string &metric, Family family)
{
    const std::string unit = family == Family::Ula ? "deg" : "hz";
    static const std::map<std::string, std::string> names{
        {"mcrb", "sqrt_mcrb"},         {"mse_bound", "sqrt_mse_bound"}, {"crb", "sqrt_crb"},
        {"mc_rmse", "rmse_mml"},       {"mc_rmse_fine", "rmse_fine"},   {"mc_bias", "mean_bias_mml"},
        {"mc_bias_fine", "mean_bias_fine"}, {"mc_rmse_se", "rmse_mml_se"}, {"af", "abs_af"},
        {"maf", "abs_maf"},            {"complexity", "cost_quantized"}};
    if (metric == "bias")
        return "abs_bias_" + unit;
    if (metric == "pseudo_true")
        return "phi0_" + unit;
    auto it = names.find(metric);
    return it == names.end() ? metric : it->second;
}

std::string sanitize(std::string s)
{
    for (char &c : s)
        if (c == ',' || c == '\n' || c == '\r' || c == '"')
            c = c == ',' ? ';' : ' ';
    return s;
}

bool valid_name(const std::string &name)
{
    if (name.empty())
        return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
    });
}

struct Point
{
    double phi = 0.0; // display units
    double angle_deg = 0.0;
    double snr_db = 0.0;
    double U = 1.0;

    double dim(const std::string &name, const std::string &phi_key) const
    {
        if (name == phi_key)
            return phi;
        if (name == "angle_beta_deg")
            return angle_deg;
        if (name == "snr_db")
            return snr_db;
        return U;
    }
};

std::vector<Point> enumerate_points(const Scenario &s)
{
    const std::string pk = s.phi_key();
    std::map<std::string, const std::vector<double> *> lists{
        {pk, &s.phi}, {"angle_beta_deg", &s.angle_beta_deg}, {"snr_db", &s.snr_db}, {"U", &s.oversampling}};

    std::vector<Point> points{Point{}};
    for (const auto &dim : s.order)
    {
        const auto &values = *lists.at(dim);
        std::vector<Point> next;
        next.reserve(points.size() * values.size());
        for (const auto &p : points)
            for (double v : values)
            {
                Point q = p;
                if (dim == pk)
                    q.phi = v;
                else if (dim == "angle_beta_deg")
                    q.angle_deg = v;
                else if (dim == "snr_db")
                    q.snr_db = v;
                else
                    q.U = v;
                next.push_back(q);
            }
        points = std::move(next);
    }
    return points;
}

struct Setup
{
    SteeringModel model;
    NoiseModel noise;
    Theta theta;
    double to_display; // radians or Hz -> CSV unit
};

SteeringModel build_model(const Scenario &s, double U)
{
    if (s.family == Family::Ula)
        return SteeringModel::ula(s.sensors);
    return SteeringModel::tone(s.observation_interval, U * s.base_sample_rate, s.max_frequency);
}

NoiseModel build_noise(const Scenario &s, double U)
{
    if (s.sinc_noise)
        return NoiseModel::sinc(s.noise_variance, s.noise_bandwidth, U * s.base_sample_rate);
    return NoiseModel::white(s.noise_variance);
}

Setup make_setup(const Scenario &s, const Point &p)
{
    SteeringModel model = build_model(s, p.U);
    NoiseModel noise = build_noise(s, p.U);
    const double to_display = s.family == Family::Ula ? 180.0 / std::numbers::pi : 1.0;
    Theta theta;
    theta.phi = p.phi / to_display;
    double power = std::pow(10.0, p.snr_db / 10.0) * s.noise_variance;
    if (s.snr_reference == SnrReference::PerSample)
        power *= model.size();
    theta.beta = std::polar(std::sqrt(power), p.angle_deg * std::numbers::pi / 180.0);
    return {std::move(model), std::move(noise), theta, to_display};
}

std::vector<std::string> key_cells(const Scenario &s, const Point &p)
{
    std::vector<std::string> cells;
    for (const auto &k : s.keys)
        cells.push_back(format_number(p.dim(k, s.phi_key())));
    return cells;
}

std::string join_status(const std::vector<std::string> &errors)
{
    if (errors.empty())
        return "ok";
    std::string out;
    for (const auto &e : errors)
    {
        if (!out.empty())
            out += " | ";
        out += sanitize(e);
    }
    return out;
}

template <class F> bool guarded(std::vector<std::string> &errors, const std::string &label, F &&f)
{
    try
    {
        f();
        return true;
    }
    catch (const Error &e)
    {
        errors.push_back(label + ": " + e.what());
    }
    catch (const std::exception &e)
    {
        errors.push_back(label + ": " + e.what());
    }
    return false;
}

std::vector<std::string> evaluate_point(const Scenario &s, const Point &p, const std::vector<OutputSpec> &metrics)
{
    std::map<std::string, double> v;
    std::vector<std::string> errors;
    auto wants = [&](std::initializer_list<const char *> names) {
        for (const auto &m : metrics)
            for (const char *n : names)
                if (m.metric == n)
                    return true;
        return false;
    };

    std::optional<Setup> setup;
    if (!guarded(errors, "setup", [&] { setup.emplace(make_setup(s, p)); }))
    {
        std::vector<std::string> row = key_cells(s, p);
        for (std::size_t i = 0; i < metrics.size(); ++i)
            row.push_back(format_number(nan_value));
        row.push_back(join_status(errors));
        return row;
    }
    const Setup &u = *setup;
    const double scale = u.to_display;

    if (wants({"bias", "pseudo_true", "mcrb", "mse_bound"}))
    {
        guarded(errors, "bounds", [&] {
            const Theta t0 = pseudo_true(u.model, u.theta, u.noise, s.search);
            const double bias = t0.phi - u.theta.phi;
            v["bias"] = std::abs(bias) * scale;
            v["pseudo_true"] = t0.phi * scale;
            if (wants({"mcrb", "mse_bound"}))
            {
                OrthantOptions opts = s.orthant;
                opts.threads = 1;
                const MomentSet ms = moment_matrices(u.model, u.theta, u.noise, opts);
                const double m11 = mcrb(u.model, u.noise, ms, t0).mcrb11;
                v["mcrb"] = std::sqrt(m11) * scale;
                v["mse_bound"] = std::sqrt(mse_bound(m11, bias)) * scale;
            }
        });
    }
    if (wants({"crb"}))
        guarded(errors, "crb", [&] { v["crb"] = std::sqrt(quantized_crb(u.model, u.theta, u.noise)) * scale; });

    McOptions mc;
    mc.trials = s.trials;
    mc.seed = s.seed;
    mc.threads = 1;
    if (wants({"mc_rmse", "mc_bias", "mc_rmse_se"}))
        guarded(errors, "mc", [&] {
            mc.quantized = true;
            const McResult r = monte_carlo(u.model, u.theta, u.noise, s.search, mc);
            v["mc_rmse"] = r.rmse * scale;
            v["mc_bias"] = r.mean_bias * scale;
            v["mc_rmse_se"] = r.rmse_se * scale;
        });
    if (wants({"mc_rmse_fine", "mc_bias_fine"}))
        guarded(errors, "mc_fine", [&] {
            mc.quantized = false;
            const McResult r = monte_carlo(u.model, u.theta, u.noise, s.search, mc);
            v["mc_rmse_fine"] = r.rmse * scale;
            v["mc_bias_fine"] = r.mean_bias * scale;
        });

    std::vector<std::string> row = key_cells(s, p);
    for (const auto &m : metrics)
    {
        auto it = v.find(m.metric);
        row.push_back(format_number(it == v.end() ? nan_value : it->second));
    }
    row.push_back(join_status(errors));
    return row;
}

std::vector<double> surface_grid(const SteeringModel &model, int points)
{
    std::vector<double> grid(points);
    for (int k = 0; k < points; ++k)
    {
        if (model.family() == Family::Ula)
            grid[k] = std::asin(-1.0 + (2.0 * k + 1.0) / points);
        else
            grid[k] = model.upper() * k / points;
    }
    return grid;
}

std::vector<std::vector<std::string>> evaluate_surface(const Scenario &s, const Point &p, bool modified)
{
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> errors;
    std::optional<Setup> setup;
    if (!guarded(errors, "setup", [&] { setup.emplace(make_setup(s, p)); }))
    {
        std::vector<std::string> row = key_cells(s, p);
        row.insert(row.end(), {format_number(nan_value), format_number(nan_value), format_number(nan_value),
                               join_status(errors)});
        rows.push_back(std::move(row));
        return rows;
    }
    const Setup &u = *setup;
    const std::vector<double> grid = surface_grid(u.model, s.surface_points);
    auto display = [&](double phi) {
        return u.model.family() == Family::Ula ? std::sin(phi) : phi;
    };

    for (double phi_true : grid)
    {
        std::vector<std::string> local;
        CVector values;
        const bool ok = guarded(local, modified ? "maf" : "af", [&] {
            if (modified)
            {
                Theta th = u.theta;
                th.phi = phi_true;
                values = maf(u.model, th, u.noise, grid);
            }
            else
                values = ambiguity(u.model, phi_true, grid);
        });
        for (std::size_t k = 0; k < grid.size(); ++k)
        {
            std::vector<std::string> row = key_cells(s, p);
            row.push_back(format_number(display(phi_true)));
            row.push_back(format_number(display(grid[k])));
            row.push_back(format_number(ok ? std::abs(values[k]) : nan_value));
            row.push_back(join_status(local));
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace

std::string Scenario::phi_key() const
{
    return family == Family::Ula ? "doa_deg" : "freq_hz";
}

Scenario Scenario::from_table(const ConfigTable &t)
{
    for (const auto &k : t.keys())
        if (!known_keys.count(k))
            throw ConfigError(k, "unknown key");

    Scenario s;
    s.name = t.string("name");

    const std::string family = t.string("model.family");
    if (family == "ula")
        s.family = Family::Ula;
    else if (family == "tone")
        s.family = Family::Tone;
    else
        throw ConfigError("model.family", "expected \"ula\" or \"tone\"");

    if (t.has("model.sensors"))
        s.sensors = static_cast<int>(t.integer("model.sensors"));
    if (t.has("model.observation_interval"))
        s.observation_interval = t.number("model.observation_interval");
    if (t.has("model.base_sample_rate"))
        s.base_sample_rate = t.number("model.base_sample_rate");
    s.max_frequency = t.has("model.max_frequency") ? t.number("model.max_frequency") : s.base_sample_rate;

    if (t.has("noise.kind"))
    {
        const std::string kind = t.string("noise.kind");
        if (kind != "white" && kind != "sinc")
            throw ConfigError("noise.kind", "expected \"white\" or \"sinc\"");
        s.sinc_noise = kind == "sinc";
    }
    if (t.has("noise.variance"))
        s.noise_variance = t.number("noise.variance");
    s.noise_bandwidth = t.has("noise.bandwidth") ? t.number("noise.bandwidth") : 0.5 * s.base_sample_rate;

    const std::string pk = s.phi_key();
    const std::string other = s.family == Family::Ula ? "sweep.freq_hz" : "sweep.doa_deg";
    if (t.has(other))
        throw ConfigError(other, "does not apply to this model family");
    s.phi = t.numbers("sweep." + pk);
    if (t.has("sweep.angle_beta_deg"))
        s.angle_beta_deg = t.numbers("sweep.angle_beta_deg");
    s.snr_db = t.numbers("sweep.snr_db");
    if (t.has("sweep.oversampling"))
        s.oversampling = t.numbers("sweep.oversampling");
    s.order = t.has("sweep.order") ? t.strings("sweep.order")
                                   : std::vector<std::string>{pk, "angle_beta_deg", "snr_db", "U"};

    if (t.has("snr_reference"))
    {
        const std::string ref = t.string("snr_reference");
        if (ref == "total")
            s.snr_reference = SnrReference::Total;
        else if (ref == "per_sample")
            s.snr_reference = SnrReference::PerSample;
        else
            throw ConfigError("snr_reference", "expected \"total\" or \"per_sample\"");
    }

    if (t.has("search.grid"))
        s.search.grid_size = static_cast<int>(t.integer("search.grid"));
    if (t.has("search.tolerance"))
        s.search.refine_tolerance = t.number("search.tolerance");
    if (t.has("mc.trials"))
        s.trials = static_cast<int>(t.integer("mc.trials"));
    if (t.has("mc.seed"))
    {
        const long long seed = t.integer("mc.seed");
        if (seed < 0)
            throw ConfigError("mc.seed", "must be non-negative");
        s.seed = static_cast<std::uint64_t>(seed);
    }
    if (t.has("orthant.qmc_points"))
    {
        const long long pts = t.integer("orthant.qmc_points");
        if (pts < 1)
            throw ConfigError("orthant.qmc_points", "must be positive");
        s.orthant.qmc_points = static_cast<std::size_t>(pts);
    }
    if (t.has("orthant.fast"))
        s.orthant.fast = t.boolean("orthant.fast");
    if (t.has("orthant.seed"))
        s.orthant.seed = static_cast<std::uint64_t>(t.integer("orthant.seed"));
    if (t.has("threads"))
    {
        const long long th = t.integer("threads");
        if (th < 0)
            throw ConfigError("threads", "must be non-negative");
        s.threads = static_cast<unsigned>(th);
    }

    for (const auto &item : t.strings("outputs"))
    {
        const auto colon = item.find(':');
        OutputSpec o;
        o.metric = item.substr(0, colon);
        o.column = colon == std::string::npos ? default_column(o.metric, s.family) : item.substr(colon + 1);
        s.outputs.push_back(o);
    }

    if (t.has("table.keys"))
        s.keys = t.strings("table.keys");
    else
    {
        for (const auto &dim : s.order)
        {
            const std::size_t n = dim == pk ? s.phi.size()
                                  : dim == "angle_beta_deg" ? s.angle_beta_deg.size()
                                  : dim == "snr_db"         ? s.snr_db.size()
                                                            : s.oversampling.size();
            if (n > 1)
                s.keys.push_back(dim);
        }
    }
    if (t.has("surface.points"))
        s.surface_points = static_cast<int>(t.integer("surface.points"));

    s.validate();
    return s;
}

Scenario Scenario::from_text(const std::string &text)
{
    return from_table(ConfigTable::parse(text));
}

Scenario Scenario::from_file(const std::string &path)
{
    return from_table(ConfigTable::load(path));
}

void Scenario::validate() const
{
    if (!valid_name(name))
        throw ConfigError("name", "must be non-empty and use only letters, digits, '_' or '-'");

    const std::string pk = phi_key();
    if (phi.empty())
        throw ConfigError("sweep." + pk, "needs at least one value");
    if (angle_beta_deg.empty())
        throw ConfigError("sweep.angle_beta_deg", "needs at least one value");
    if (snr_db.empty())
        throw ConfigError("sweep.snr_db", "needs at least one value");
    if (oversampling.empty())
        throw ConfigError("sweep.oversampling", "needs at least one value");
    if (!(noise_variance > 0.0))
        throw ConfigError("noise.variance", "must be positive");

    if (family == Family::Ula)
    {
        if (sensors < 1)
            throw ConfigError("model.sensors", "must be at least 1");
        for (double d : phi)
            if (!(d > -90.0 && d < 90.0))
                throw ConfigError("sweep.doa_deg", "DOA must lie strictly between -90 and 90 degrees");
        if (sinc_noise)
            throw ConfigError("noise.kind", "band-limited noise needs the tone model");
        for (double u : oversampling)
            if (u != 1.0)
                throw ConfigError("sweep.oversampling", "the ULA model is not oversampled");
    }
    else
    {
        if (!(observation_interval > 0.0))
            throw ConfigError("model.observation_interval", "must be positive");
        if (!(base_sample_rate > 0.0))
            throw ConfigError("model.base_sample_rate", "must be positive");
        if (!(max_frequency > 0.0))
            throw ConfigError("model.max_frequency", "must be positive");
        for (double f : phi)
            if (!(f >= 0.0 && f < max_frequency))
                throw ConfigError("sweep.freq_hz", "frequency must lie in [0, model.max_frequency)");
        for (double u : oversampling)
        {
            if (!(u >= 1.0))
                throw ConfigError("sweep.oversampling", "oversampling factors must be at least 1");
            try
            {
                (void)build_model(*this, u);
            }
            catch (const Error &e)
            {
                throw ConfigError("sweep.oversampling", e.what());
            }
            if (sinc_noise)
            {
                if (!(noise_bandwidth > 0.0))
                    throw ConfigError("noise.bandwidth", "must be positive");
                if (u * base_sample_rate < 2.0 * noise_bandwidth)
                    throw ConfigError("noise.bandwidth", "sample rate below twice the noise bandwidth");
            }
        }
    }

    try
    {
        search.validate();
    }
    catch (const Error &e)
    {
        throw ConfigError("search", e.what());
    }
    if (trials < 1)
        throw ConfigError("mc.trials", "must be at least 1");
    if (orthant.qmc_points < 1)
        throw ConfigError("orthant.qmc_points", "must be positive");
    if (surface_points < 2)
        throw ConfigError("surface.points", "must be at least 2");

    const std::set<std::string> dims{pk, "angle_beta_deg", "snr_db", "U"};
    if (order.size() != dims.size() || std::set<std::string>(order.begin(), order.end()) != dims)
        throw ConfigError("sweep.order", "must list each of " + pk + ", angle_beta_deg, snr_db, U exactly once");
    std::set<std::string> seen_keys;
    for (const auto &k : keys)
        if (!dims.count(k) || !seen_keys.insert(k).second)
            throw ConfigError("table.keys", "'" + k + "' is not a sweep dimension or is repeated");

    if (outputs.empty())
        throw ConfigError("outputs", "at least one output is required");
    std::set<std::string> seen_metrics, seen_columns(keys.begin(), keys.end());
    for (const auto &o : outputs)
    {
        if (!point_metrics.count(o.metric) && !surface_metrics.count(o.metric) && o.metric != "complexity")
            throw ConfigError("outputs", "unknown output '" + o.metric + "'");
        if (!seen_metrics.insert(o.metric).second)
            throw ConfigError("outputs", "output '" + o.metric + "' requested twice");
        if (o.column.empty() || o.column == "status")
            throw ConfigError("outputs", "invalid column name for '" + o.metric + "'");
        if (point_metrics.count(o.metric) && !seen_columns.insert(o.column).second)
            throw ConfigError("outputs", "duplicate column '" + o.column + "'");
    }
}

void apply_overrides(Scenario &s, const RunOverrides &o)
{
    if (o.seed)
        s.seed = *o.seed;
    if (o.trials)
        s.trials = *o.trials;
    if (o.grid)
        s.search.grid_size = *o.grid;
    if (o.qmc_points)
        s.orthant.qmc_points = *o.qmc_points;
    if (o.fast_orthant)
        s.orthant.fast = true;
    if (o.threads)
        s.threads = *o.threads;
    s.validate();
}

std::string format_number(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    if (x == 0.0)
        return "0"; // also folds -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string CsvTable::str() const
{
    std::string out;
    auto line = [&](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
        {
            if (i)
                out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    line(header);
    for (const auto &r : rows)
        line(r);
    return out;
}

std::vector<CsvTable> run_scenario(const Scenario &s)
{
    s.validate();
    const std::vector<Point> points = enumerate_points(s);

    std::vector<OutputSpec> point_outputs;
    std::vector<OutputSpec> surfaces;
    bool want_complexity = false;
    for (const auto &o : s.outputs)
    {
        if (point_metrics.count(o.metric))
            point_outputs.push_back(o);
        else if (surface_metrics.count(o.metric))
            surfaces.push_back(o);
        else
            want_complexity = true;
    }

    std::vector<CsvTable> tables;
    if (!point_outputs.empty())
    {
        CsvTable t;
        t.file = s.name + ".csv";
        t.header = s.keys;
        for (const auto &o : point_outputs)
            t.header.push_back(o.column);
        t.header.push_back("status");
        t.rows.resize(points.size());
        parallel_for(points.size(), s.threads,
                     [&](std::size_t i) { t.rows[i] = evaluate_point(s, points[i], point_outputs); });
        tables.push_back(std::move(t));
    }

    for (const auto &o : surfaces)
    {
        const bool modified = o.metric == "maf";
        CsvTable t;
        t.file = s.name + "_" + o.metric + ".csv";
        t.header = s.keys;
        if (s.family == Family::Ula)
            t.header.insert(t.header.end(), {"u_true", "u_prime"});
        else
            t.header.insert(t.header.end(), {"f_true_hz", "f_prime_hz"});
        t.header.push_back(o.column);
        t.header.push_back("status");

        std::vector<std::vector<std::vector<std::string>>> blocks(points.size());
        parallel_for(points.size(), s.threads,
                     [&](std::size_t i) { blocks[i] = evaluate_surface(s, points[i], modified); });
        for (auto &b : blocks)
            for (auto &r : b)
                t.rows.push_back(std::move(r));
        tables.push_back(std::move(t));
    }

    if (want_complexity)
    {
        tables.push_back(complexity_table({build_model(s, 1.0).size()}, s.search.grid_size, s.oversampling,
                                          s.name + "_complexity.csv"));
    }
    return tables;
}

CsvTable complexity_table(const std::vector<int> &sizes, int grid_size, const std::vector<double> &oversampling,
                          const std::string &file)
{
    // lookup tables above this many (sample, candidate) entries are not built for measurement
    constexpr long long measure_limit = 1LL << 20;

    CsvTable t;
    t.file = file;
    t.header = {"N",          "K",          "U",         "cost_quantized",     "cost_fine",
                "offline_quantized", "ratio", "measured_quantized", "measured_fine", "status"};
    for (int n : sizes)
        for (double u : oversampling)
        {
            std::vector<std::string> row{format_number(n), format_number(grid_size), format_number(u)};
            std::string status = "ok";
            try
            {
                const double nu = u * n;
                if (nu != std::floor(nu))
                    throw InvalidInput("U N must be an integer");
                const int n_over = static_cast<int>(nu);
                const OpCount cz = cost_quantized(n_over, grid_size);
                const OpCount cx = cost_fine(n, grid_size);
                row.push_back(format_number(static_cast<double>(cz.real_ops)));
                row.push_back(format_number(static_cast<double>(cx.real_ops)));
                row.push_back(format_number(static_cast<double>(cz.offline_ops)));
                row.push_back(format_number(oversampled_ratio(n, grid_size, u)));
                if (static_cast<long long>(n_over) * grid_size <= measure_limit)
                {
                    const SteeringModel mz = SteeringModel::ula(n_over);
                    const SteeringModel mx = SteeringModel::ula(n);
                    const OpCount qz = measure_cost_quantized(mz, one_bit_quantize(mz.steering(0.3)), grid_size);
                    const OpCount qx = measure_cost_fine(mx, mx.steering(0.3), grid_size);
                    row.push_back(format_number(static_cast<double>(qz.real_ops)));
                    row.push_back(format_number(static_cast<double>(qx.real_ops)));
                }
                else
                {
                    row.push_back(format_number(nan_value));
                    row.push_back(format_number(nan_value));
                    status = "not measured (table too large)";
                }
            }
            catch (const Error &e)
            {
                while (row.size() < 9)
                    row.push_back(format_number(nan_value));
                status = sanitize(e.what());
            }
            row.push_back(status);
            t.rows.push_back(std::move(row));
        }
    return t;
}

std::vector<std::filesystem::path> write_tables(const std::vector<CsvTable> &tables, const std::filesystem::path &out_dir)
{
    std::filesystem::create_directories(out_dir);
    std::vector<std::filesystem::path> paths;
    for (const auto &t : tables)
    {
        const auto path = out_dir / t.file;
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw InvalidInput("cannot write " + path.string());
        f << t.str();
        paths.push_back(path);
    }
    return paths;
}

Scenario preset(const std::string &name)
{
    return Scenario::from_text(preset_text(name));
}

} // namespace onebit
