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

// onebit: scenario runner for one-bit quantized estimation bounds.
//
//   onebit list
//   onebit preset fig4 --trials 200 --out-dir out
//   onebit run my_scenario.toml --threads 4
//   onebit complexity --grid 4096

#include "onebit/errors.hpp"
#include "onebit/scenario.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace
{

struct Flags
{
    std::uint64_t seed = 0;
    int trials = 0;
    int grid = 0;
    std::size_t qmc_points = 0;
    unsigned threads = 0;
    bool fast = false;
    std::string out_dir = ".";
};

void add_run_flags(CLI::App *cmd, Flags &f)
{
    cmd->add_option("--seed", f.seed, "Monte Carlo seed");
    cmd->add_option("--trials", f.trials, "Monte Carlo trials per point")->check(CLI::PositiveNumber);
    cmd->add_option("--grid", f.grid, "search grid size K")->check(CLI::Range(2, 1 << 24));
    cmd->add_option("--qmc-points", f.qmc_points, "quasi Monte Carlo points per sample pair")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", f.threads, "worker threads (0 = all cores)");
    cmd->add_flag("--fast-orthant", f.fast, "use the exact bivariate factorization for orthant probabilities");
    cmd->add_option("--out-dir", f.out_dir, "directory for the CSV files");
}

onebit::RunOverrides overrides(const CLI::App *cmd, const Flags &f)
{
    onebit::RunOverrides o;
    if (cmd->count("--seed"))
        o.seed = f.seed;
    if (cmd->count("--trials"))
        o.trials = f.trials;
    if (cmd->count("--grid"))
        o.grid = f.grid;
    if (cmd->count("--qmc-points"))
        o.qmc_points = f.qmc_points;
    if (cmd->count("--threads"))
        o.threads = f.threads;
    o.fast_orthant = f.fast;
    return o;
}

int execute(onebit::Scenario scenario, const CLI::App *cmd, const Flags &f)
{
    onebit::apply_overrides(scenario, overrides(cmd, f));
    const auto tables = onebit::run_scenario(scenario);
    int failed_rows = 0;
    for (const auto &t : tables)
        for (const auto &r : t.rows)
            if (r.back() != "ok" && r.back().rfind("not measured", 0) != 0)
                ++failed_rows;
    for (const auto &p : onebit::write_tables(tables, f.out_dir))
        std::cout << p.string() << '\n';
    if (failed_rows)
        std::cerr << "warning: " << failed_rows << " row(s) carry an error status\n";
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Bounds and Monte Carlo experiments for estimation from one-bit quantized data"};
    app.require_subcommand(1);

    Flags flags;
    std::string config_path, preset_name;
    bool print_only = false;

    auto *run = app.add_subcommand("run", "run a scenario file");
    run->add_option("config", config_path, "scenario file (key = value)")->required()->check(CLI::ExistingFile);
    add_run_flags(run, flags);

    auto *pre = app.add_subcommand("preset", "run a built-in scenario");
    pre->add_option("name", preset_name, "preset name (see 'list')")->required();
    pre->add_flag("--print", print_only, "print the preset configuration and exit");
    add_run_flags(pre, flags);

    auto *list = app.add_subcommand("list", "list built-in scenarios");

    std::vector<int> sizes{1, 4, 16, 64, 256, 1024};
    std::vector<double> factors{1, 2, 4};
    int grid = 4096;
    std::string complexity_out;
    auto *cx = app.add_subcommand("complexity", "print the correlator operation-count table");
    cx->add_option("--sizes", sizes, "sample counts N");
    cx->add_option("--oversampling", factors, "oversampling factors U");
    cx->add_option("--grid", grid, "search grid size K")->check(CLI::Range(1, 1 << 24));
    cx->add_option("--out-dir", complexity_out, "also write complexity.csv here");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (list->parsed())
        {
            for (const auto &n : onebit::preset_names())
                std::cout << n << '\n';
            std::cout << "custom (onebit run <config>)\n";
            return 0;
        }
        if (cx->parsed())
        {
            const auto table = onebit::complexity_table(sizes, grid, factors);
            std::cout << table.str();
            if (!complexity_out.empty())
                onebit::write_tables({table}, complexity_out);
            return 0;
        }
        if (pre->parsed())
        {
            if (print_only)
            {
                std::cout << onebit::preset_text(preset_name);
                return 0;
            }
            return execute(onebit::preset(preset_name), pre, flags);
        }
        return execute(onebit::Scenario::from_file(config_path), run, flags);
    }
    catch (const onebit::ConfigError &e)
    {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    }
    catch (const onebit::Error &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
