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

#pragma once

#include "onebit/config.hpp"
#include "onebit/model.hpp"
#include "onebit/orthant.hpp"
#include "onebit/search.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace onebit
{

enum class SnrReference
{
    /// SNR = |beta|^2 / sigma^2
    Total,
    /// SNR = |beta a_n|^2 / sigma^2 = |beta|^2 / (N sigma^2)
    PerSample
};

/// Requested output: metric name and the CSV column it is written to.
struct OutputSpec
{
    std::string metric;
    std::string column;
};

/// One experiment: a model family, a Cartesian sweep over (phi, angle of beta, SNR, U), and outputs.
/// phi is given in degrees (ULA) or Hz (tone) here and converted at the boundary.
struct Scenario
{
    std::string name;

    Family family = Family::Ula;
    int sensors = 16;
    double observation_interval = 4e-3;
    double base_sample_rate = 2500.0;
    double max_frequency = 2500.0;

    bool sinc_noise = false;
    double noise_variance = 1.0;
    double noise_bandwidth = 1250.0;

    std::vector<double> phi;
    std::vector<double> angle_beta_deg{0.0};
    std::vector<double> snr_db;
    std::vector<double> oversampling{1.0};
    /// Sweep dimensions from outermost to innermost loop.
    std::vector<std::string> order;
    SnrReference snr_reference = SnrReference::Total;

    SearchConfig search;
    int trials = 1000;
    std::uint64_t seed = 1;
    OrthantOptions orthant;
    unsigned threads = 1;

    std::vector<OutputSpec> outputs;
    /// Sweep columns written before the metrics.
    std::vector<std::string> keys;
    int surface_points = 201;

    /// Column name of the sweep variable: doa_deg or freq_hz.
    std::string phi_key() const;

    static Scenario from_table(const ConfigTable &table);
    static Scenario from_text(const std::string &text);
    static Scenario from_file(const std::string &path);

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

/// Command-line adjustments applied on top of a scenario.
struct RunOverrides
{
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<int> grid;
    std::optional<std::size_t> qmc_points;
    bool fast_orthant = false;
    std::optional<unsigned> threads;
};

void apply_overrides(Scenario &scenario, const RunOverrides &overrides);

struct CsvTable
{
    std::string file;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string str() const;
};

/// Fixed 12-significant-digit rendering used for every CSV number.
std::string format_number(double x);

/// Evaluates every sweep point (concurrently when threads > 1) and returns the tables in a fixed order.
std::vector<CsvTable> run_scenario(const Scenario &scenario);

/// Writes each table to out_dir / table.file and returns the paths.
std::vector<std::filesystem::path> write_tables(const std::vector<CsvTable> &tables, const std::filesystem::path &out_dir);

/// Operation-count table for the given sample counts, grid size and oversampling factors.
CsvTable complexity_table(const std::vector<int> &sizes, int grid_size, const std::vector<double> &oversampling,
                          const std::string &file = "complexity.csv");

std::vector<std::string> preset_names();
/// Configuration text of a built-in scenario (identical to scenarios/<name>.toml).
std::string preset_text(const std::string &name);
Scenario preset(const std::string &name);

} // namespace onebit
