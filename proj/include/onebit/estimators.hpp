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

#include "onebit/model.hpp"
#include "onebit/noise.hpp"
#include "onebit/search.hpp"

#include <cstdint>
#include <vector>

namespace onebit
{

/// Arithmetic policies for the correlator kernels. CountingOps tallies every real multiply, add
/// and subtract so that the scan can be audited against the closed-form operation counts.
struct PlainOps
{
    static double mul(double a, double b) { return a * b; }
    static double add(double a, double b) { return a + b; }
    static double sub(double a, double b) { return a - b; }
};

struct CountingOps
{
    long long count = 0;
    double mul(double a, double b)
    {
        ++count;
        return a * b;
    }
    double add(double a, double b)
    {
        ++count;
        return a + b;
    }
    double sub(double a, double b)
    {
        ++count;
        return a - b;
    }
};

/// |h^H x|^2 for one candidate: 6 ops per complex product, 2(N-1) accumulations, 3 for the modulus.
template <class Ops>
double correlator_power_fine(Ops &ops, const double *h_re, const double *h_im, const double *x_re,
                             const double *x_im, int n)
{
    double acc_re = 0.0, acc_im = 0.0;
    for (int i = 0; i < n; ++i)
    {
        // conj(h) x = (h_R x_R + h_I x_I) + j (h_R x_I - h_I x_R)
        const double re = ops.add(ops.mul(h_re[i], x_re[i]), ops.mul(h_im[i], x_im[i]));
        const double im = ops.sub(ops.mul(h_re[i], x_im[i]), ops.mul(h_im[i], x_re[i]));
        if (i == 0)
        {
            acc_re = re;
            acc_im = im;
        }
        else
        {
            acc_re = ops.add(acc_re, re);
            acc_im = ops.add(acc_im, im);
        }
    }
    return ops.add(ops.mul(acc_re, acc_re), ops.mul(acc_im, acc_im));
}

/// Same correlator for one-bit data: conj(h_n) z_n is read from a 4-entry table per sample, so only
/// 2(N-1) accumulations and the 3-op modulus remain.
template <class Ops>
double correlator_power_quantized(Ops &ops, const double *lut_re, const double *lut_im, const std::uint8_t *outcome,
                                  int n)
{
    double acc_re = lut_re[outcome[0]], acc_im = lut_im[outcome[0]];
    for (int i = 1; i < n; ++i)
    {
        acc_re = ops.add(acc_re, lut_re[4 * i + outcome[i]]);
        acc_im = ops.add(acc_im, lut_im[4 * i + outcome[i]]);
    }
    return ops.add(ops.mul(acc_re, acc_re), ops.mul(acc_im, acc_im));
}

/// Steering vectors on the K-point grid plus the one-bit lookup table
/// {-f - jd, -d + jf, d - jf, f + jd} (outcome order) with f = h_R + h_I, d = h_R - h_I.
class GridCorrelator
{
  public:
    GridCorrelator(const SteeringModel &model, int grid_size);

    const std::vector<double> &grid() const { return grid_; }
    int samples() const { return n_; }
    /// Real operations spent on the lookup table (4 per sample and candidate).
    long long table_ops() const { return table_ops_; }

    template <class Ops> void scan_fine(const CVector &x, std::vector<double> &power, Ops &ops) const
    {
        std::vector<double> xr(n_), xi(n_);
        for (int i = 0; i < n_; ++i)
        {
            xr[i] = x[i].real();
            xi[i] = x[i].imag();
        }
        power.resize(grid_.size());
        for (std::size_t k = 0; k < grid_.size(); ++k)
            power[k] = correlator_power_fine(ops, &h_re_[k * n_], &h_im_[k * n_], xr.data(), xi.data(), n_);
    }

    template <class Ops> void scan_quantized(const CVector &z, std::vector<double> &power, Ops &ops) const
    {
        const std::vector<std::uint8_t> outcome = outcomes(z);
        power.resize(grid_.size());
        const std::size_t stride = 4 * static_cast<std::size_t>(n_);
        for (std::size_t k = 0; k < grid_.size(); ++k)
            power[k] = correlator_power_quantized(ops, &lut_re_[k * stride], &lut_im_[k * stride], outcome.data(), n_);
    }

  private:
    std::vector<std::uint8_t> outcomes(const CVector &z) const;

    int n_;
    std::vector<double> grid_;
    std::vector<double> h_re_, h_im_;
    std::vector<double> lut_re_, lut_im_;
    long long table_ops_ = 0;
};

/// Grid-search maximizer of |a^H(phi') u|^2 with golden-section refinement.
class MlEstimator
{
  public:
    MlEstimator(const SteeringModel &model, const SearchConfig &search);

    /// Any complex data (fine-resolution samples or one-bit samples through the full-precision kernel).
    double estimate(const CVector &data) const;
    /// One-bit data through the lookup-table kernel; entries must be +-1 +- j.
    double estimate_quantized(const CVector &z) const;

    const GridCorrelator &correlator() const { return correlator_; }

  private:
    double refine(const CVector &data, const std::vector<double> &power) const;

    SteeringModel model_;
    SearchConfig search_;
    GridCorrelator correlator_;
};

double ml_estimate(const SteeringModel &model, const CVector &data, const SearchConfig &search = {});

struct McOptions
{
    int trials = 1000;
    std::uint64_t seed = 1;
    bool quantized = true;
    unsigned threads = 1;
};

struct McResult
{
    double rmse = 0.0;
    double mean_bias = 0.0;
    double mean_estimate = 0.0;
    int trials = 0;
    double rmse_se = 0.0;
    double bias_se = 0.0;
};

/// Misspecified ML (quantized) or plain ML (fine) over independent trials; per-trial streams come
/// from trial_stream(seed, t), and errors are combined by pairwise summation in trial order.
McResult monte_carlo(const SteeringModel &model, const Theta &theta, const NoiseModel &noise,
                     const SearchConfig &search, const McOptions &options);

/// Aggregates estimation errors (estimate - truth) in the order given.
McResult summarize_errors(const std::vector<double> &errors, double truth);

} // namespace onebit
