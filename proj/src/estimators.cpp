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

#include "onebit/estimators.hpp"

#include "onebit/errors.hpp"
#include "onebit/parallel.hpp"
#include "onebit/quantize.hpp"

#include <cmath>

namespace onebit
{

GridCorrelator::GridCorrelator(const SteeringModel &model, int grid_size)
    : n_(model.size()), grid_(phi_grid(model, grid_size))
{
    const std::size_t k_count = grid_.size();
    h_re_.resize(k_count * n_);
    h_im_.resize(k_count * n_);
    lut_re_.resize(4 * k_count * n_);
    lut_im_.resize(4 * k_count * n_);

    CountingOps ops;
    for (std::size_t k = 0; k < k_count; ++k)
    {
        const CVector h = model.steering(grid_[k]);
        for (int i = 0; i < n_; ++i)
        {
            const double hr = h[i].real(), hi = h[i].imag();
            h_re_[k * n_ + i] = hr;
            h_im_[k * n_ + i] = hi;

            const double f = ops.add(hr, hi);
            const double d = ops.sub(hr, hi);
            const double nf = ops.sub(0.0, f);
            const double nd = ops.sub(0.0, d);
            const std::size_t base = 4 * (k * n_ + i);
            lut_re_[base + 0] = nf, lut_im_[base + 0] = nd;
            lut_re_[base + 1] = nd, lut_im_[base + 1] = f;
            lut_re_[base + 2] = d, lut_im_[base + 2] = nf;
            lut_re_[base + 3] = f, lut_im_[base + 3] = d;
        }
    }
    table_ops_ = ops.count;
}

std::vector<std::uint8_t> GridCorrelator::outcomes(const CVector &z) const
{
    if (z.size() != n_)
        throw InvalidInput("data length does not match the model");
    std::vector<std::uint8_t> out(n_);
    for (int i = 0; i < n_; ++i)
    {
        const double re = z[i].real(), im = z[i].imag();
        if (std::abs(re) != 1.0 || std::abs(im) != 1.0)
            throw InvalidInput("one-bit data entries must be +-1 +- j");
        out[i] = static_cast<std::uint8_t>(outcome_index(z[i]));
    }
    return out;
}

MlEstimator::MlEstimator(const SteeringModel &model, const SearchConfig &search)
    : model_(model), search_(search), correlator_((search.validate(), model), search.grid_size)
{
}

double MlEstimator::refine(const CVector &data, const std::vector<double> &power) const
{
    const std::size_t best = grid_argmax(power);
    auto objective = [&](double p) { return std::norm(model_.steering(p).dot(data)); };
    auto slope = [&](double p) { return correlation_slope(model_, data, p); };
    return refine_peak(model_, correlator_.grid(), best, power[best], objective, search_.refine_tolerance, slope);
}

double MlEstimator::estimate(const CVector &data) const
{
    if (data.size() != model_.size())
        throw InvalidInput("data length does not match the model");
    if (!data.allFinite())
        throw InvalidInput("data contains non-finite entries");
    if (data.cwiseAbs().maxCoeff() == 0.0)
        throw DegenerateData("all-zero data has no correlation peak");
    std::vector<double> power;
    PlainOps ops;
    correlator_.scan_fine(data, power, ops);
    return refine(data, power);
}

double MlEstimator::estimate_quantized(const CVector &z) const
{
    std::vector<double> power;
    PlainOps ops;
    correlator_.scan_quantized(z, power, ops);
    return refine(z, power);
}

double ml_estimate(const SteeringModel &model, const CVector &data, const SearchConfig &search)
{
    return MlEstimator(model, search).estimate(data);
}

McResult summarize_errors(const std::vector<double> &errors, double truth)
{
    const std::size_t n = errors.size();
    if (n == 0)
        throw InvalidInput("no trials to summarize");
    std::vector<double> sq(n);
    for (std::size_t t = 0; t < n; ++t)
        sq[t] = errors[t] * errors[t];

    McResult r;
    r.trials = static_cast<int>(n);
    r.mean_bias = pairwise_sum(errors.begin(), errors.end()) / n;
    const double mse = pairwise_sum(sq.begin(), sq.end()) / n;
    r.rmse = std::sqrt(mse);
    r.mean_estimate = truth + r.mean_bias;

    if (n > 1)
    {
        std::vector<double> dev(n), dev_sq(n);
        for (std::size_t t = 0; t < n; ++t)
        {
            dev[t] = (errors[t] - r.mean_bias) * (errors[t] - r.mean_bias);
            dev_sq[t] = (sq[t] - mse) * (sq[t] - mse);
        }
        const double var_e = pairwise_sum(dev.begin(), dev.end()) / (n - 1);
        const double var_sq = pairwise_sum(dev_sq.begin(), dev_sq.end()) / (n - 1);
        r.bias_se = std::sqrt(var_e / n);
        // delta method for sqrt(MSE)
        r.rmse_se = r.rmse > 0.0 ? std::sqrt(var_sq / n) / (2.0 * r.rmse) : 0.0;
    }
    return r;
}

McResult monte_carlo(const SteeringModel &model, const Theta &theta, const NoiseModel &noise,
                     const SearchConfig &search, const McOptions &options)
{
    if (options.trials < 1)
        throw ParameterOutOfRange("Monte Carlo needs at least one trial");

    const MlEstimator estimator(model, search);
    const NoiseSampler sampler(noise, model.size());
    const CVector s = model.signal(theta);

    std::vector<double> errors(options.trials);
    parallel_for(errors.size(), options.threads, [&](std::size_t t) {
        std::mt19937_64 rng = trial_stream(options.seed, t);
        const CVector x = s + sampler.sample(rng);
        const double est = options.quantized ? estimator.estimate_quantized(one_bit_quantize(x)) : estimator.estimate(x);
        errors[t] = est - theta.phi;
    });
    return summarize_errors(errors, theta.phi);
}

} // namespace onebit
