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

#include <Eigen/Dense>

#include <cstdint>
#include <random>

namespace onebit
{

/// Normalized sinc sin(pi x)/(pi x), exactly zero at nonzero integers.
double sinc(double x);

enum class NoiseKind
{
    White,
    Sinc
};

/// Circular complex Gaussian noise with real covariance R.
///
/// Sinc kind: [R]_{n,m} = var * sinc(2 B (n - m) / f_s), i.e. white noise through an ideal low-pass of
/// bandwidth B sampled at f_s >= 2B.
class NoiseModel
{
  public:
    static NoiseModel white(double variance);
    static NoiseModel sinc(double variance, double bandwidth, double sample_rate);

    NoiseKind kind() const { return kind_; }
    double variance() const { return variance_; }
    double bandwidth() const { return bandwidth_; }
    double sample_rate() const { return sample_rate_; }

    /// f_s / (2B); 1 for white noise.
    double oversampling() const;

    /// True when the covariance is exactly diagonal (white, or sinc sampled at exactly 2B).
    bool is_white() const;

    Eigen::MatrixXd covariance(int n_samples) const;

    /// Per-sample variances sigma_n^2 (the covariance diagonal).
    Eigen::VectorXd sample_variances(int n_samples) const;

  private:
    NoiseModel(NoiseKind kind, double variance, double bandwidth, double sample_rate);

    NoiseKind kind_;
    double variance_;
    double bandwidth_;
    double sample_rate_;
};

/// Independent generator for one Monte Carlo trial, a pure function of (seed, trial).
std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial);

/// Draws v = S (g_R + j g_I) with S S^T = R / 2 and g_R, g_I independent standard normal vectors.
class NoiseSampler
{
  public:
    NoiseSampler(const NoiseModel &noise, int n_samples);

    int size() const { return static_cast<int>(factor_.rows()); }

    /// Symmetric square root of R / 2 (after the eigenvalue floor).
    const Eigen::MatrixXd &factor() const { return factor_; }

    CVector sample(std::mt19937_64 &rng) const;

  private:
    Eigen::MatrixXd factor_;
    bool diagonal_;
};

/// Convenience wrapper around NoiseSampler for a single draw.
CVector sample_noise(const NoiseModel &noise, int n_samples, std::mt19937_64 &rng);

} // namespace onebit
