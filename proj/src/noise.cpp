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

#include "onebit/noise.hpp"

#include "onebit/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace onebit
{

double sinc(double x)
{
    if (x == 0.0)
        return 1.0;
    if (x == std::round(x))
        return 0.0;
    const double px = std::numbers::pi * x;
    return std::sin(px) / px;
}

NoiseModel::NoiseModel(NoiseKind kind, double variance, double bandwidth, double sample_rate)
    : kind_(kind), variance_(variance), bandwidth_(bandwidth), sample_rate_(sample_rate)
{
}

NoiseModel NoiseModel::white(double variance)
{
    if (!(variance > 0.0) || !std::isfinite(variance))
        throw DegenerateNoise("noise variance must be positive and finite");
    return {NoiseKind::White, variance, 0.0, 0.0};
}

NoiseModel NoiseModel::sinc(double variance, double bandwidth, double sample_rate)
{
    if (!(variance > 0.0) || !std::isfinite(variance))
        throw DegenerateNoise("noise variance must be positive and finite");
    if (!(bandwidth > 0.0) || !(sample_rate > 0.0))
        throw ParameterOutOfRange("bandwidth and sample rate must be positive");
    if (sample_rate < 2.0 * bandwidth)
    {
        std::ostringstream msg;
        msg << "sample rate " << sample_rate << " Hz is below twice the bandwidth " << bandwidth << " Hz";
        throw UndersamplingError(msg.str());
    }
    return {NoiseKind::Sinc, variance, bandwidth, sample_rate};
}

double NoiseModel::oversampling() const
{
    return kind_ == NoiseKind::White ? 1.0 : sample_rate_ / (2.0 * bandwidth_);
}

bool NoiseModel::is_white() const
{
    return kind_ == NoiseKind::White || sample_rate_ == 2.0 * bandwidth_;
}

Eigen::MatrixXd NoiseModel::covariance(int n_samples) const
{
    if (n_samples < 1)
        throw ParameterOutOfRange("covariance needs at least one sample");

    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n_samples, n_samples);
    if (kind_ == NoiseKind::White)
    {
        r.diagonal().setConstant(variance_);
        return r;
    }
    const double step = 2.0 * bandwidth_ / sample_rate_;
    for (int lag = 0; lag < n_samples; ++lag)
    {
        const double value = variance_ * onebit::sinc(step * lag);
        for (int i = 0; i + lag < n_samples; ++i)
        {
            r(i, i + lag) = value;
            r(i + lag, i) = value;
        }
    }
    return r;
}

Eigen::VectorXd NoiseModel::sample_variances(int n_samples) const
{
    return Eigen::VectorXd::Constant(n_samples, variance_);
}

std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

NoiseSampler::NoiseSampler(const NoiseModel &noise, int n_samples)
{
    if (n_samples < 1)
        throw ParameterOutOfRange("sampler needs at least one sample");

    diagonal_ = noise.is_white();
    if (diagonal_)
    {
        factor_ = Eigen::MatrixXd::Identity(n_samples, n_samples) * std::sqrt(0.5 * noise.variance());
        return;
    }

    const Eigen::MatrixXd r = noise.covariance(n_samples);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(r);
    if (eig.info() != Eigen::Success)
        throw NumericalError("eigendecomposition of the noise covariance failed");

    const double floor = 1e-10 * noise.variance();
    Eigen::VectorXd root = eig.eigenvalues().cwiseMax(floor).array().sqrt() * std::sqrt(0.5);
    factor_ = eig.eigenvectors() * root.asDiagonal() * eig.eigenvectors().transpose();
    if (!factor_.allFinite())
        throw NumericalError("noise covariance factor is not finite");
}

CVector NoiseSampler::sample(std::mt19937_64 &rng) const
{
    const int n = size();
    std::normal_distribution<double> gauss;
    Eigen::VectorXd gr(n), gi(n);
    for (int i = 0; i < n; ++i)
    {
        gr[i] = gauss(rng);
        gi[i] = gauss(rng);
    }
    CVector v(n);
    if (diagonal_)
    {
        const double s = factor_(0, 0);
        for (int i = 0; i < n; ++i)
            v[i] = Complex(s * gr[i], s * gi[i]);
        return v;
    }
    const Eigen::VectorXd vr = factor_ * gr;
    const Eigen::VectorXd vi = factor_ * gi;
    for (int i = 0; i < n; ++i)
        v[i] = Complex(vr[i], vi[i]);
    return v;
}

CVector sample_noise(const NoiseModel &noise, int n_samples, std::mt19937_64 &rng)
{
    return NoiseSampler(noise, n_samples).sample(rng);
}

} // namespace onebit
