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

#include "onebit/model.hpp"

#include "onebit/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace onebit
{

SteeringModel::SteeringModel(Family family, std::vector<double> positions, std::vector<double> weights,
                             double lower, double upper)
    : family_(family), positions_(std::move(positions)), weights_(std::move(weights)), lower_(lower), upper_(upper)
{
}

SteeringModel SteeringModel::ula(int sensors)
{
    if (sensors < 1)
        throw ParameterOutOfRange("ULA needs at least one sensor");

    std::vector<double> pos(sensors), w(sensors);
    const double centre = 0.5 * (sensors + 1);
    for (int n = 1; n <= sensors; ++n)
    {
        pos[n - 1] = n - centre;
        w[n - 1] = std::numbers::pi * pos[n - 1];
    }
    return {Family::Ula, std::move(pos), std::move(w), -0.5 * std::numbers::pi, 0.5 * std::numbers::pi};
}

SteeringModel SteeringModel::tone(double interval, double sample_rate, double max_frequency)
{
    if (!(interval > 0.0) || !(sample_rate > 0.0) || !(max_frequency > 0.0))
        throw ParameterOutOfRange("tone model needs positive interval, sample rate and bandwidth");

    const double steps = interval * sample_rate;
    const double rounded = std::round(steps);
    if (std::abs(steps - rounded) > 1e-9 * std::max(1.0, steps) || rounded < 1.0)
    {
        std::ostringstream msg;
        msg << "observation interval times sample rate must be a positive integer, got " << steps;
        throw ParameterOutOfRange(msg.str());
    }

    const int n_samples = static_cast<int>(rounded) + 1;
    std::vector<double> t(n_samples), w(n_samples);
    const double half = 0.5 * static_cast<double>(n_samples - 1);
    for (int n = 0; n < n_samples; ++n)
    {
        // (n - half) / f_s rather than -T/2 + n T_s keeps the grid exactly antisymmetric.
        t[n] = (n - half) / sample_rate;
        w[n] = 2.0 * std::numbers::pi * t[n];
    }
    return {Family::Tone, std::move(t), std::move(w), 0.0, max_frequency};
}

bool SteeringModel::contains(double phi) const
{
    if (!std::isfinite(phi))
        return false;
    if (family_ == Family::Ula)
        return phi > lower_ && phi < upper_;
    return phi >= lower_ && phi < upper_;
}

void SteeringModel::check(double phi) const
{
    if (!contains(phi))
    {
        std::ostringstream msg;
        msg << "phi = " << phi << " outside the model domain [" << lower_ << ", " << upper_ << ")";
        throw ParameterOutOfRange(msg.str());
    }
}

CVector SteeringModel::steering(double phi) const
{
    check(phi);
    const int n = size();
    const double f = family_ == Family::Ula ? std::sin(phi) : phi;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    CVector a(n);
    for (int i = 0; i < n; ++i)
        a[i] = std::polar(scale, weights_[i] * f);
    return a;
}

CVector SteeringModel::steering_d1(double phi) const
{
    CVector a = steering(phi);
    const double df = family_ == Family::Ula ? std::cos(phi) : 1.0;
    for (int i = 0; i < size(); ++i)
        a[i] *= Complex(0.0, weights_[i] * df);
    return a;
}

CVector SteeringModel::steering_d2(double phi) const
{
    CVector a = steering(phi);
    double df = 1.0, d2f = 0.0;
    if (family_ == Family::Ula)
    {
        df = std::cos(phi);
        d2f = -std::sin(phi);
    }
    // a'' = (j g'' - g'^2) a with g = w f(phi)
    for (int i = 0; i < size(); ++i)
    {
        const double g1 = weights_[i] * df;
        const double g2 = weights_[i] * d2f;
        a[i] *= Complex(-g1 * g1, g2);
    }
    return a;
}

CVector SteeringModel::signal(const Theta &theta) const
{
    return theta.beta * steering(theta.phi);
}

} // namespace onebit
