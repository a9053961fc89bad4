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

#include "onebit/quantize.hpp"

#include "onebit/errors.hpp"
#include "onebit/special.hpp"

#include <cmath>
#include <numbers>

namespace onebit
{

CVector one_bit_quantize(const CVector &x)
{
    CVector z(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i)
    {
        const double re = x[i].real();
        const double im = x[i].imag();
        if (!std::isfinite(re) || !std::isfinite(im))
            throw InvalidInput("cannot quantize a non-finite sample");
        z[i] = Complex(re >= 0.0 ? 1.0 : -1.0, im >= 0.0 ? 1.0 : -1.0);
    }
    return z;
}

int outcome_index(Complex z)
{
    return 2 * (z.real() >= 0.0 ? 1 : 0) + (z.imag() >= 0.0 ? 1 : 0);
}

Complex outcome_value(int k)
{
    return {(k & 2) ? 1.0 : -1.0, (k & 1) ? 1.0 : -1.0};
}

CVector q_vector(const SteeringModel &model, const Theta &theta, const NoiseModel &noise)
{
    const CVector s = model.signal(theta);
    const Eigen::VectorXd var = noise.sample_variances(model.size());
    CVector q(s.size());
    for (Eigen::Index n = 0; n < s.size(); ++n)
    {
        if (!(var[n] > 0.0))
            throw DegenerateNoise("per-sample noise variance must be positive");
        q[n] = -s[n] / std::sqrt(0.5 * var[n]);
    }
    return q;
}

std::array<double, 2> sample_pmf(double q)
{
    return {q_function(-q), q_function(q)};
}

double part_mean(double q)
{
    return -std::erf(q / std::numbers::sqrt2);
}

double part_variance(double q)
{
    return 4.0 * q_function(q) * q_function(-q);
}

CVector mean_vector(const SteeringModel &model, const Theta &theta, const NoiseModel &noise)
{
    const CVector q = q_vector(model, theta, noise);
    CVector mu(q.size());
    for (Eigen::Index n = 0; n < q.size(); ++n)
        mu[n] = Complex(part_mean(q[n].real()), part_mean(q[n].imag()));
    return mu;
}

std::pair<double, Complex> single_sample_second_moments(Complex mu_n)
{
    return {2.0, Complex(0.0, 2.0 * mu_n.real() * mu_n.imag())};
}

} // namespace onebit
