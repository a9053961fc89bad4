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

#include "onebit/special.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/erf.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace onebit
{

namespace
{

constexpr double inv_sqrt2 = 0.70710678118654752440;

// Gauss-Legendre nodes on [-1, 1]; Boost stores the non-negative half.
template <unsigned Points> struct LegendreRule
{
    using rule = boost::math::quadrature::gauss<double, Points>;
    static constexpr unsigned half = Points / 2;
};

template <unsigned Points, class F> double legendre_sum(F &&f)
{
    using rule = boost::math::quadrature::gauss<double, Points>;
    const auto &x = rule::abscissa();
    const auto &w = rule::weights();
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        // Even point counts have no zero node; each stored node stands for +x and -x.
        sum += w[i] * (f(x[i]) + f(-x[i]));
    }
    return sum;
}

} // namespace

double q_function(double x)
{
    return 0.5 * std::erfc(x * inv_sqrt2);
}

double normal_cdf(double x)
{
    return 0.5 * std::erfc(-x * inv_sqrt2);
}

double log_q_function(double x)
{
    if (x < 30.0)
        return std::log(q_function(x));

    // Q(x) = phi(x)/x * (1 - 1/x^2 + 3/x^4 - 15/x^6 + ...)
    const double x2 = x * x;
    const double series = 1.0 - 1.0 / x2 + 3.0 / (x2 * x2) - 15.0 / (x2 * x2 * x2);
    return -0.5 * x2 - std::log(x) - 0.5 * std::log(2.0 * std::numbers::pi) + std::log(series);
}

double normal_quantile(double p)
{
    // erfc_inv is accurate in both tails, so the lower tail never goes through 1 - p.
    return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

double bivariate_normal_upper(double h, double k, double r)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    constexpr double inf = std::numeric_limits<double>::infinity();

    if (h == inf || k == inf)
        return 0.0;
    if (h == -inf)
        return q_function(k);
    if (k == -inf)
        return q_function(h);

    r = std::clamp(r, -1.0, 1.0);
    const double abs_r = std::abs(r);
    double hk = h * k;
    double bvn = 0.0;

    auto sum_rule = [&](auto &&f) {
        if (abs_r < 0.3)
            return legendre_sum<6>(f);
        if (abs_r < 0.75)
            return legendre_sum<12>(f);
        return legendre_sum<20>(f);
    };

    if (abs_r < 0.925)
    {
        const double hs = 0.5 * (h * h + k * k);
        const double asr = std::asin(r);
        // Integrand of Plackett's identity in the angle variable, mapped onto [-1, 1].
        bvn = sum_rule([&](double x) {
            const double sn = std::sin(asr * (x + 1.0) * 0.5);
            return std::exp((sn * hk - hs) / (1.0 - sn * sn));
        });
        // Each stored node was used for both signs, i.e. a full [-1, 1] rule: factor asr/(4 pi).
        return bvn * asr / (2.0 * two_pi) + q_function(h) * q_function(k);
    }

    if (r < 0.0)
    {
        k = -k;
        hk = -hk;
    }
    if (abs_r < 1.0)
    {
        const double as = (1.0 - r) * (1.0 + r);
        double a = std::sqrt(as);
        const double bs = (h - k) * (h - k);
        const double c = (4.0 - hk) / 8.0;
        const double d = (12.0 - hk) / 16.0;
        bvn = a * std::exp(-(bs / as + hk) / 2.0) *
              (1.0 - c * (bs - as) * (1.0 - d * bs / 5.0) / 3.0 + c * d * as * as / 5.0);
        if (hk > -160.0)
        {
            const double b = std::sqrt(bs);
            bvn -= std::exp(-hk / 2.0) * std::sqrt(two_pi) * normal_cdf(-b / a) * b *
                   (1.0 - c * bs * (1.0 - d * bs / 5.0) / 3.0);
        }
        a /= 2.0;
        // Substitution x -> a(x + 1) over [-1, 1].
        bvn += sum_rule([&](double x) {
            const double xs = std::pow(a * (x + 1.0), 2);
            const double rs = std::sqrt(1.0 - xs);
            if (xs <= 0.0)
                return 0.0;
            return a * (std::exp(-bs / (2.0 * xs) - hk / (1.0 + rs)) / rs -
                        std::exp(-(bs / xs + hk) / 2.0) * (1.0 + c * xs * (1.0 + d * xs)));
        });
        bvn = -bvn / two_pi;
    }
    if (r > 0.0)
    {
        bvn += q_function(std::max(h, k));
    }
    else
    {
        bvn = -bvn;
        if (k > h)
        {
            // k was negated above; this is Phi(k) - Phi(h) in the transformed variables.
            bvn += (h < 0.0 ? normal_cdf(k) - normal_cdf(h) : q_function(h) - q_function(k));
        }
    }
    return std::clamp(bvn, 0.0, 1.0);
}

} // namespace onebit
