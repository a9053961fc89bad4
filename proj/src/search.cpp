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

#include "onebit/search.hpp"

#include "onebit/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace onebit
{

void SearchConfig::validate() const
{
    if (grid_size < 2)
        throw ParameterOutOfRange("search grid needs at least two points");
    if (!(refine_tolerance > 0.0))
        throw ParameterOutOfRange("refinement tolerance must be positive");
}

std::vector<double> phi_grid(const SteeringModel &model, int grid_size)
{
    if (grid_size < 2)
        throw ParameterOutOfRange("search grid needs at least two points");
    std::vector<double> grid(grid_size);
    const double width = model.upper() - model.lower();
    for (int k = 0; k < grid_size; ++k)
    {
        const double offset = model.family() == Family::Ula ? k + 0.5 : k;
        grid[k] = model.lower() + width * offset / grid_size;
    }
    return grid;
}

std::size_t grid_argmax(const std::vector<double> &values)
{
    std::size_t best = 0;
    for (std::size_t k = 1; k < values.size(); ++k)
        if (values[k] > values[best] + 1e-12 * std::abs(values[best]))
            best = k;
    return best;
}

double refine_peak(const SteeringModel &model, const std::vector<double> &grid, std::size_t best, double best_value,
                   const std::function<double(double)> &objective, double tolerance, const PeakSlope &slope)
{
    double a = best > 0 ? grid[best - 1] : std::max(model.lower(), grid[best] - (grid[1] - grid[0]));
    double b = best + 1 < grid.size() ? grid[best + 1]
                                       : std::min(model.upper(), grid[best] + (grid[1] - grid[0]));

    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    const double lo = a, hi = b;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = objective(x1);
    double f2 = objective(x2);
    while (b - a > tolerance)
    {
        if (f1 >= f2)
        {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = objective(x1);
        }
        else
        {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = objective(x2);
        }
    }

    double x = 0.5 * (a + b);
    if (!model.contains(x))
        return grid[best];
    double fx = objective(x);

    if (slope)
    {
        for (int it = 0; it < 8; ++it)
        {
            const auto [d1, d2] = slope(x);
            if (!(d2 < 0.0))
                break;
            const double next = x - d1 / d2;
            if (!(next > lo && next < hi) || !model.contains(next))
                break;
            const double fn = objective(next);
            // flat top: equal values up to rounding still accept the derivative root
            if (!(fn >= fx - 4.0 * std::numeric_limits<double>::epsilon() * std::abs(fx)))
                break;
            const double step = std::abs(next - x);
            x = next;
            fx = std::max(fx, fn);
            if (step <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x)))
                break;
        }
    }
    return fx >= best_value ? x : grid[best];
}

std::array<double, 2> correlation_slope(const SteeringModel &model, const CVector &v, double phi)
{
    const Complex c = model.steering(phi).dot(v);
    const Complex c1 = model.steering_d1(phi).dot(v);
    const Complex c2 = model.steering_d2(phi).dot(v);
    return {2.0 * (std::conj(c) * c1).real(), 2.0 * (std::norm(c1) + (std::conj(c) * c2).real())};
}

} // namespace onebit
