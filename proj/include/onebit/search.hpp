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

#include <cstddef>
#include <array>
#include <functional>
#include <vector>

namespace onebit
{

/// Coarse grid size K and the width at which golden-section refinement stops (radians or Hz).
struct SearchConfig
{
    int grid_size = 4096;
    double refine_tolerance = 1e-8;

    void validate() const;
};

/// K-point search grid: cell midpoints of (-pi/2, pi/2) for the ULA, k B / K for the tone family.
std::vector<double> phi_grid(const SteeringModel &model, int grid_size);

/// Index of the largest value; values within a relative 1e-12 of the running maximum count as ties
/// and keep the earlier (smaller phi) index.
std::size_t grid_argmax(const std::vector<double> &values);

/// First and second derivative of a peak objective.
using PeakSlope = std::function<std::array<double, 2>(double)>;

/// Golden-section maximization of `objective` between the grid neighbours of `grid[best]`.
/// With `slope`, a few guarded Newton steps on the derivative follow, since value comparisons
/// alone cannot place a smooth maximum closer than about sqrt(eps).
/// Never returns a point worse than the grid point itself.
double refine_peak(const SteeringModel &model, const std::vector<double> &grid, std::size_t best, double best_value,
                   const std::function<double(double)> &objective, double tolerance, const PeakSlope &slope = {});

/// Derivatives of |a(phi)^H v|^2 with respect to phi.
std::array<double, 2> correlation_slope(const SteeringModel &model, const CVector &v, double phi);

} // namespace onebit
