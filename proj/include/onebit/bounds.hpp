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
#include "onebit/orthant.hpp"
#include "onebit/search.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace onebit
{

/// Normalized ambiguity a^H(phi') a(phi) / (|a(phi')| |a(phi)|) over a grid of phi'.
CVector ambiguity(const SteeringModel &model, double phi, const std::vector<double> &grid);

/// a^H(phi') mu(theta) over the grid, scaled so that its largest modulus on the grid is one.
CVector maf(const SteeringModel &model, const Theta &theta, const NoiseModel &noise, const std::vector<double> &grid);

/// phi_0 = argmax |a^H(phi') mu(theta)| (grid then golden section), beta_0 = a^H(phi_0) mu(theta).
Theta pseudo_true(const SteeringModel &model, const Theta &theta, const NoiseModel &noise,
                  const SearchConfig &search = {});

/// phi_0 - phi.
double bias_phi(const SteeringModel &model, const Theta &theta, const NoiseModel &noise,
                const SearchConfig &search = {});

struct McrbIntermediates
{
    double J1 = 0.0;
    Complex J2;
    double L1 = 0.0;
    Complex L2;
    Complex L3;
    double L4 = 0.0;
    double L5 = 0.0;
    double L6 = 0.0;
    /// Expected Hessian and gradient outer product of the assumed Gaussian log-likelihood at theta_0.
    Eigen::Matrix3d A;
    Eigen::Matrix3d B;
};

struct McrbResult
{
    McrbIntermediates terms;
    /// Closed-form [MCRB]_{1,1}.
    double mcrb11 = 0.0;
    /// (A^-1 B A^-1)_{1,1} with B rebuilt independently from the centred moments.
    double sandwich11 = 0.0;
    /// Rounding allowance used when the two values are compared.
    double tolerance = 0.0;
};

/// MCRB of phi. `moments` must belong to the true parameter, `theta0` to the pseudo-true one.
/// Throws NumericalError when the closed form is negative, non-finite, or disagrees with the
/// sandwich product beyond 1e-8 relative (plus rounding allowance).
McrbResult mcrb(const SteeringModel &model, const MomentSet &moments, const Theta &theta0, double assumed_variance);
McrbResult mcrb(const SteeringModel &model, const NoiseModel &noise, const MomentSet &moments, const Theta &theta0);

inline double mse_bound(double mcrb11, double bias)
{
    return mcrb11 + bias * bias;
}

/// Information function of one sign observation, exp(-q^2) / (var pi Q(q) Q(-q)).
double psi(double q, double variance);

/// [J^-1]_{1,1} for the correctly specified quantized model; white noise only.
double quantized_crb(const SteeringModel &model, const Theta &theta, const NoiseModel &noise);

struct BoundReport
{
    Theta theta0;
    double bias_phi = 0.0;
    double mcrb11 = 0.0;
    double mse_bound = 0.0;
    std::optional<double> crb;
};

BoundReport evaluate_bounds(const SteeringModel &model, const Theta &theta, const NoiseModel &noise,
                            const SearchConfig &search = {}, const OrthantOptions &orthant = {},
                            bool with_crb = false);

} // namespace onebit
