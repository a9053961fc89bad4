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
#include "onebit/qmc.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <cstdint>

namespace onebit
{

/// Joint Gaussian law of (x_{i,R}, x_{i,I}, x_{l,R}, x_{l,I}) for a pair of unquantized samples.
struct PairwiseGaussian
{
    Eigen::Vector4d mean;
    Eigen::Matrix4d cov;
};

/// Builds the pair law for circular noise: var/2 on the diagonal, rho/2 between equal parts of
/// the two samples, zero between real and imaginary parts. Complex rho is rejected.
PairwiseGaussian pair_gaussian(Complex s_i, Complex s_l, double var_i, double var_l, Complex rho);

/// P^{(k_i, k_l)} stored at index 4 k_i + k_l, with k = 2 [Re >= 0] + [Im >= 0] (see outcome_index).
using PairProbs = std::array<double, 16>;

struct OrthantOptions
{
    std::size_t qmc_points = std::size_t{1} << 16;
    std::uint64_t seed = 20260101;
    /// Use the exact bivariate factorization instead of 4-D quasi Monte Carlo.
    bool fast = false;
    unsigned threads = 1;
};

struct OrthantEstimate
{
    PairProbs probs{};
    /// Sum of the 16 estimates before renormalization.
    double raw_sum = 0.0;
};

/// Sixteen orthant probabilities by separation of variables over a digitally shifted Sobol set.
/// `stream` selects the shift; results are renormalized to sum to one.
OrthantEstimate pair_orthant_probs(const PairwiseGaussian &pg, const SobolPoints &points, std::uint64_t seed,
                                   std::uint64_t stream = 0);
OrthantEstimate pair_orthant_probs(const PairwiseGaussian &pg, std::size_t qmc_points = std::size_t{1} << 16,
                                   std::uint64_t seed = OrthantOptions{}.seed);

/// Same probabilities from two bivariate normal quadrants; requires the real/imaginary decoupling.
PairProbs pair_orthant_probs_bivariate(const PairwiseGaussian &pg);

/// Quantized-data moments at the true parameter. cov_M = M - mu mu^H and cov_P = P - mu mu^T are
/// built directly from the pair tables so that small covariances are not lost to cancellation.
struct MomentSet
{
    Theta theta;
    CVector mu;
    CMatrix M;
    CMatrix P;
    CMatrix cov_M;
    CMatrix cov_P;
};

MomentSet moment_matrices_colored(const SteeringModel &model, const Theta &theta, const NoiseModel &noise,
                                  const OrthantOptions &options = {});
MomentSet moment_matrices_awgn(const SteeringModel &model, const Theta &theta, const NoiseModel &noise);

/// Closed form for white noise, orthant path otherwise.
MomentSet moment_matrices(const SteeringModel &model, const Theta &theta, const NoiseModel &noise,
                          const OrthantOptions &options = {});

} // namespace onebit
