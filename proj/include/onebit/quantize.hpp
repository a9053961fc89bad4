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

#include <array>
#include <utility>

namespace onebit
{

/// Complex one-bit quantizer: sign(Re x) + j sign(Im x) with sign(0) = +1. Rejects NaN and infinity.
CVector one_bit_quantize(const CVector &x);

/// Outcome index of a quantized sample, 2 [Re >= 0] + [Im >= 0]; 0: -1-j, 1: -1+j, 2: 1-j, 3: 1+j.
int outcome_index(Complex z);
Complex outcome_value(int k);

/// Normalized negated signal q_n = -s_n / (sigma_n / sqrt(2)); real part q_{n,R}, imaginary part q_{n,I}.
CVector q_vector(const SteeringModel &model, const Theta &theta, const NoiseModel &noise);

/// {P(part = -1), P(part = +1)} = {Q(-q), Q(q)}.
std::array<double, 2> sample_pmf(double q);

/// E[z]: mu_{n,R} = 1 - 2 Q(-q_{n,R}), likewise for the imaginary part.
CVector mean_vector(const SteeringModel &model, const Theta &theta, const NoiseModel &noise);

/// Mean of one quantized part as a function of q, evaluated as -erf(q / sqrt 2).
double part_mean(double q);

/// 1 - part_mean(q)^2 = 4 Q(q) Q(-q), without cancellation.
double part_variance(double q);

/// (E|z_n|^2, E z_n^2) = (2, 2j mu_R mu_I).
std::pair<double, Complex> single_sample_second_moments(Complex mu_n);

} // namespace onebit
