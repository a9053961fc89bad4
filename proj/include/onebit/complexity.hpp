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

#include "onebit/estimators.hpp"
#include "onebit/model.hpp"

namespace onebit
{

/// Real-operation tally (multiplies, adds, subtracts) of one correlator grid scan.
struct OpCount
{
    long long real_ops = 0;
    int N = 0;
    long long K = 0;
    /// Lookup-table construction, done once per grid and not part of the per-estimate cost.
    long long offline_ops = 0;
};

/// (2N + 1) K online, 4 N K offline.
OpCount cost_quantized(int N, long long K);

/// (8N + 1) K.
OpCount cost_fine(int N, long long K);

/// Quantized over fine cost at equal sample counts, (2N + 1) / (8N + 1).
double complexity_ratio(int N);

/// Quantized cost at U N samples over fine cost at N samples, (2 U N + 1) / (8 N + 1).
double oversampled_ratio(int N, long long K, double U);

/// Counts the operations actually executed by the estimator's grid scan (refinement excluded).
OpCount measure_cost_fine(const SteeringModel &model, const CVector &x, int K);
OpCount measure_cost_quantized(const SteeringModel &model, const CVector &z, int K);

} // namespace onebit
