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

#include "onebit/complexity.hpp"

#include "onebit/errors.hpp"

namespace onebit
{

namespace
{

void check_sizes(int N, long long K)
{
    if (N < 1 || K < 1)
        throw ParameterOutOfRange("operation counts need N >= 1 and K >= 1");
}

} // namespace

OpCount cost_quantized(int N, long long K)
{
    check_sizes(N, K);
    return {(2LL * N + 1) * K, N, K, 4LL * N * K};
}

OpCount cost_fine(int N, long long K)
{
    check_sizes(N, K);
    return {(8LL * N + 1) * K, N, K, 0};
}

double complexity_ratio(int N)
{
    check_sizes(N, 1);
    return (2.0 * N + 1.0) / (8.0 * N + 1.0);
}

double oversampled_ratio(int N, long long K, double U)
{
    check_sizes(N, K);
    if (!(U >= 1.0))
        throw ParameterOutOfRange("oversampling factor must be at least 1");
    return (2.0 * U * N + 1.0) / (8.0 * N + 1.0);
}

OpCount measure_cost_fine(const SteeringModel &model, const CVector &x, int K)
{
    const GridCorrelator corr(model, K);
    std::vector<double> power;
    CountingOps ops;
    corr.scan_fine(x, power, ops);
    return {ops.count, model.size(), K, 0};
}

OpCount measure_cost_quantized(const SteeringModel &model, const CVector &z, int K)
{
    const GridCorrelator corr(model, K);
    std::vector<double> power;
    CountingOps ops;
    corr.scan_quantized(z, power, ops);
    return {ops.count, model.size(), K, corr.table_ops()};
}

} // namespace onebit
