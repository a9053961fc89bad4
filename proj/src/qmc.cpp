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

#include "onebit/qmc.hpp"

#include <boost/random/sobol.hpp>

#include <random>

namespace onebit
{

SobolPoints::SobolPoints(unsigned dims, std::size_t count) : dims_(dims), count_(count), data_(dims * count)
{
    boost::random::sobol engine(dims);
    for (auto &x : data_)
        x = engine();
}

std::vector<std::uint64_t> digital_shift(unsigned dims, std::uint64_t seed, std::uint64_t stream_a,
                                         std::uint64_t stream_b)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed),     static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_a), static_cast<std::uint32_t>(stream_a >> 32),
                      static_cast<std::uint32_t>(stream_b), static_cast<std::uint32_t>(stream_b >> 32)};
    std::mt19937_64 gen(seq);
    std::vector<std::uint64_t> shift(dims);
    for (auto &s : shift)
        s = gen();
    return shift;
}

} // namespace onebit
