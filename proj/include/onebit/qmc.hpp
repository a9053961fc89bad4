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

#include <cstddef>
#include <cstdint>
#include <vector>

namespace onebit
{

/// First `count` points of the Sobol sequence in `dims` dimensions, kept as 64-bit digit strings
/// so that each consumer can apply its own random digital shift.
class SobolPoints
{
  public:
    SobolPoints(unsigned dims, std::size_t count);

    unsigned dims() const { return dims_; }
    std::size_t size() const { return count_; }
    std::uint64_t raw(std::size_t i, unsigned d) const { return data_[i * dims_ + d]; }

  private:
    unsigned dims_;
    std::size_t count_;
    std::vector<std::uint64_t> data_;
};

/// Per-dimension XOR masks derived from (seed, stream_a, stream_b).
std::vector<std::uint64_t> digital_shift(unsigned dims, std::uint64_t seed, std::uint64_t stream_a,
                                         std::uint64_t stream_b);

/// Maps a 64-bit digit string to the cell midpoint (k + 1/2) 2^-52, strictly inside (0, 1).
inline double to_unit(std::uint64_t bits)
{
    return (static_cast<double>(bits >> 12) + 0.5) * 0x1p-52;
}

} // namespace onebit
