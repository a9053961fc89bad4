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

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace onebit
{

/// Resolves a thread request: 0 means hardware concurrency, never more than the work items.
inline unsigned resolve_threads(unsigned requested, std::size_t items)
{
    unsigned t = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
    if (items < t)
        t = static_cast<unsigned>(std::max<std::size_t>(1, items));
    return t;
}

/// Calls f(i) for i in [0, n). Work is handed out dynamically; callers must write results by index.
/// If several items throw, the exception of the smallest index is rethrown.
template <class F> void parallel_for(std::size_t n, unsigned threads, F &&f)
{
    threads = resolve_threads(threads, n);
    if (threads <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            f(i);
        return;
    }

    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++)
        {
            try
            {
                f(i);
            }
            catch (...)
            {
                errors[i] = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto &th : pool)
        th.join();

    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
}

/// Pairwise (cascade) summation; the result depends only on the order of `values`.
template <class It> double pairwise_sum(It first, It last)
{
    const auto n = std::distance(first, last);
    if (n <= 8)
    {
        double s = 0.0;
        for (; first != last; ++first)
            s += *first;
        return s;
    }
    It mid = first + n / 2;
    return pairwise_sum(first, mid) + pairwise_sum(mid, last);
}

} // namespace onebit
