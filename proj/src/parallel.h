// Copyright 2026 The bosonrace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BOSONRACE_SRC_PARALLEL_H
#define BOSONRACE_SRC_PARALLEL_H

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bosonrace::detail {

/// Runs body(k) for k in [0, count) on contiguous blocks, one per hardware
/// thread. Callers write results into pre-sized slots indexed by k, so the
/// outcome never depends on scheduling. The first exception is rethrown.
template <typename Body>
void parallel_for(size_t count, Body &&body, size_t min_per_thread = 64) {
    size_t hw = std::max<size_t>(1, std::thread::hardware_concurrency());
    size_t workers = std::min(hw, std::max<size_t>(1, count / std::max<size_t>(1, min_per_thread)));
    if (workers <= 1) {
        for (size_t k = 0; k < count; k++) {
            body(k);
        }
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (size_t w = 0; w < workers; w++) {
        size_t begin = count * w / workers;
        size_t end = count * (w + 1) / workers;
        threads.emplace_back([&, begin, end] {
            try {
                for (size_t k = begin; k < end; k++) {
                    body(k);
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        });
    }
    threads.clear();
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace bosonrace::detail

#endif
