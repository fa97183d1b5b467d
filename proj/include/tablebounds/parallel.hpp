// Copyright 2026 The tablebounds Authors
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

#ifndef TABLEBOUNDS_PARALLEL_HPP_
#define TABLEBOUNDS_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

namespace tablebounds {

// Worker count from TABLEBOUNDS_THREADS (0 or unset = hardware concurrency).
int ThreadCount();

// Smallest i in [0, n) with pred(i) true, or nullopt. Ranges are split into
// contiguous chunks across workers; the answer does not depend on the worker
// count. `pred` must be safe to call concurrently.
template <typename Pred>
std::optional<std::size_t> ParallelFindFirst(std::size_t n, Pred&& pred,
                                             std::size_t min_parallel = 4096) {
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(ThreadCount()), n);
  if (workers <= 1 || n < min_parallel) {
    for (std::size_t i = 0; i < n; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  std::atomic<std::size_t> best{n};
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    pool.emplace_back([&, begin, end] {
      for (std::size_t i = begin; i < end; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) return;
        if (pred(i)) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (best.load() == n) return std::nullopt;
  return best.load();
}

}  // namespace tablebounds

#endif  // TABLEBOUNDS_PARALLEL_HPP_
