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

#ifndef TABLEBOUNDS_COMBINATORICS_HPP_
#define TABLEBOUNDS_COMBINATORICS_HPP_

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace tablebounds {

// Binomial coefficient C(n, k); 0 when k < 0 or k > n. Saturates at INT64_MAX.
std::int64_t Binomial(int n, int k);

// Calls fn(span of k ascending indices in [0, n)) for every k-combination in
// lexicographic order. Stops early if fn returns false.
template <typename Fn>
void ForEachCombination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!fn(std::span<const int>(idx))) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace tablebounds

#endif  // TABLEBOUNDS_COMBINATORICS_HPP_
