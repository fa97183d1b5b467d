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

#include "tablebounds/varset.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <string>

#include "tablebounds/combinatorics.hpp"
#include "tablebounds/error.hpp"

namespace tablebounds {

VarSet VarSet::Of(std::initializer_list<int> vars) {
  return FromIndices(std::vector<int>(vars));
}

VarSet VarSet::FromIndices(const std::vector<int>& vars) {
  std::uint32_t bits = 0;
  for (int v : vars) {
    if (v < 0 || v >= 32) {
      throw RangeError("variable index " + std::to_string(v) + " out of range");
    }
    bits |= 1u << v;
  }
  return VarSet(bits);
}

VarSet VarSet::FromOneBased(const std::vector<int>& vars, int num_vars) {
  std::uint32_t bits = 0;
  for (int v : vars) {
    if (v < 1 || v > num_vars) {
      throw RangeError("variable " + std::to_string(v) + " not in {1,...," +
                       std::to_string(num_vars) + "}");
    }
    bits |= 1u << (v - 1);
  }
  return VarSet(bits);
}

std::vector<int> VarSet::indices() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

std::string VarSet::ToString() const {
  std::string s = "{";
  bool first = true;
  for (int v : indices()) {
    if (!first) s += ",";
    s += std::to_string(v + 1);
    first = false;
  }
  return s + "}";
}

std::vector<VarSet> SubsetsOfSize(int num_vars, int size) {
  std::vector<VarSet> out;
  ForEachCombination(num_vars, size, [&](std::span<const int> idx) {
    std::uint32_t bits = 0;
    for (int i : idx) bits |= 1u << i;
    out.emplace_back(bits);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

VarSet ParseVarSet(const std::string& text, int num_vars) {
  std::vector<int> vars;
  std::string digits;
  auto flush = [&] {
    if (digits.empty()) return;
    vars.push_back(std::stoi(digits));
    digits.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
    } else if (c == ',' || c == '{' || c == '}' ||
               std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      throw RangeError("bad variable set '" + text + "'");
    }
  }
  flush();
  return VarSet::FromOneBased(vars, num_vars);
}

std::int64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    const std::int64_t num = n - k + i;
    if (r > std::numeric_limits<std::int64_t>::max() / num) {
      return std::numeric_limits<std::int64_t>::max();
    }
    r = r * num / i;
  }
  return r;
}

}  // namespace tablebounds
