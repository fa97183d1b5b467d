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

#ifndef TABLEBOUNDS_VARSET_HPP_
#define TABLEBOUNDS_VARSET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace tablebounds {

// Largest number of variables a lattice function may range over (2^24 values).
inline constexpr int kMaxLatticeVars = 24;

// A subset of the variable index set {0,...,l-1}, stored as a bitmask. This is
// the element type of the Boolean lattice 2^L: union is the join, intersection
// the meet, inclusion the order.
class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr explicit VarSet(std::uint32_t bits) : bits_(bits) {}

  // From 0-based variable indices.
  static VarSet Of(std::initializer_list<int> vars);
  static VarSet FromIndices(const std::vector<int>& vars);
  // From 1-based variable indices, as written in files and flags.
  static VarSet FromOneBased(const std::vector<int>& vars, int num_vars);
  static constexpr VarSet Full(int num_vars) {
    return VarSet(num_vars >= 32 ? ~0u : ((1u << num_vars) - 1u));
  }
  static constexpr VarSet Singleton(int var) { return VarSet(1u << var); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int var) const { return (bits_ >> var) & 1u; }
  constexpr bool subset_of(VarSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr VarSet complement(int num_vars) const {
    return VarSet(Full(num_vars).bits_ & ~bits_);
  }
  // Highest variable index plus one; 0 for the empty set.
  constexpr int span() const { return 32 - std::countl_zero(bits_); }

  // Member variables in ascending order (0-based).
  std::vector<int> indices() const;
  // "{1,3}" using 1-based indices.
  std::string ToString() const;

  friend constexpr VarSet operator|(VarSet a, VarSet b) {
    return VarSet(a.bits_ | b.bits_);
  }
  friend constexpr VarSet operator&(VarSet a, VarSet b) {
    return VarSet(a.bits_ & b.bits_);
  }
  friend constexpr VarSet operator-(VarSet a, VarSet b) {
    return VarSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(VarSet, VarSet) = default;
  friend constexpr auto operator<=>(VarSet a, VarSet b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint32_t bits_ = 0;
};

// All subsets of {0,...,n-1} of the given size, in increasing bitmask order.
std::vector<VarSet> SubsetsOfSize(int num_vars, int size);

// Parses "{1,2}" or "1,2" (1-based) into a VarSet. "{}" and "" give the empty set.
VarSet ParseVarSet(const std::string& text, int num_vars);

}  // namespace tablebounds

#endif  // TABLEBOUNDS_VARSET_HPP_
