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

#ifndef TABLEBOUNDS_TABLE_HPP_
#define TABLEBOUNDS_TABLE_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tablebounds/lattice_function.hpp"
#include "tablebounds/varset.hpp"

namespace tablebounds {

enum class CountKind { kInteger, kReal };

// Dense l-way array of nonnegative counts, row-major with the last axis
// fastest. A 0-way table holds a single entry (the grand total).
//
// Integer tables hold integral values no larger than 2^53 in magnitude, so every
// sum formed from them is exact in double precision.
class ContingencyTable {
 public:
  ContingencyTable() : ContingencyTable(std::vector<int>{}, {0.0}) {}
  ContingencyTable(std::vector<int> cardinalities, std::vector<double> counts,
                   CountKind kind = CountKind::kInteger,
                   std::vector<std::vector<std::string>> labels = {});

  int num_vars() const { return static_cast<int>(cardinalities_.size()); }
  const std::vector<int>& cardinalities() const { return cardinalities_; }
  std::size_t num_cells() const { return counts_.size(); }
  std::span<const double> counts() const { return counts_; }
  CountKind kind() const { return kind_; }
  bool is_integer() const { return kind_ == CountKind::kInteger; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::vector<std::string>>& labels() const {
    return labels_;
  }
  // Category index of `name` on `axis`, or -1.
  int LabelIndex(int axis, const std::string& name) const;

  double operator[](std::size_t flat) const { return counts_[flat]; }
  double at(const CellIndex& x) const { return counts_[FlatIndex(x)]; }

  // Throws a range error if x has the wrong arity or an out-of-range coordinate.
  void ValidateCell(const CellIndex& x) const;
  std::size_t FlatIndex(const CellIndex& x) const;
  CellIndex CellAt(std::size_t flat) const;
  double Total() const;

  friend bool operator==(const ContingencyTable& a,
                         const ContingencyTable& b) {
    return a.cardinalities_ == b.cardinalities_ && a.counts_ == b.counts_;
  }

 private:
  std::vector<int> cardinalities_;
  std::vector<std::size_t> strides_;
  std::vector<double> counts_;
  CountKind kind_ = CountKind::kInteger;
  std::vector<std::vector<std::string>> labels_;
};

// The marginal table n(a): the axes of `vars` in ascending variable order.
struct MarginalTable {
  VarSet vars;
  ContingencyTable table;
};

// Sums counts over every variable outside `vars`. Marginalize(t, Full) is t;
// Marginalize(t, {}) is the 0-way grand total.
MarginalTable Marginalize(const ContingencyTable& table, VarSet vars);

// Coordinates of x restricted to `vars`, in ascending variable order.
CellIndex ProjectCell(const CellIndex& x, VarSet vars);

// F(a) = n_{x0(a),+} for every a in 2^L: the marginal count at the anchor's
// projection. F({}) is the total and F(L) the anchor cell itself.
LatticeFunction CellMarginFunction(const ContingencyTable& table,
                                   const CellIndex& anchor);

// Calls fn(cell, flat) for every cell of a grid in row-major order.
template <typename Fn>
void ForEachCell(const std::vector<int>& cardinalities, Fn&& fn) {
  std::size_t total = 1;
  for (int c : cardinalities) total *= static_cast<std::size_t>(c);
  CellIndex x(cardinalities.size(), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    fn(static_cast<const CellIndex&>(x), flat);
    for (int axis = static_cast<int>(x.size()) - 1; axis >= 0; --axis) {
      if (++x[axis] < cardinalities[axis]) break;
      x[axis] = 0;
    }
  }
}

std::string CellToString(const CellIndex& x);

}  // namespace tablebounds

#endif  // TABLEBOUNDS_TABLE_HPP_
