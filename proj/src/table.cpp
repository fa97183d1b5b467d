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

#include "tablebounds/table.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "tablebounds/error.hpp"

namespace tablebounds {
namespace {

constexpr double kMaxExactInteger = 9007199254740992.0;  // 2^53

}  // namespace

ContingencyTable::ContingencyTable(std::vector<int> cardinalities,
                                   std::vector<double> counts, CountKind kind,
                                   std::vector<std::vector<std::string>> labels)
    : cardinalities_(std::move(cardinalities)),
      counts_(std::move(counts)),
      kind_(kind),
      labels_(std::move(labels)) {
  std::size_t total = 1;
  strides_.assign(cardinalities_.size(), 1);
  for (int axis = num_vars() - 1; axis >= 0; --axis) {
    if (cardinalities_[axis] < 1) {
      throw RangeError("axis " + std::to_string(axis + 1) +
                       " has nonpositive cardinality");
    }
    strides_[axis] = total;
    total *= static_cast<std::size_t>(cardinalities_[axis]);
  }
  if (counts_.size() != total) {
    throw RangeError("expected " + std::to_string(total) + " counts, got " +
                     std::to_string(counts_.size()));
  }
  for (double v : counts_) {
    if (!std::isfinite(v) || v < 0) {
      throw RangeError("counts must be finite and nonnegative");
    }
    if (kind_ == CountKind::kInteger &&
        (v != std::floor(v) || v > kMaxExactInteger)) {
      throw RangeError("integer table holds non-integral count " +
                       std::to_string(v));
    }
  }
  if (!labels_.empty()) {
    if (labels_.size() != cardinalities_.size()) {
      throw RangeError("labels must be given for every axis");
    }
    for (int axis = 0; axis < num_vars(); ++axis) {
      if (static_cast<int>(labels_[axis].size()) != cardinalities_[axis]) {
        throw RangeError("axis " + std::to_string(axis + 1) + " has " +
                         std::to_string(cardinalities_[axis]) +
                         " categories but " +
                         std::to_string(labels_[axis].size()) + " labels");
      }
    }
  }
}

int ContingencyTable::LabelIndex(int axis, const std::string& name) const {
  if (labels_.empty()) return -1;
  const auto& axis_labels = labels_.at(axis);
  for (int i = 0; i < static_cast<int>(axis_labels.size()); ++i) {
    if (axis_labels[i] == name) return i;
  }
  return -1;
}

void ContingencyTable::ValidateCell(const CellIndex& x) const {
  if (x.size() != cardinalities_.size()) {
    throw RangeError("cell " + CellToString(x) + " has " +
                     std::to_string(x.size()) + " coordinates, table has " +
                     std::to_string(cardinalities_.size()) + " axes");
  }
  for (std::size_t axis = 0; axis < x.size(); ++axis) {
    if (x[axis] < 0 || x[axis] >= cardinalities_[axis]) {
      throw RangeError("cell " + CellToString(x) + " out of range on axis " +
                       std::to_string(axis + 1));
    }
  }
}

std::size_t ContingencyTable::FlatIndex(const CellIndex& x) const {
  ValidateCell(x);
  std::size_t flat = 0;
  for (std::size_t axis = 0; axis < x.size(); ++axis) {
    flat += static_cast<std::size_t>(x[axis]) * strides_[axis];
  }
  return flat;
}

CellIndex ContingencyTable::CellAt(std::size_t flat) const {
  CellIndex x(cardinalities_.size());
  for (std::size_t axis = 0; axis < x.size(); ++axis) {
    x[axis] = static_cast<int>(flat / strides_[axis]);
    flat %= strides_[axis];
  }
  return x;
}

double ContingencyTable::Total() const {
  double total = 0;
  for (double v : counts_) total += v;
  return total;
}

MarginalTable Marginalize(const ContingencyTable& table, VarSet vars) {
  const int l = table.num_vars();
  if (!vars.subset_of(VarSet::Full(l))) {
    throw RangeError("variable set " + vars.ToString() + " exceeds {1,...," +
                     std::to_string(l) + "}");
  }
  if (vars == VarSet::Full(l)) return {vars, table};

  const std::vector<int> kept = vars.indices();
  std::vector<int> out_cards;
  std::vector<std::vector<std::string>> out_labels;
  for (int axis : kept) {
    out_cards.push_back(table.cardinalities()[axis]);
    if (table.has_labels()) out_labels.push_back(table.labels()[axis]);
  }
  // Stride of each input axis in the output table; 0 for summed-out axes.
  std::vector<std::size_t> out_stride(l, 0);
  std::size_t out_size = 1;
  for (int i = static_cast<int>(kept.size()) - 1; i >= 0; --i) {
    out_stride[kept[i]] = out_size;
    out_size *= static_cast<std::size_t>(out_cards[i]);
  }
  std::vector<double> out(out_size, 0.0);
  ForEachCell(table.cardinalities(), [&](const CellIndex& x, std::size_t flat) {
    std::size_t o = 0;
    for (int axis = 0; axis < l; ++axis) {
      o += static_cast<std::size_t>(x[axis]) * out_stride[axis];
    }
    out[o] += table[flat];
  });
  return {vars, ContingencyTable(std::move(out_cards), std::move(out),
                                 table.kind(), std::move(out_labels))};
}

CellIndex ProjectCell(const CellIndex& x, VarSet vars) {
  CellIndex out;
  for (int axis : vars.indices()) {
    if (axis >= static_cast<int>(x.size())) {
      throw RangeError("variable " + std::to_string(axis + 1) +
                       " not present in cell " + CellToString(x));
    }
    out.push_back(x[axis]);
  }
  return out;
}

LatticeFunction CellMarginFunction(const ContingencyTable& table,
                                   const CellIndex& anchor) {
  const int l = table.num_vars();
  if (l > kMaxLatticeVars) {
    throw RangeError("table has " + std::to_string(l) +
                     " variables; lattice functions are capped at " +
                     std::to_string(kMaxLatticeVars));
  }
  table.ValidateCell(anchor);
  // Mass per agreement pattern: h[m] sums the cells that match the anchor on
  // exactly the axes in m. Then F(a) = sum over m containing a of h[m].
  std::vector<double> h(std::size_t{1} << l, 0.0);
  ForEachCell(table.cardinalities(), [&](const CellIndex& x, std::size_t flat) {
    std::uint32_t m = 0;
    for (int axis = 0; axis < l; ++axis) {
      if (x[axis] == anchor[axis]) m |= 1u << axis;
    }
    h[m] += table[flat];
  });
  for (int i = 0; i < l; ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t m = 0; m < h.size(); ++m) {
      if (!(m & bit)) h[m] += h[m | bit];
    }
  }
  return LatticeFunction(l, std::move(h));
}

std::string CellToString(const CellIndex& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x[i]);
  }
  return s + ")";
}

}  // namespace tablebounds
