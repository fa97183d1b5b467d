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

// Shared fixtures for the test binaries: seeded random generators and small
// brute-force reference computations that do not reuse library shortcuts.

#ifndef TABLEBOUNDS_TESTS_SUPPORT_HPP_
#define TABLEBOUNDS_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "tablebounds/bounds.hpp"
#include "tablebounds/lattice_function.hpp"
#include "tablebounds/table.hpp"
#include "tablebounds/varset.hpp"

namespace tablebounds::testing {

// Lead study: hygiene (Poor, Medium, Good) by exposure (Low, Medium, High).
inline ContingencyTable LeadTable() {
  return ContingencyTable({3, 3}, {7, 5, 13, 1, 1, 3, 0, 1, 3},
                          CountKind::kInteger,
                          {{"Poor", "Medium", "Good"}, {"Low", "Medium", "High"}});
}

inline ContingencyTable UniformTable(int num_vars, int card, double value = 1) {
  std::vector<int> cards(num_vars, card);
  std::size_t cells = 1;
  for (int c : cards) cells *= static_cast<std::size_t>(c);
  return ContingencyTable(cards, std::vector<double>(cells, value));
}

inline int Uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double UniformReal(std::mt19937& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::vector<int> RandomCardinalities(std::mt19937& rng, int num_vars,
                                            int max_card, int min_card = 1) {
  std::vector<int> cards(num_vars);
  for (int& c : cards) c = Uniform(rng, min_card, max_card);
  return cards;
}

inline ContingencyTable RandomTable(std::mt19937& rng,
                                    const std::vector<int>& cards,
                                    int max_count) {
  std::size_t cells = 1;
  for (int c : cards) cells *= static_cast<std::size_t>(c);
  std::vector<double> counts(cells);
  for (double& v : counts) v = Uniform(rng, 0, max_count);
  return ContingencyTable(cards, std::move(counts));
}

inline ContingencyTable RandomTable(std::mt19937& rng, int max_vars,
                                    int max_card, int max_count,
                                    int min_vars = 1) {
  const int l = Uniform(rng, min_vars, max_vars);
  return RandomTable(rng, RandomCardinalities(rng, l, max_card), max_count);
}

// A table with exactly `total` units dropped uniformly at random into cells.
inline ContingencyTable RandomTableWithTotal(std::mt19937& rng,
                                             const std::vector<int>& cards,
                                             int total) {
  std::size_t cells = 1;
  for (int c : cards) cells *= static_cast<std::size_t>(c);
  std::vector<double> counts(cells, 0);
  std::uniform_int_distribution<std::size_t> pick(0, cells - 1);
  for (int i = 0; i < total; ++i) counts[pick(rng)] += 1;
  return ContingencyTable(cards, std::move(counts));
}

inline CellIndex RandomCell(std::mt19937& rng, const std::vector<int>& cards) {
  CellIndex x(cards.size());
  for (std::size_t axis = 0; axis < cards.size(); ++axis) {
    x[axis] = Uniform(rng, 0, cards[axis] - 1);
  }
  return x;
}

inline VarSet RandomVarSet(std::mt19937& rng, int num_vars) {
  return VarSet(static_cast<std::uint32_t>(
      Uniform(rng, 0, (1 << num_vars) - 1)));
}

inline LatticeFunction RandomLatticeFunction(std::mt19937& rng, int num_vars,
                                             int lo, int hi) {
  return LatticeFunction::Tabulate(
      num_vars, [&](VarSet) { return static_cast<double>(Uniform(rng, lo, hi)); });
}

// Supermodular by construction: the subset sum of a nonnegative function.
inline LatticeFunction RandomSupermodular(std::mt19937& rng, int num_vars,
                                          int max_mass) {
  return CumulativeFunction(RandomLatticeFunction(rng, num_vars, 0, max_mass));
}

// n_{x(a),+} by direct summation over every cell of the table.
inline double ReferenceCellMargin(const ContingencyTable& table,
                                  const CellIndex& anchor, VarSet a) {
  double sum = 0;
  ForEachCell(table.cardinalities(), [&](const CellIndex& y, std::size_t flat) {
    for (int v : a.indices()) {
      if (y[v] != anchor[v]) return;
    }
    sum += table[flat];
  });
  return sum;
}

// Every subset of L, in bit order.
inline std::vector<VarSet> AllSubsets(int num_vars) {
  std::vector<VarSet> out;
  for (std::uint32_t m = 0; m < (1u << num_vars); ++m) out.emplace_back(m);
  return out;
}

}  // namespace tablebounds::testing

#endif  // TABLEBOUNDS_TESTS_SUPPORT_HPP_
