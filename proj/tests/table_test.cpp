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

#include <random>

#include <gtest/gtest.h>

#include "support.hpp"
#include "tablebounds/error.hpp"

namespace tablebounds {
namespace {

using testing::LeadTable;
using testing::ReferenceCellMargin;

TEST(TableTest, RejectsMalformedInput) {
  EXPECT_THROW(ContingencyTable({2, 0}, {}), Error);
  EXPECT_THROW(ContingencyTable({2, 2}, {1, 2, 3}), Error);
  EXPECT_THROW(ContingencyTable({2}, {1, -1}), Error);
  EXPECT_THROW(ContingencyTable({2}, {1, 0.5}), Error);
  EXPECT_NO_THROW(ContingencyTable({2}, {1, 0.5}, CountKind::kReal));
  EXPECT_THROW(ContingencyTable({2}, {1, 1}, CountKind::kInteger, {{"a"}}), Error);
}

TEST(TableTest, FlatIndexRoundTrip) {
  const ContingencyTable t({2, 3, 4}, std::vector<double>(24, 0));
  for (std::size_t flat = 0; flat < t.num_cells(); ++flat) {
    EXPECT_EQ(t.FlatIndex(t.CellAt(flat)), flat);
  }
  EXPECT_EQ(t.FlatIndex({1, 2, 3}), 23u);
  EXPECT_THROW(t.ValidateCell({2, 0, 0}), Error);
  EXPECT_THROW(t.ValidateCell({0, 0}), Error);
}

TEST(TableTest, LabelLookup) {
  const ContingencyTable lead = LeadTable();
  EXPECT_EQ(lead.LabelIndex(0, "Good"), 2);
  EXPECT_EQ(lead.LabelIndex(1, "Low"), 0);
  EXPECT_EQ(lead.LabelIndex(1, "Bad"), -1);
  EXPECT_EQ(ContingencyTable({2}, {1, 1}).LabelIndex(0, "Low"), -1);
}

TEST(MarginalizeTest, LeadTableMargins) {
  const ContingencyTable lead = LeadTable();
  const auto rows = Marginalize(lead, VarSet::Of({0}));
  const auto cols = Marginalize(lead, VarSet::Of({1}));
  EXPECT_EQ(std::vector<double>(rows.table.counts().begin(), rows.table.counts().end()),
            (std::vector<double>{25, 5, 4}));
  EXPECT_EQ(std::vector<double>(cols.table.counts().begin(), cols.table.counts().end()),
            (std::vector<double>{8, 7, 19}));
  const auto total = Marginalize(lead, VarSet{});
  EXPECT_EQ(total.table.num_vars(), 0);
  EXPECT_EQ(total.table.Total(), 34);
  EXPECT_EQ(rows.table.labels().front().front(), "Poor");
}

TEST(MarginalizeTest, FullSetReturnsTheTable) {
  const ContingencyTable lead = LeadTable();
  EXPECT_EQ(Marginalize(lead, VarSet::Full(2)).table, lead);
}

TEST(MarginalizeTest, RejectsOutOfRangeVariables) {
  EXPECT_THROW(Marginalize(LeadTable(), VarSet::Of({2})), Error);
}

TEST(ProjectCellTest, SelectsCoordinates) {
  EXPECT_EQ(ProjectCell({0, 2}, VarSet::Of({1})), (CellIndex{2}));
  EXPECT_EQ(ProjectCell({1, 0, 2}, VarSet::Of({0, 2})), (CellIndex{1, 2}));
  EXPECT_EQ(ProjectCell({1, 0, 2}, VarSet{}), CellIndex{});
}

TEST(CellMarginTest, LeadTableAtPoorLow) {
  const LatticeFunction f = CellMarginFunction(LeadTable(), {0, 0});
  EXPECT_EQ(f(VarSet::Of({0, 1})), 7);
  EXPECT_EQ(f(VarSet::Of({0})), 25);
  EXPECT_EQ(f(VarSet::Of({1})), 8);
  EXPECT_EQ(f(VarSet{}), 34);
}

TEST(CellMarginTest, OneWayTable) {
  const LatticeFunction f = CellMarginFunction(ContingencyTable({2}, {3, 4}), {0});
  EXPECT_EQ(f(VarSet::Of({0})), 3);
  EXPECT_EQ(f(VarSet{}), 7);
}

TEST(CellMarginTest, UniformCubeHalvesPerVariable) {
  const ContingencyTable cube = testing::UniformTable(3, 2);
  ForEachCell(cube.cardinalities(), [&](const CellIndex& x, std::size_t) {
    const LatticeFunction f = CellMarginFunction(cube, x);
    for (VarSet a : testing::AllSubsets(3)) {
      EXPECT_EQ(f(a), 1 << (3 - a.size()));
    }
  });
}

TEST(CellMarginTest, MatchesDirectSummationOnRandomTables) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const ContingencyTable t = testing::RandomTable(rng, 5, 3, 9);
    const CellIndex anchor = testing::RandomCell(rng, t.cardinalities());
    const LatticeFunction f = CellMarginFunction(t, anchor);
    for (VarSet a : testing::AllSubsets(t.num_vars())) {
      ASSERT_EQ(f(a), ReferenceCellMargin(t, anchor, a));
    }
  }
}

// Property: marginalizing in two steps equals marginalizing once, and the
// total is conserved.
TEST(MarginalizeProperty, ComposesAndConservesTotal) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const ContingencyTable t = testing::RandomTable(rng, 4, 3, 6);
    const int l = t.num_vars();
    for (VarSet b : testing::AllSubsets(l)) {
      const MarginalTable mb = Marginalize(t, b);
      EXPECT_EQ(mb.table.Total(), t.Total());
      for (VarSet a : testing::AllSubsets(l)) {
        if (!a.subset_of(b)) continue;
        // Position of a's variables inside b's local axes.
        std::uint32_t local = 0;
        int k = 0;
        for (int v : b.indices()) {
          if (a.contains(v)) local |= 1u << k;
          ++k;
        }
        ASSERT_EQ(Marginalize(mb.table, VarSet(local)).table,
                  Marginalize(t, a).table);
      }
    }
  }
}

TEST(MarginalizeProperty, RealCountsConserveTotal) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> counts(12);
    for (double& v : counts) v = testing::UniformReal(rng, 0, 1);
    const ContingencyTable t({2, 3, 2}, counts, CountKind::kReal);
    for (VarSet a : testing::AllSubsets(3)) {
      EXPECT_NEAR(Marginalize(t, a).table.Total(), t.Total(), 1e-12);
    }
  }
}

}  // namespace
}  // namespace tablebounds
