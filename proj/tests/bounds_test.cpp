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

#include "tablebounds/bounds.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "support.hpp"
#include "tablebounds/combinatorics.hpp"
#include "tablebounds/error.hpp"

namespace tablebounds {
namespace {

using testing::LeadTable;
using testing::UniformTable;

const VarSet k1 = VarSet::Of({0});
const VarSet k2 = VarSet::Of({1});
const VarSet k3 = VarSet::Of({2});

MarginalFamily Release(const ContingencyTable& t, std::vector<VarSet> sets) {
  return MarginalFamily::FromTable(t, sets);
}

MarginalFamily LeadMargins() { return Release(LeadTable(), {k1, k2}); }

ErrorKind KindOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kSchema;
}

// ---- family ----

TEST(FamilyTest, DerivabilityAndValues) {
  const MarginalFamily fam = Release(UniformTable(3, 2), {k1 | k2, k3});
  EXPECT_TRUE(fam.IsReleased(k1 | k2));
  EXPECT_FALSE(fam.IsReleased(k1));
  EXPECT_TRUE(fam.IsDerivable(k1));
  EXPECT_TRUE(fam.IsDerivable(VarSet{}));
  EXPECT_FALSE(fam.IsDerivable(k1 | k3));
  EXPECT_EQ(fam.Total(), 8);
  EXPECT_EQ(fam.Value(k1, {0, 1, 1}), 4);
  EXPECT_EQ(fam.Value(k1 | k2, {0, 1, 1}), 2);
  EXPECT_EQ(KindOf([&] { fam.Value(k1 | k3, {0, 0, 0}); }),
            ErrorKind::kMissingMarginal);
  EXPECT_EQ(KindOf([&] { fam.Value(k1, {0, 2, 0}); }), ErrorKind::kRange);
}

TEST(FamilyTest, RejectsInconsistentMarginals) {
  const auto rows = Marginalize(LeadTable(), k1);
  MarginalTable cols{k2, ContingencyTable({3}, {8, 7, 20})};
  EXPECT_EQ(KindOf([&] { MarginalFamily({3, 3}, {rows, cols}); }),
            ErrorKind::kSchema);
  // Overlapping two-way margins that disagree on their common variable.
  const ContingencyTable a({2, 2}, {1, 2, 3, 4});
  const ContingencyTable b({2, 2}, {1, 1, 3, 5});
  EXPECT_EQ(KindOf([&] {
              MarginalFamily({2, 2, 2}, {{k1 | k2, a}, {k2 | k3, b}});
            }),
            ErrorKind::kSchema);
}

TEST(FamilyTest, RejectsShapeErrorsAndDuplicates) {
  const auto rows = Marginalize(LeadTable(), k1);
  EXPECT_EQ(KindOf([&] { MarginalFamily({3, 4}, {Marginalize(LeadTable(), k2)}); }),
            ErrorKind::kSchema);
  EXPECT_EQ(KindOf([&] { MarginalFamily({3, 3}, {rows, rows}); }),
            ErrorKind::kSchema);
  EXPECT_EQ(KindOf([&] { MarginalFamily({3, 3}, {}); }), ErrorKind::kSchema);
}

TEST(FamilyTest, WithAddsAMarginal) {
  const MarginalFamily fam = LeadMargins().With(Marginalize(LeadTable(), k1 | k2));
  EXPECT_TRUE(fam.IsDerivable(k1 | k2));
  EXPECT_EQ(fam.Value(k1 | k2, {2, 2}), 3);
}

// ---- simple ----

TEST(SimpleFrechetTest, LeadTableCells) {
  const MarginalFamily fam = LeadMargins();
  const BoundReport poor_low = SimpleFrechet(fam, {0, 0});
  EXPECT_EQ(poor_low.lower, 0);
  EXPECT_EQ(poor_low.upper, 8);
  EXPECT_EQ(poor_low.raw_lower, -1);
  const BoundReport good_low = SimpleFrechet(fam, {2, 0});
  EXPECT_EQ(good_low.lower, 0);
  EXPECT_EQ(good_low.upper, 4);
  // Poor/High: max(25 + 19 - 34, 0) = 10.
  EXPECT_EQ(SimpleFrechet(fam, {0, 2}).lower, 10);
}

TEST(SimpleFrechetTest, ZeroMarginForcesZero) {
  const ContingencyTable t({2, 2}, {3, 0, 4, 0});
  const MarginalFamily fam = Release(t, {k1, k2});
  for (int i = 0; i < 2; ++i) {
    const BoundReport r = SimpleFrechet(fam, {i, 1});
    EXPECT_EQ(r.lower, 0);
    EXPECT_EQ(r.upper, 0);
  }
}

TEST(SimpleFrechetTest, NeedsTwoWayFamilyAndMargins) {
  EXPECT_EQ(KindOf([&] { SimpleFrechet(Release(UniformTable(3, 2), {k1, k2, k3}), {0, 0, 0}); }),
            ErrorKind::kRange);
  EXPECT_EQ(KindOf([&] { SimpleFrechet(Release(LeadTable(), {k1}), {0, 0}); }),
            ErrorKind::kMissingMarginal);
}

// ---- three-way ----

TEST(ThreeWayTest, UniformCube) {
  const ContingencyTable cube = UniformTable(3, 2);
  const BoundReport one = Frechet3Way(Release(cube, {k1, k2, k3}), {0, 0, 0},
                                      ThreeWayBasis::kOneDim);
  EXPECT_EQ(one.upper, 4);
  EXPECT_EQ(one.lower, 0);
  EXPECT_EQ(one.raw_lower, -4);
  const BoundReport two = Frechet3Way(Release(cube, {k1 | k2, k1 | k3, k2 | k3}),
                                      {0, 0, 0}, ThreeWayBasis::kTwoDim);
  EXPECT_EQ(two.upper, 2);
  EXPECT_EQ(two.lower, 0);
  EXPECT_EQ(two.lower_candidates.size(), 3u);
}

TEST(ThreeWayTest, TwoDimCandidatesAreThePairwiseTerms) {
  std::mt19937 rng(41);
  const ContingencyTable t = testing::RandomTable(rng, {2, 3, 2}, 6);
  const CellIndex x = {1, 2, 0};
  const MarginalFamily fam = Release(t, {k1 | k2, k1 | k3, k2 | k3});
  const BoundReport r = Frechet3Way(fam, x, ThreeWayBasis::kTwoDim);
  auto n = [&](VarSet a) { return testing::ReferenceCellMargin(t, x, a); };
  std::vector<double> expected = {n(k1 | k2) + n(k1 | k3) - n(k1),
                                  n(k1 | k2) + n(k2 | k3) - n(k2),
                                  n(k1 | k3) + n(k2 | k3) - n(k3)};
  std::vector<double> got;
  for (const auto& c : r.lower_candidates) got.push_back(c.value);
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expected);
  EXPECT_EQ(r.raw_lower, expected.back());
}

// ---- d-dimensional ----

TEST(DDimTest, UniformCubeDTwo) {
  const MarginalFamily fam = Release(UniformTable(3, 2), SubsetsOfSize(3, 2));
  const BoundReport r = FrechetDDim(fam, {0, 0, 0}, 2);
  EXPECT_EQ(r.upper, 2);
  EXPECT_EQ(r.lower, 0);
  ASSERT_TRUE(r.raw_lower_exact);
  EXPECT_EQ(*r.raw_lower_exact, Rational(-1));
}

TEST(DDimTest, CoefficientsAreExactRationals) {
  const MarginalFamily fam = Release(UniformTable(4, 2), SubsetsOfSize(4, 2));
  const BoundReport r = FrechetDDim(fam, {0, 0, 0, 0}, 2);
  ASSERT_EQ(r.lower_candidates.size(), 1u);
  for (const BoundTerm& t : r.lower_candidates[0].terms) {
    // 1/C(3,1) for each pair; -(C(4,2)/C(3,1) - 1) = -1 for the total.
    EXPECT_EQ(t.coefficient, t.set.empty() ? Rational(-1) : Rational(1, 3));
  }
}

TEST(DDimTest, IntegerModeReportsTheCeiling) {
  // Pairs of a 2x2x2 table whose rational lower bound is fractional.
  const ContingencyTable t({2, 2, 2}, {3, 0, 0, 0, 0, 0, 0, 1});
  const MarginalFamily fam = Release(t, SubsetsOfSize(3, 2));
  const BoundReport r = FrechetDDim(fam, {0, 0, 0}, 2);
  ASSERT_TRUE(r.raw_lower_exact);
  // (3 + 3 + 3) / 2 - (1/2) * 4 = 5/2.
  EXPECT_EQ(*r.raw_lower_exact, Rational(5, 2));
  EXPECT_EQ(r.lower, 3);
  EXPECT_EQ(r.raw_lower, 2.5);
}

TEST(DDimTest, RealModeKeepsTheRationalValue) {
  const ContingencyTable t({2, 2, 2}, {3, 0, 0, 0, 0, 0, 0, 1.5}, CountKind::kReal);
  const BoundReport r = FrechetDDim(Release(t, SubsetsOfSize(3, 2)), {0, 0, 0}, 2);
  EXPECT_DOUBLE_EQ(r.lower, 4.5 - 0.5 * 4.5);
}

TEST(DDimTest, RangeAndMissing) {
  const MarginalFamily fam = Release(UniformTable(3, 2), SubsetsOfSize(3, 1));
  EXPECT_EQ(KindOf([&] { FrechetDDim(fam, {0, 0, 0}, 0); }), ErrorKind::kRange);
  EXPECT_EQ(KindOf([&] { FrechetDDim(fam, {0, 0, 0}, 4); }), ErrorKind::kRange);
  EXPECT_EQ(KindOf([&] { FrechetDDim(fam, {0, 0, 0}, 2); }),
            ErrorKind::kMissingMarginal);
}

TEST(DDimTest, DOneOnThreeWaysIsTheOneDimBasis) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const ContingencyTable t =
        testing::RandomTable(rng, testing::RandomCardinalities(rng, 3, 3), 5);
    const MarginalFamily fam = Release(t, {k1, k2, k3});
    const CellIndex x = testing::RandomCell(rng, t.cardinalities());
    const BoundReport a = FrechetDDim(fam, x, 1);
    const BoundReport b = Frechet3Way(fam, x, ThreeWayBasis::kOneDim);
    ASSERT_EQ(*a.raw_lower_exact, *b.raw_lower_exact);
    ASSERT_EQ(a.lower, b.lower);
    ASSERT_EQ(a.upper, b.upper);
  }
}

// ---- Kwerel ----

TEST(KwerelTest, UniformCube) {
  const MarginalFamily fam = Release(UniformTable(3, 2), SubsetsOfSize(3, 2));
  const KwerelStats k = KwerelForm(fam, {0, 0, 0}, 2);
  EXPECT_EQ(k.s_d, Rational(6, 8));
  EXPECT_EQ(k.p_full, Rational(-1, 8));
}

TEST(KwerelTest, MatchesDDimOverTotal) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const ContingencyTable t = testing::RandomTable(rng, 5, 3, 6, 1);
    if (t.Total() == 0) continue;
    const int l = t.num_vars();
    const int d = testing::Uniform(rng, 1, l);
    const MarginalFamily fam = Release(t, SubsetsOfSize(l, d));
    const CellIndex x = testing::RandomCell(rng, t.cardinalities());
    const KwerelStats k = KwerelForm(fam, x, d);
    const BoundReport r = FrechetDDim(fam, x, d);
    ASSERT_EQ(k.p_full * Rational(static_cast<std::int64_t>(t.Total())),
              *r.raw_lower_exact);
  }
}

TEST(KwerelTest, RejectsEmptyTable) {
  const MarginalFamily fam = Release(ContingencyTable({2, 2}, {0, 0, 0, 0}), {k1, k2});
  EXPECT_EQ(KindOf([&] { KwerelForm(fam, {0, 0}, 1); }), ErrorKind::kRange);
}

// ---- decomposition ----

TEST(DecompositionTest, SeparatorsAreComputed) {
  const Decomposition d({k1 | k2, k2 | k3, k1 | k3}, 3);
  ASSERT_EQ(d.separators().size(), 2u);
  EXPECT_EQ(d.separators()[0], k2);
  EXPECT_EQ(d.separators()[1], k1 | k3);
  EXPECT_EQ(d.ToString(), "{1,2}|{2,3}|{1,3}");
  EXPECT_EQ(KindOf([] { Decomposition({k1, k2}, 3); }), ErrorKind::kRange);
}

TEST(DecompositionTest, TwoPartCoverMatchesTwoDimTerm) {
  std::mt19937 rng(44);
  const ContingencyTable t = testing::RandomTable(rng, {3, 2, 2}, 7);
  const MarginalFamily fam = Release(t, {k1 | k2, k1 | k3});
  const CellIndex x = {2, 1, 0};
  const BoundReport r = DecompositionBound(fam, Decomposition({k1 | k2, k1 | k3}, 3), x);
  auto n = [&](VarSet a) { return testing::ReferenceCellMargin(t, x, a); };
  EXPECT_EQ(r.raw_lower, n(k1 | k2) + n(k1 | k3) - n(k1));
  EXPECT_EQ(r.lower, std::max(r.raw_lower, 0.0));
  EXPECT_EQ(r.upper, std::min(n(k1 | k2), n(k1 | k3)));
}

// ---- Fan ----

TEST(FanBoundTest, SingletonsGiveOneDimBasis) {
  std::mt19937 rng(45);
  const ContingencyTable t = testing::RandomTable(rng, {2, 2, 3}, 4);
  const MarginalFamily fam = Release(t, {k1, k2, k3});
  const std::vector<VarSet> xs = {k1, k2, k3};
  const CellIndex x = {1, 0, 2};
  const FanBoundReport f = FanLowerBound(fam, x, xs, 1);
  const BoundReport b = Frechet3Way(fam, x, ThreeWayBasis::kOneDim);
  EXPECT_EQ(f.target_coefficient, 1);
  EXPECT_EQ(*f.report.raw_lower_exact, *b.raw_lower_exact);
  EXPECT_EQ(f.report.formula, "fan:{1}|{2}|{3},1");
}

TEST(FanBoundTest, TwoPairsGiveTheDecompositionTerm) {
  std::mt19937 rng(46);
  const ContingencyTable t = testing::RandomTable(rng, {2, 3, 2}, 5);
  const MarginalFamily fam = Release(t, {k1 | k2, k1 | k3});
  const std::vector<VarSet> xs = {k1 | k2, k1 | k3};
  const CellIndex x = {0, 1, 1};
  const FanBoundReport f = FanLowerBound(fam, x, xs, 1);
  auto n = [&](VarSet a) { return testing::ReferenceCellMargin(t, x, a); };
  EXPECT_EQ(f.report.raw_lower, n(k1 | k2) + n(k1 | k3) - n(k1));
  ASSERT_EQ(f.rhs_terms.size(), 2u);
  EXPECT_EQ(f.rhs_terms[0].set, VarSet::Full(3));
  EXPECT_EQ(f.rhs_terms[1].set, k1);
}

TEST(FanBoundTest, NoFullJoinGivesIdentityOnly) {
  const ContingencyTable t = UniformTable(3, 2);
  const MarginalFamily fam = Release(t, {k1 | k2});
  const std::vector<VarSet> xs = {k1, k2};
  const FanBoundReport f = FanLowerBound(fam, {0, 0, 0}, xs, 1);
  EXPECT_FALSE(f.report.has_cell_bound);
  ASSERT_TRUE(f.identity_holds);
  EXPECT_TRUE(*f.identity_holds);
  EXPECT_EQ(f.target_coefficient, 0);
}

TEST(FanBoundTest, RepeatedFullTermsAreDividedOut) {
  // Cover {1,2},{2,3},{1,3}: F(L) appears for k = 1 and k = 2.
  const ContingencyTable t({2, 1, 2}, {0, 5, 1, 5});
  const MarginalFamily fam = Release(t, {k1 | k2, k2 | k3, k1 | k3});
  const std::vector<VarSet> xs = {k1 | k2, k2 | k3, k1 | k3};
  const FanBoundReport f = FanLowerBound(fam, {0, 0, 1}, xs, 1);
  EXPECT_EQ(f.target_coefficient, 2);
  ASSERT_TRUE(f.report.raw_lower_exact);
  EXPECT_EQ(*f.report.raw_lower_exact, Rational(9, 2));
  EXPECT_EQ(f.report.lower, 5);
}

TEST(FanBoundTest, CollapseToFullSetForDSubsets) {
  for (int l = 1; l <= 12; ++l) {
    for (int d = 1; d <= l; ++d) {
      if (Binomial(l, d) > 20) continue;
      EXPECT_TRUE(DDimCollapseHolds(l, d)) << "l=" << l << " d=" << d;
    }
  }
}

TEST(FanBoundTest, AllDSubsetsReproduceDDim) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 300; ++trial) {
    const ContingencyTable t = testing::RandomTable(rng, 5, 2, 4);
    const int l = t.num_vars();
    const int d = testing::Uniform(rng, 1, l);
    const auto subsets = SubsetsOfSize(l, d);
    const MarginalFamily fam = Release(t, subsets);
    const CellIndex x = testing::RandomCell(rng, t.cardinalities());
    const FanBoundReport f = FanLowerBound(fam, x, subsets, 1);
    const BoundReport r = FrechetDDim(fam, x, d);
    ASSERT_EQ(*f.report.raw_lower_exact, *r.raw_lower_exact) << "l=" << l << " d=" << d;
    ASSERT_EQ(f.report.lower, r.lower);
    ASSERT_EQ(f.target_coefficient, Binomial(l - 1, d - 1));
  }
}

// ---- comparison ----

TEST(ComparisonTest, UniformTablesClampToZero) {
  const ContingencyTable cube = UniformTable(3, 2);
  const MarginalFamily fam = Release(cube, {k1 | k2, k2 | k3, k1 | k3});
  const auto c = CompareFanVsDecomposition(
      fam, Decomposition({k1 | k2, k2 | k3, k1 | k3}, 3), {0, 0, 0});
  EXPECT_EQ(c.decomposition.lower, 0);
  ASSERT_TRUE(c.fan);
  EXPECT_EQ(c.fan->report.lower, 0);
  // n(S2 | S3) = n(L) is not released, so the separator form is undefined.
  EXPECT_FALSE(c.fan_separator_form);
}

TEST(ComparisonTest, SeparatorFormWhenDerivable) {
  // Cover {1},{1,2},{2,3}: S2 = {1}, S3 = {2}; S2 | S3 = {1,2} is released.
  std::mt19937 rng(48);
  const ContingencyTable t = testing::RandomTable(rng, {2, 2, 2}, 6);
  const MarginalFamily fam = Release(t, {k1, k1 | k2, k2 | k3});
  const CellIndex x = {1, 1, 0};
  const auto c = CompareFanVsDecomposition(
      fam, Decomposition({k1, k1 | k2, k2 | k3}, 3), x);
  auto n = [&](VarSet a) { return testing::ReferenceCellMargin(t, x, a); };
  ASSERT_TRUE(c.fan_separator_form);
  EXPECT_EQ(*c.fan_separator_form,
            std::max(n(k1) + n(k1 | k2) + n(k2 | k3) - n(k1 | k2) - n(VarSet{}), 0.0));
  ASSERT_TRUE(c.decomposition_dominates_separator_form);
  EXPECT_TRUE(*c.decomposition_dominates_separator_form);
}

TEST(ComparisonTest, NeedsThreeSets) {
  const MarginalFamily fam = Release(UniformTable(3, 2), {k1 | k2, k1 | k3});
  EXPECT_EQ(KindOf([&] {
              CompareFanVsDecomposition(fam, Decomposition({k1 | k2, k1 | k3}, 3),
                                        {0, 0, 0});
            }),
            ErrorKind::kRange);
}

// ---- best ----

TEST(BestBoundsTest, FullReleasePinsTheCell) {
  const MarginalFamily fam = Release(LeadTable(), {k1 | k2});
  const BoundReport r = BestBounds(fam, {0, 2});
  EXPECT_EQ(r.lower, 13);
  EXPECT_EQ(r.upper, 13);
}

TEST(BestBoundsTest, LeadMarginsMatchSimple) {
  const BoundReport r = BestBounds(LeadMargins(), {0, 2});
  EXPECT_EQ(r.lower, 10);
  EXPECT_EQ(r.upper, 19);
  EXPECT_NE(std::find(r.components.begin(), r.components.end(), "simple"),
            r.components.end());
  std::vector<std::string> sorted = r.components;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
}

// A random cover of L: subsets drawn until their union is L.
std::vector<VarSet> RandomCover(std::mt19937& rng, int l, int max_parts) {
  for (;;) {
    std::vector<VarSet> cover;
    VarSet u;
    const int parts = testing::Uniform(rng, 1, max_parts);
    for (int i = 0; i < parts; ++i) {
      VarSet s = testing::RandomVarSet(rng, l);
      if (s.empty()) s = VarSet::Singleton(testing::Uniform(rng, 0, l - 1));
      cover.push_back(s);
      u = u | s;
    }
    if (u == VarSet::Full(l)) return cover;
  }
}

void ExpectBrackets(const BoundReport& r, double truth, const std::string& what) {
  ASSERT_LE(r.lower, truth) << what;
  ASSERT_GE(r.upper, truth) << what;
  ASSERT_LE(r.lower, r.upper) << what;
}

// Every formula brackets the true entry of the table it was released from.
TEST(BoundsProperty, ValidityOnRandomTables) {
  std::mt19937 rng(49);
  for (int trial = 0; trial < 1000; ++trial) {
    const ContingencyTable t = testing::RandomTable(rng, 4, 3, 5, 2);
    const int l = t.num_vars();
    const CellIndex x = testing::RandomCell(rng, t.cardinalities());
    const double truth = t.at(x);
    if (l == 2) ExpectBrackets(SimpleFrechet(Release(t, {k1, k2}), x), truth, "simple");
    if (l == 3) {
      ExpectBrackets(Frechet3Way(Release(t, {k1, k2, k3}), x, ThreeWayBasis::kOneDim),
                     truth, "3way:one");
      ExpectBrackets(Frechet3Way(Release(t, {k1 | k2, k1 | k3, k2 | k3}), x,
                                 ThreeWayBasis::kTwoDim),
                     truth, "3way:two");
    }
    for (int d = 1; d <= l; ++d) {
      ExpectBrackets(FrechetDDim(Release(t, SubsetsOfSize(l, d)), x, d), truth,
                     "ddim");
    }
    const auto cover = RandomCover(rng, l, 4);
    std::vector<VarSet> distinct = cover;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const MarginalFamily fam = Release(t, distinct);
    ExpectBrackets(DecompositionBound(fam, Decomposition(cover, l), x), truth,
                   "decomp");
    const int p = testing::Uniform(rng, 1, static_cast<int>(cover.size()));
    try {
      const FanBoundReport f = FanLowerBound(fam, x, cover, p);
      if (f.report.has_cell_bound) {
        ExpectBrackets(f.report, truth, "fan");
      } else {
        ASSERT_TRUE(*f.identity_holds);
      }
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::kMissingMarginal);
    }
    ExpectBrackets(BestBounds(fam, x), truth, "best");
  }
}

// Adding a marginal never loosens the best available bound.
TEST(BoundsProperty, MonotoneInformation) {
  std::mt19937 rng(50);
  for (int trial = 0; trial < 300; ++trial) {
    const ContingencyTable t = testing::RandomTable(rng, 4, 3, 5, 2);
    const int l = t.num_vars();
    std::vector<VarSet> released;
    const int m = testing::Uniform(rng, 1, 4);
    for (int i = 0; i < m; ++i) {
      const VarSet s = testing::RandomVarSet(rng, l);
      if (!s.empty() && s != VarSet::Full(l) &&
          std::find(released.begin(), released.end(), s) == released.end()) {
        released.push_back(s);
      }
    }
    if (released.empty()) continue;
    VarSet extra;
    do {
      extra = testing::RandomVarSet(rng, l);
    } while (extra.empty() ||
             std::find(released.begin(), released.end(), extra) != released.end());
    const MarginalFamily fam = Release(t, released);
    const MarginalFamily more = fam.With(Marginalize(t, extra));
    const CellIndex x = testing::RandomCell(rng, t.cardinalities());
    const BoundReport a = BestBounds(fam, x);
    const BoundReport b = BestBounds(more, x);
    ASSERT_GE(b.lower, a.lower) << "trial " << trial;
    ASSERT_LE(b.upper, a.upper) << "trial " << trial;
  }
}

}  // namespace
}  // namespace tablebounds
