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

#ifndef TABLEBOUNDS_BOUNDS_HPP_
#define TABLEBOUNDS_BOUNDS_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "tablebounds/lattice_function.hpp"
#include "tablebounds/table.hpp"
#include "tablebounds/varset.hpp"

namespace tablebounds {

using Rational = boost::rational<std::int64_t>;

std::string RationalToString(const Rational& r);

// Released marginal tables {n(a) : a in A} of one unknown l-way table. The grand
// total n({}) is always available. Members are checked for mutual consistency
// on every common sub-marginal at construction.
class MarginalFamily {
 public:
  MarginalFamily(std::vector<int> cardinalities,
                 std::vector<MarginalTable> marginals,
                 std::vector<std::vector<std::string>> labels = {});

  static MarginalFamily FromTable(const ContingencyTable& table,
                                  std::span<const VarSet> released);

  int num_vars() const { return static_cast<int>(cardinalities_.size()); }
  const std::vector<int>& cardinalities() const { return cardinalities_; }
  const std::vector<std::vector<std::string>>& labels() const {
    return labels_;
  }
  const std::vector<MarginalTable>& marginals() const { return marginals_; }
  CountKind kind() const { return kind_; }
  bool is_integer() const { return kind_ == CountKind::kInteger; }

  bool IsReleased(VarSet a) const;
  // Released, or a subset of a released marginal.
  bool IsDerivable(VarSet a) const;
  double Total() const { return total_; }

  // n_{x(a),+}: the marginal count of `a` at the projection of `cell`.
  // Throws kMissingMarginal when `a` is not derivable.
  double Value(VarSet a, const CellIndex& cell) const;

  // A copy with one more marginal released (validated like the rest).
  MarginalFamily With(MarginalTable marginal) const;

  void ValidateCell(const CellIndex& cell) const;

 private:
  const MarginalTable* SmallestSuperset(VarSet a) const;

  std::vector<int> cardinalities_;
  std::vector<MarginalTable> marginals_;
  std::vector<std::vector<std::string>> labels_;
  CountKind kind_ = CountKind::kInteger;
  double total_ = 0;
};

// coefficient * n(set) at the report's cell.
struct BoundTerm {
  VarSet set;
  Rational coefficient;
  double value = 0;
};

// One candidate lower bound sum(coefficient * n(set)), before clamping at 0.
struct LowerCandidate {
  std::vector<BoundTerm> terms;
  double value = 0;
  std::optional<Rational> exact;  // integer families only
};

struct BoundReport {
  CellIndex cell;
  std::string formula;
  double lower = 0;
  double upper = std::numeric_limits<double>::infinity();
  // False when the formula yields no statement about the cell (fan without an
  // L term); lower/upper are then the trivial 0 and the upper from margins.
  bool has_cell_bound = true;
  // Lower before clamping: the best candidate.
  double raw_lower = 0;
  std::optional<Rational> raw_lower_exact;
  std::vector<LowerCandidate> lower_candidates;
  std::vector<BoundTerm> upper_terms;
  std::vector<VarSet> subsets_used;
  std::vector<std::string> components;  // formulas combined by "best"
};

// l = 2, both 1-way marginals: min(n_i+, n_+j) >= n_ij >= max(n_i+ + n_+j - N, 0).
BoundReport SimpleFrechet(const MarginalFamily& fam, const CellIndex& cell);

enum class ThreeWayBasis { kOneDim, kTwoDim };

BoundReport Frechet3Way(const MarginalFamily& fam, const CellIndex& cell,
                        ThreeWayBasis basis);

// Bounds from all C(l, d) d-dimensional marginals. The lower bound is computed
// exactly; integer families report its ceiling.
BoundReport FrechetDDim(const MarginalFamily& fam, const CellIndex& cell,
                        int d);

struct KwerelStats {
  int num_vars = 0;
  int d = 0;
  Rational s_d;     // (1/N) * sum of the d-subset margins
  Rational p_full;  // S_d / C(l-1, d-1) - l/d + 1
};

// Requires an integer family with N > 0.
KwerelStats KwerelForm(const MarginalFamily& fam, const CellIndex& cell, int d);

// Ordered cover (C_1,...,C_d) of L with separators
// S_j = (C_1 | ... | C_{j-1}) & C_j, j = 2..d.
class Decomposition {
 public:
  Decomposition(std::vector<VarSet> cover, int num_vars);

  const std::vector<VarSet>& cover() const { return cover_; }
  // separators()[0] is S_2.
  const std::vector<VarSet>& separators() const { return separators_; }
  int size() const { return static_cast<int>(cover_.size()); }
  std::string ToString() const;

 private:
  std::vector<VarSet> cover_;
  std::vector<VarSet> separators_;
};

BoundReport DecompositionBound(const MarginalFamily& fam,
                               const Decomposition& decomp,
                               const CellIndex& cell);

struct FanBoundReport {
  BoundReport report;
  std::vector<VarSet> xs;
  int p = 1;
  double lhs = 0;                  // sum over p-subsets of n(meet)
  std::vector<FanTerm> rhs_terms;  // values filled for non-L terms
  std::vector<int> moved_terms;    // indices into rhs_terms with set == L
  std::int64_t target_coefficient = 0;
  // Without an L term: whether lhs <= rhs holds on the released values.
  std::optional<bool> identity_holds;
};

// Rearranges the primal Fan inequality on n(.) at the cell into a lower bound:
// every rhs term whose join-of-meets is L is moved to the left, and the
// remainder divided by their total coefficient.
FanBoundReport FanLowerBound(const MarginalFamily& fam, const CellIndex& cell,
                             std::span<const VarSet> xs, int p);

// Whether, for xs = all d-subsets of L and p = 1, the k-th join-of-meets equals
// L exactly when k <= C(l-1, d-1) and {} otherwise.
bool DDimCollapseHolds(int num_vars, int d);

struct FanDecompositionComparison {
  BoundReport decomposition;
  // fan_lower_bound with xs = (C_1, C_2, C_3), p = 1.
  std::optional<FanBoundReport> fan;
  // sum n(C_i) - n(S_2 | S_3) - n(S_2 & S_3), clamped at 0; defined only when
  // both separator terms are derivable from the family.
  std::optional<double> fan_separator_form;
  std::optional<bool> decomposition_dominates_fan;
  std::optional<bool> decomposition_dominates_separator_form;
};

FanDecompositionComparison CompareFanVsDecomposition(
    const MarginalFamily& fam, const Decomposition& decomp,
    const CellIndex& cell);

// Intersection of every formula applicable to the released family.
BoundReport BestBounds(const MarginalFamily& fam, const CellIndex& cell);

}  // namespace tablebounds

#endif  // TABLEBOUNDS_BOUNDS_HPP_
