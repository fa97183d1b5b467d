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
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "tablebounds/combinatorics.hpp"
#include "tablebounds/error.hpp"

namespace tablebounds {

std::string RationalToString(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

// Bit k set when the k-th variable of `outer` (ascending) belongs to `inner`.
VarSet LocalVars(VarSet outer, VarSet inner) {
  std::uint32_t bits = 0;
  int k = 0;
  for (int v : outer.indices()) {
    if (inner.contains(v)) bits |= 1u << k;
    ++k;
  }
  return VarSet(bits);
}

bool TablesAgree(const ContingencyTable& x, const ContingencyTable& y,
                 bool exact, std::size_t* where) {
  double scale = 1;
  for (double v : x.counts()) scale = std::max(scale, std::abs(v));
  const double tol = exact ? 0.0 : 1e-9 * scale;
  for (std::size_t i = 0; i < x.num_cells(); ++i) {
    if (std::abs(x[i] - y[i]) > tol) {
      *where = i;
      return false;
    }
  }
  return true;
}

std::int64_t ToInt(double v) { return static_cast<std::int64_t>(v); }

std::int64_t Ceil(const Rational& r) {
  const std::int64_t n = r.numerator(), d = r.denominator();
  return n >= 0 ? (n + d - 1) / d : -((-n) / d);
}

std::string JoinSets(const std::vector<VarSet>& sets) {
  std::string s;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) s += ", ";
    s += sets[i].ToString();
  }
  return s;
}

void RequireDerivable(const MarginalFamily& fam,
                      const std::vector<VarSet>& sets, const std::string& op) {
  std::vector<VarSet> missing;
  for (VarSet s : sets) {
    if (!fam.IsDerivable(s) &&
        std::find(missing.begin(), missing.end(), s) == missing.end()) {
      missing.push_back(s);
    }
  }
  if (!missing.empty()) {
    throw MissingMarginalError(op + " needs marginals not derivable from the "
                               "released family: " + JoinSets(missing));
  }
}

// Merges repeated sets, drops zero coefficients and evaluates at the cell.
LowerCandidate MakeCandidate(const MarginalFamily& fam, const CellIndex& cell,
                             const std::vector<std::pair<VarSet, Rational>>& form) {
  std::vector<std::pair<VarSet, Rational>> merged;
  for (const auto& [set, coef] : form) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const auto& t) { return t.first == set; });
    if (it == merged.end()) {
      merged.emplace_back(set, coef);
    } else {
      it->second += coef;
    }
  }
  LowerCandidate c;
  Rational exact(0);
  for (const auto& [set, coef] : merged) {
    if (coef.numerator() == 0) continue;
    const double v = fam.Value(set, cell);
    c.terms.push_back(BoundTerm{set, coef, v});
    c.value += boost::rational_cast<double>(coef) * v;
    if (fam.is_integer()) exact += coef * Rational(ToInt(v));
  }
  if (fam.is_integer()) {
    c.exact = exact;
    c.value = boost::rational_cast<double>(exact);
  }
  return c;
}

// Fills raw_lower, lower and upper from the candidates and upper terms.
void Finish(const MarginalFamily& fam, BoundReport& r) {
  r.upper = fam.Total();
  for (const BoundTerm& t : r.upper_terms) r.upper = std::min(r.upper, t.value);
  if (r.lower_candidates.empty()) {
    r.raw_lower = 0;
    r.lower = 0;
    return;
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < r.lower_candidates.size(); ++i) {
    const auto& c = r.lower_candidates[i];
    const auto& b = r.lower_candidates[best];
    const bool better = (c.exact && b.exact) ? *c.exact > *b.exact
                                             : c.value > b.value;
    if (better) best = i;
  }
  const LowerCandidate& c = r.lower_candidates[best];
  r.raw_lower = c.value;
  r.raw_lower_exact = c.exact;
  if (c.exact) {
    r.lower = static_cast<double>(std::max<std::int64_t>(Ceil(*c.exact), 0));
  } else {
    r.lower = std::max(c.value, 0.0);
  }
}

std::vector<BoundTerm> UpperTerms(const MarginalFamily& fam,
                                  const CellIndex& cell,
                                  const std::vector<VarSet>& sets) {
  std::vector<BoundTerm> out;
  for (VarSet s : sets) out.push_back(BoundTerm{s, Rational(1), fam.Value(s, cell)});
  return out;
}

BoundReport StartReport(const MarginalFamily& fam, const CellIndex& cell,
                        std::string formula) {
  fam.ValidateCell(cell);
  BoundReport r;
  r.cell = cell;
  r.formula = std::move(formula);
  return r;
}

}  // namespace

MarginalFamily::MarginalFamily(std::vector<int> cardinalities,
                               std::vector<MarginalTable> marginals,
                               std::vector<std::vector<std::string>> labels)
    : cardinalities_(std::move(cardinalities)),
      marginals_(std::move(marginals)),
      labels_(std::move(labels)) {
  const int l = num_vars();
  if (l < 1 || l > kMaxLatticeVars) {
    throw SchemaError("a family needs 1.." + std::to_string(kMaxLatticeVars) +
                      " variables");
  }
  for (int c : cardinalities_) {
    if (c < 1) throw SchemaError("cardinalities must be positive");
  }
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != l) {
      throw SchemaError("labels must be given for every axis");
    }
    for (int axis = 0; axis < l; ++axis) {
      if (static_cast<int>(labels_[axis].size()) != cardinalities_[axis]) {
        throw SchemaError("axis " + std::to_string(axis + 1) +
                          " label count does not match its cardinality");
      }
    }
  }
  if (marginals_.empty()) {
    throw SchemaError("a family must release at least one marginal");
  }
  const VarSet full = VarSet::Full(l);
  for (std::size_t i = 0; i < marginals_.size(); ++i) {
    const MarginalTable& m = marginals_[i];
    if (!m.vars.subset_of(full)) {
      throw SchemaError("marginal " + m.vars.ToString() + " exceeds L");
    }
    std::vector<int> expected;
    for (int v : m.vars.indices()) expected.push_back(cardinalities_[v]);
    if (m.table.cardinalities() != expected) {
      throw SchemaError("marginal " + m.vars.ToString() +
                        " has the wrong shape");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (marginals_[j].vars == m.vars) {
        throw SchemaError("marginal " + m.vars.ToString() +
                          " released twice");
      }
    }
    if (!m.table.is_integer()) kind_ = CountKind::kReal;
  }
  total_ = marginals_.front().table.Total();

  for (std::size_t i = 0; i < marginals_.size(); ++i) {
    for (std::size_t j = i + 1; j < marginals_.size(); ++j) {
      const MarginalTable& x = marginals_[i];
      const MarginalTable& y = marginals_[j];
      const VarSet common = x.vars & y.vars;
      const ContingencyTable mx =
          Marginalize(x.table, LocalVars(x.vars, common)).table;
      const ContingencyTable my =
          Marginalize(y.table, LocalVars(y.vars, common)).table;
      std::size_t where = 0;
      if (!TablesAgree(mx, my, is_integer(), &where)) {
        throw SchemaError(
            "inconsistent family: n" + x.vars.ToString() + " and n" +
            y.vars.ToString() + " disagree on n" + common.ToString() +
            " at cell " + CellToString(mx.CellAt(where)) + ": " +
            std::to_string(mx[where]) + " vs " + std::to_string(my[where]));
      }
    }
  }
}

MarginalFamily MarginalFamily::FromTable(const ContingencyTable& table,
                                         std::span<const VarSet> released) {
  std::vector<MarginalTable> ms;
  for (VarSet a : released) ms.push_back(Marginalize(table, a));
  return MarginalFamily(table.cardinalities(), std::move(ms), table.labels());
}

bool MarginalFamily::IsReleased(VarSet a) const {
  return std::any_of(marginals_.begin(), marginals_.end(),
                     [a](const MarginalTable& m) { return m.vars == a; });
}

bool MarginalFamily::IsDerivable(VarSet a) const {
  return a.empty() || SmallestSuperset(a) != nullptr;
}

const MarginalTable* MarginalFamily::SmallestSuperset(VarSet a) const {
  const MarginalTable* best = nullptr;
  for (const MarginalTable& m : marginals_) {
    if (a.subset_of(m.vars) &&
        (best == nullptr || m.table.num_cells() < best->table.num_cells())) {
      best = &m;
    }
  }
  return best;
}

void MarginalFamily::ValidateCell(const CellIndex& cell) const {
  if (static_cast<int>(cell.size()) != num_vars()) {
    throw RangeError("cell " + CellToString(cell) + " needs " +
                     std::to_string(num_vars()) + " coordinates");
  }
  for (int axis = 0; axis < num_vars(); ++axis) {
    if (cell[axis] < 0 || cell[axis] >= cardinalities_[axis]) {
      throw RangeError("cell " + CellToString(cell) + " out of range on axis " +
                       std::to_string(axis + 1));
    }
  }
}

double MarginalFamily::Value(VarSet a, const CellIndex& cell) const {
  ValidateCell(cell);
  if (a.empty()) return total_;
  const MarginalTable* m = SmallestSuperset(a);
  if (m == nullptr) {
    throw MissingMarginalError("marginal n" + a.ToString() +
                               " is not derivable from the released family");
  }
  const CellIndex target = ProjectCell(cell, m->vars);
  const std::vector<int> positions = LocalVars(m->vars, a).indices();
  double sum = 0;
  ForEachCell(m->table.cardinalities(),
              [&](const CellIndex& y, std::size_t flat) {
                for (int pos : positions) {
                  if (y[pos] != target[pos]) return;
                }
                sum += m->table[flat];
              });
  return sum;
}

MarginalFamily MarginalFamily::With(MarginalTable marginal) const {
  std::vector<MarginalTable> ms = marginals_;
  ms.push_back(std::move(marginal));
  return MarginalFamily(cardinalities_, std::move(ms), labels_);
}

BoundReport SimpleFrechet(const MarginalFamily& fam, const CellIndex& cell) {
  if (fam.num_vars() != 2) {
    throw RangeError("simple Frechet bounds need a 2-way family");
  }
  BoundReport r = StartReport(fam, cell, "simple");
  const VarSet rows = VarSet::Of({0}), cols = VarSet::Of({1});
  r.subsets_used = {rows, cols};
  RequireDerivable(fam, r.subsets_used, "simple");
  r.upper_terms = UpperTerms(fam, cell, r.subsets_used);
  r.lower_candidates.push_back(MakeCandidate(
      fam, cell, {{rows, 1}, {cols, 1}, {VarSet{}, -1}}));
  Finish(fam, r);
  return r;
}

BoundReport Frechet3Way(const MarginalFamily& fam, const CellIndex& cell,
                        ThreeWayBasis basis) {
  if (fam.num_vars() != 3) {
    throw RangeError("3-way Frechet bounds need a 3-way family");
  }
  const bool one = basis == ThreeWayBasis::kOneDim;
  BoundReport r = StartReport(fam, cell, one ? "3way:one" : "3way:two");
  const VarSet v1 = VarSet::Of({0}), v2 = VarSet::Of({1}), v3 = VarSet::Of({2});
  if (one) {
    r.subsets_used = {v1, v2, v3};
    RequireDerivable(fam, r.subsets_used, r.formula);
    r.lower_candidates.push_back(MakeCandidate(
        fam, cell, {{v1, 1}, {v2, 1}, {v3, 1}, {VarSet{}, -2}}));
  } else {
    const VarSet v12 = v1 | v2, v13 = v1 | v3, v23 = v2 | v3;
    r.subsets_used = {v12, v13, v23};
    RequireDerivable(fam, r.subsets_used, r.formula);
    r.lower_candidates.push_back(
        MakeCandidate(fam, cell, {{v12, 1}, {v13, 1}, {v1, -1}}));
    r.lower_candidates.push_back(
        MakeCandidate(fam, cell, {{v12, 1}, {v23, 1}, {v2, -1}}));
    r.lower_candidates.push_back(
        MakeCandidate(fam, cell, {{v13, 1}, {v23, 1}, {v3, -1}}));
  }
  r.upper_terms = UpperTerms(fam, cell, r.subsets_used);
  Finish(fam, r);
  return r;
}

BoundReport FrechetDDim(const MarginalFamily& fam, const CellIndex& cell,
                        int d) {
  const int l = fam.num_vars();
  if (d < 1 || d > l) {
    throw RangeError("d=" + std::to_string(d) + " outside 1.." +
                     std::to_string(l));
  }
  BoundReport r = StartReport(fam, cell, "ddim:" + std::to_string(d));
  r.subsets_used = SubsetsOfSize(l, d);
  RequireDerivable(fam, r.subsets_used, r.formula);
  const std::int64_t shared = Binomial(l - 1, d - 1);
  const Rational per_subset(1, shared);
  const Rational total_coef = -(Rational(Binomial(l, d), shared) - 1);
  std::vector<std::pair<VarSet, Rational>> form;
  for (VarSet s : r.subsets_used) form.emplace_back(s, per_subset);
  form.emplace_back(VarSet{}, total_coef);
  r.lower_candidates.push_back(MakeCandidate(fam, cell, form));
  r.upper_terms = UpperTerms(fam, cell, r.subsets_used);
  Finish(fam, r);
  return r;
}

KwerelStats KwerelForm(const MarginalFamily& fam, const CellIndex& cell,
                       int d) {
  const int l = fam.num_vars();
  if (d < 1 || d > l) {
    throw RangeError("d=" + std::to_string(d) + " outside 1.." +
                     std::to_string(l));
  }
  if (!fam.is_integer()) throw RangeError("Kwerel form needs integer counts");
  if (fam.Total() == 0) throw RangeError("Kwerel form needs n({}) > 0");
  fam.ValidateCell(cell);
  const std::vector<VarSet> subsets = SubsetsOfSize(l, d);
  RequireDerivable(fam, subsets, "kwerel");
  std::int64_t sum = 0;
  for (VarSet s : subsets) sum += ToInt(fam.Value(s, cell));
  KwerelStats k;
  k.num_vars = l;
  k.d = d;
  k.s_d = Rational(sum, ToInt(fam.Total()));
  k.p_full = k.s_d / Binomial(l - 1, d - 1) - Rational(l, d) + 1;
  return k;
}

Decomposition::Decomposition(std::vector<VarSet> cover, int num_vars)
    : cover_(std::move(cover)) {
  if (cover_.empty()) throw RangeError("a decomposition needs at least one set");
  const VarSet full = VarSet::Full(num_vars);
  VarSet running;
  for (std::size_t j = 0; j < cover_.size(); ++j) {
    if (!cover_[j].subset_of(full)) {
      throw RangeError("cover set " + cover_[j].ToString() + " exceeds L");
    }
    if (j > 0) separators_.push_back(running & cover_[j]);
    running = running | cover_[j];
  }
  if (running != full) {
    throw RangeError("cover " + ToString() + " does not union to L");
  }
}

std::string Decomposition::ToString() const {
  std::string s;
  for (std::size_t i = 0; i < cover_.size(); ++i) {
    if (i) s += "|";
    s += cover_[i].ToString();
  }
  return s;
}

BoundReport DecompositionBound(const MarginalFamily& fam,
                               const Decomposition& decomp,
                               const CellIndex& cell) {
  BoundReport r = StartReport(fam, cell, "decomp:" + decomp.ToString());
  r.subsets_used = decomp.cover();
  RequireDerivable(fam, r.subsets_used, r.formula);
  std::vector<std::pair<VarSet, Rational>> form;
  for (VarSet c : decomp.cover()) form.emplace_back(c, 1);
  for (VarSet s : decomp.separators()) form.emplace_back(s, -1);
  r.lower_candidates.push_back(MakeCandidate(fam, cell, form));
  r.upper_terms = UpperTerms(fam, cell, r.subsets_used);
  Finish(fam, r);
  return r;
}

bool DDimCollapseHolds(int num_vars, int d) {
  const std::vector<VarSet> xs = SubsetsOfSize(num_vars, d);
  const FanSets sets = BuildFanSets(xs, 1, FanForm::kPrimal);
  const std::int64_t threshold = Binomial(num_vars - 1, d - 1);
  for (const FanTerm& t : sets.rhs_terms) {
    const VarSet expected = t.k <= threshold ? VarSet::Full(num_vars) : VarSet{};
    if (t.set != expected) return false;
  }
  return true;
}

FanBoundReport FanLowerBound(const MarginalFamily& fam, const CellIndex& cell,
                             std::span<const VarSet> xs, int p) {
  const int l = fam.num_vars();
  const VarSet full = VarSet::Full(l);
  for (VarSet x : xs) {
    if (!x.subset_of(full)) {
      throw RangeError("Fan element " + x.ToString() + " exceeds L");
    }
  }
  FanBoundReport out;
  out.xs.assign(xs.begin(), xs.end());
  out.p = p;
  std::string name = "fan:";
  for (std::size_t i = 0; i < out.xs.size(); ++i) {
    name += (i ? "|" : "") + out.xs[i].ToString();
  }
  out.report = StartReport(fam, cell, name + "," + std::to_string(p));
  BoundReport& r = out.report;

  FanSets sets = BuildFanSets(xs, p, FanForm::kPrimal);
  std::vector<VarSet> needed = sets.lhs_sets;
  for (std::size_t i = 0; i < sets.rhs_terms.size(); ++i) {
    if (sets.rhs_terms[i].set == full) {
      out.moved_terms.push_back(static_cast<int>(i));
      out.target_coefficient += sets.rhs_terms[i].coefficient;
    } else {
      needed.push_back(sets.rhs_terms[i].set);
    }
  }
  RequireDerivable(fam, needed, "fan");
  r.subsets_used = out.xs;

  for (VarSet s : sets.lhs_sets) out.lhs += fam.Value(s, cell);
  double rhs_known = 0;
  for (FanTerm& t : sets.rhs_terms) {
    if (t.set == full) continue;
    t.value = fam.Value(t.set, cell);
    rhs_known += static_cast<double>(t.coefficient) * t.value;
  }
  out.rhs_terms = sets.rhs_terms;

  std::vector<VarSet> upper_sets;
  for (VarSet x : xs) {
    if (fam.IsDerivable(x)) upper_sets.push_back(x);
  }
  r.upper_terms = UpperTerms(fam, cell, upper_sets);

  if (out.target_coefficient == 0) {
    r.has_cell_bound = false;
    out.identity_holds = out.lhs <= rhs_known;
    Finish(fam, r);
    return out;
  }
  const Rational inv(1, out.target_coefficient);
  std::vector<std::pair<VarSet, Rational>> form;
  for (VarSet s : sets.lhs_sets) form.emplace_back(s, inv);
  for (const FanTerm& t : sets.rhs_terms) {
    if (t.set != full) form.emplace_back(t.set, -inv * t.coefficient);
  }
  r.lower_candidates.push_back(MakeCandidate(fam, cell, form));
  Finish(fam, r);
  return out;
}

FanDecompositionComparison CompareFanVsDecomposition(
    const MarginalFamily& fam, const Decomposition& decomp,
    const CellIndex& cell) {
  if (decomp.size() != 3) {
    throw RangeError("the Fan/decomposition comparison needs a 3-set cover");
  }
  FanDecompositionComparison c;
  c.decomposition = DecompositionBound(fam, decomp, cell);
  const auto& cover = decomp.cover();
  try {
    c.fan = FanLowerBound(fam, cell, cover, 1);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kMissingMarginal) throw;
  }
  if (c.fan && c.fan->report.has_cell_bound) {
    c.decomposition_dominates_fan =
        c.decomposition.lower >= c.fan->report.lower;
  }
  const VarSet s2 = decomp.separators()[0], s3 = decomp.separators()[1];
  if (fam.IsDerivable(s2 | s3) && fam.IsDerivable(s2 & s3)) {
    double v = -fam.Value(s2 | s3, cell) - fam.Value(s2 & s3, cell);
    for (VarSet ci : cover) v += fam.Value(ci, cell);
    c.fan_separator_form = std::max(v, 0.0);
    c.decomposition_dominates_separator_form =
        c.decomposition.lower >= *c.fan_separator_form;
  }
  return c;
}

BoundReport BestBounds(const MarginalFamily& fam, const CellIndex& cell) {
  const int l = fam.num_vars();
  const VarSet full = VarSet::Full(l);
  BoundReport best = StartReport(fam, cell, "best");
  best.upper = fam.Total();
  best.lower = 0;
  best.raw_lower = -std::numeric_limits<double>::infinity();

  auto absorb = [&](const BoundReport& r) {
    if (std::find(best.components.begin(), best.components.end(), r.formula) ==
        best.components.end()) {
      best.components.push_back(r.formula);
    }
    if (r.has_cell_bound && r.lower > best.lower) best.lower = r.lower;
    if (r.has_cell_bound && r.raw_lower > best.raw_lower) {
      best.raw_lower = r.raw_lower;
      best.raw_lower_exact = r.raw_lower_exact;
    }
    best.upper = std::min(best.upper, r.upper);
  };
  auto all_derivable = [&](const std::vector<VarSet>& sets) {
    return std::all_of(sets.begin(), sets.end(),
                       [&](VarSet s) { return fam.IsDerivable(s); });
  };

  std::vector<VarSet> released;
  for (const MarginalTable& m : fam.marginals()) {
    released.push_back(m.vars);
    best.upper_terms.push_back(
        BoundTerm{m.vars, Rational(1), fam.Value(m.vars, cell)});
    best.upper = std::min(best.upper, best.upper_terms.back().value);
  }
  if (fam.IsDerivable(full)) {
    const double v = fam.Value(full, cell);
    best.components.push_back("released");
    best.lower = best.upper = best.raw_lower = v;
    if (fam.is_integer()) best.raw_lower_exact = Rational(ToInt(v));
    return best;
  }
  const VarSet v1 = VarSet::Of({0}), v2 = VarSet::Of({1});
  if (l == 2 && all_derivable({v1, v2})) absorb(SimpleFrechet(fam, cell));
  if (l == 3) {
    const VarSet v3 = VarSet::Of({2});
    if (all_derivable({v1, v2, v3})) {
      absorb(Frechet3Way(fam, cell, ThreeWayBasis::kOneDim));
    }
    if (all_derivable({v1 | v2, v1 | v3, v2 | v3})) {
      absorb(Frechet3Way(fam, cell, ThreeWayBasis::kTwoDim));
    }
  }
  for (int d = 1; d < l; ++d) {
    if (all_derivable(SubsetsOfSize(l, d))) absorb(FrechetDDim(fam, cell, d));
  }

  // Ordered covers drawn from the released sets, and Fan with p = 1 over every
  // subfamily of them. Capped to keep the sequence count small.
  const int m = static_cast<int>(released.size());
  if (m <= 6) {
    std::vector<VarSet> seq;
    std::vector<bool> used(m, false);
    auto extend = [&](auto&& self) -> void {
      VarSet u;
      for (VarSet s : seq) u = u | s;
      if (!seq.empty() && u == full) {
        absorb(DecompositionBound(fam, Decomposition(seq, l), cell));
        return;
      }
      for (int i = 0; i < m; ++i) {
        if (used[i]) continue;
        used[i] = true;
        seq.push_back(released[i]);
        self(self);
        seq.pop_back();
        used[i] = false;
      }
    };
    extend(extend);
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      std::vector<VarSet> xs;
      for (int i = 0; i < m; ++i) {
        if (mask & (1u << i)) xs.push_back(released[i]);
      }
      try {
        FanBoundReport f = FanLowerBound(fam, cell, xs, 1);
        if (f.report.has_cell_bound) absorb(f.report);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kMissingMarginal) throw;
      }
    }
  } else {
    VarSet u;
    for (VarSet s : released) u = u | s;
    if (u == full) {
      absorb(DecompositionBound(fam, Decomposition(released, l), cell));
    }
  }
  if (best.raw_lower == -std::numeric_limits<double>::infinity()) {
    best.raw_lower = 0;
  }
  return best;
}

}  // namespace tablebounds
