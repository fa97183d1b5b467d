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

#include "tablebounds/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "tablebounds/error.hpp"
#include "tablebounds/parallel.hpp"

namespace tablebounds {

Relabeling::Relabeling(std::vector<std::vector<int>> perms)
    : perms_(std::move(perms)) {
  for (std::size_t axis = 0; axis < perms_.size(); ++axis) {
    std::vector<int> sorted = perms_[axis];
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
      if (sorted[i] != i) {
        throw RangeError("relabeling of axis " + std::to_string(axis + 1) +
                         " is not a permutation");
      }
    }
  }
}

Relabeling Relabeling::Identity(const std::vector<int>& cardinalities) {
  std::vector<std::vector<int>> perms;
  for (int c : cardinalities) {
    perms.emplace_back(c);
    std::iota(perms.back().begin(), perms.back().end(), 0);
  }
  return Relabeling(std::move(perms));
}

Relabeling Relabeling::Reversed() const {
  std::vector<std::vector<int>> perms = perms_;
  for (auto& p : perms) {
    const int c = static_cast<int>(p.size());
    for (int& v : p) v = c - 1 - v;
  }
  return Relabeling(std::move(perms));
}

ContingencyTable Relabeling::Apply(const ContingencyTable& table) const {
  if (perms_.size() != table.cardinalities().size()) {
    throw RangeError("relabeling arity does not match the table");
  }
  for (std::size_t axis = 0; axis < perms_.size(); ++axis) {
    if (static_cast<int>(perms_[axis].size()) != table.cardinalities()[axis]) {
      throw RangeError("relabeling of axis " + std::to_string(axis + 1) +
                       " has the wrong length");
    }
  }
  std::vector<double> counts(table.num_cells());
  CellIndex y(perms_.size());
  ForEachCell(table.cardinalities(), [&](const CellIndex& x, std::size_t flat) {
    for (std::size_t axis = 0; axis < x.size(); ++axis) {
      y[axis] = perms_[axis][x[axis]];
    }
    std::size_t to = 0;
    for (std::size_t axis = 0; axis < y.size(); ++axis) {
      to = to * static_cast<std::size_t>(table.cardinalities()[axis]) +
           static_cast<std::size_t>(y[axis]);
    }
    counts[to] = table[flat];
  });
  std::vector<std::vector<std::string>> labels;
  if (table.has_labels()) {
    labels = table.labels();
    for (std::size_t axis = 0; axis < perms_.size(); ++axis) {
      for (std::size_t old = 0; old < perms_[axis].size(); ++old) {
        labels[axis][perms_[axis][old]] = table.labels()[axis][old];
      }
    }
  }
  return ContingencyTable(table.cardinalities(), std::move(counts),
                          table.kind(), std::move(labels));
}

std::string Relabeling::ToString() const {
  std::string s = "[";
  for (std::size_t axis = 0; axis < perms_.size(); ++axis) {
    s += axis ? ",[" : "[";
    for (std::size_t i = 0; i < perms_[axis].size(); ++i) {
      s += (i ? "," : "") + std::to_string(perms_[axis][i]);
    }
    s += "]";
  }
  return s + "]";
}

namespace {

enum class Combine { kSum, kProduct };

CheckResult Mtp2(const ContingencyTable& table, Mtp2Mode mode, Combine op) {
  auto violated = [&](const CellIndex& x, const CellIndex& y,
                      const CellIndex& meet, const CellIndex& join,
                      Witness* w) {
    const double nx = table.at(x), ny = table.at(y);
    const double nm = table.at(meet), nj = table.at(join);
    const double lhs = op == Combine::kSum ? nx + ny : nx * ny;
    const double rhs = op == Combine::kSum ? nm + nj : nm * nj;
    const double tol =
        table.is_integer() ? 0.0 : 1e-9 * std::max(std::abs(lhs), std::abs(rhs));
    if (lhs <= rhs + tol) return false;
    *w = Witness{WitnessKind::kMtp2Violation, {}, {}, x, y, lhs, rhs};
    return true;
  };

  const auto& cards = table.cardinalities();
  const int l = table.num_vars();
  Witness w{};
  if (mode == Mtp2Mode::kLocal) {
    bool found = false;
    ForEachCell(cards, [&](const CellIndex& x, std::size_t) {
      if (found) return;
      for (int p = 0; p < l && !found; ++p) {
        if (x[p] + 1 >= cards[p]) continue;
        for (int q = p + 1; q < l && !found; ++q) {
          if (x[q] + 1 >= cards[q]) continue;
          CellIndex u = x, v = x, join = x;
          ++u[p];
          ++v[q];
          ++join[p];
          ++join[q];
          found = violated(u, v, x, join, &w);
        }
      }
    });
    if (found) return {false, w};
    return {};
  }

  const std::size_t n = table.num_cells();
  for (std::size_t i = 0; i < n; ++i) {
    const CellIndex x = table.CellAt(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const CellIndex y = table.CellAt(j);
      CellIndex meet(l), join(l);
      bool x_below = true, y_below = true;
      for (int axis = 0; axis < l; ++axis) {
        meet[axis] = std::min(x[axis], y[axis]);
        join[axis] = std::max(x[axis], y[axis]);
        x_below = x_below && x[axis] <= y[axis];
        y_below = y_below && y[axis] <= x[axis];
      }
      if (x_below || y_below) continue;
      if (violated(x, y, meet, join, &w)) return {false, w};
    }
  }
  return {};
}

}  // namespace

CheckResult IsMtp2Additive(const ContingencyTable& table, Mtp2Mode mode) {
  return Mtp2(table, mode, Combine::kSum);
}

CheckResult IsMtp2Multiplicative(const ContingencyTable& table, Mtp2Mode mode) {
  return Mtp2(table, mode, Combine::kProduct);
}

std::optional<Relabeling> SearchMtp2Relabeling(const ContingencyTable& table,
                                               Mtp2Criterion criterion,
                                               std::int64_t max_candidates) {
  // All permutations of each axis, in lexicographic order.
  std::vector<std::vector<std::vector<int>>> axis_perms;
  std::int64_t space = 1;
  for (int c : table.cardinalities()) {
    std::vector<int> p(c);
    std::iota(p.begin(), p.end(), 0);
    axis_perms.emplace_back();
    do {
      axis_perms.back().push_back(p);
      if (static_cast<std::int64_t>(axis_perms.back().size()) > max_candidates) {
        break;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    const auto count = static_cast<std::int64_t>(axis_perms.back().size());
    if (space > max_candidates / count) {
      throw RangeError("relabeling search space exceeds " +
                       std::to_string(max_candidates) + " candidates");
    }
    space *= count;
  }

  auto candidate = [&](std::size_t index) {
    std::vector<std::vector<int>> perms(axis_perms.size());
    for (int axis = static_cast<int>(axis_perms.size()) - 1; axis >= 0; --axis) {
      const std::size_t count = axis_perms[axis].size();
      perms[axis] = axis_perms[axis][index % count];
      index /= count;
    }
    return Relabeling(std::move(perms));
  };
  auto passes = [&](std::size_t index) {
    const Relabeling r = candidate(index);
    // Reversing every axis preserves both criteria; only the smaller
    // representative of each pair is tested.
    if (r.Reversed() < r) return false;
    const ContingencyTable t = r.Apply(table);
    return criterion == Mtp2Criterion::kAdditive
               ? IsMtp2Additive(t).holds
               : IsMtp2Multiplicative(t).holds;
  };
  const auto hit = ParallelFindFirst(static_cast<std::size_t>(space), passes,
                                     /*min_parallel=*/64);
  if (!hit) return std::nullopt;
  return candidate(*hit);
}

ExpFamilyDensity ComputeExpFamilyDensity(const ExpFamily& family,
                                         const ContingencyTable& table) {
  const int l = table.num_vars();
  if (l > kMaxLatticeVars) {
    throw RangeError("table exceeds the lattice variable cap");
  }
  if (family.theta.size() != family.anchors.size()) {
    throw RangeError("theta needs one component per anchor");
  }
  const bool interaction = family.alpha.has_value();
  if (interaction && !family.theta2.empty() &&
      family.theta2.size() != family.anchors.size()) {
    throw RangeError("theta2 needs one component per anchor");
  }
  if (!interaction && !family.theta2.empty()) {
    throw RangeError("theta2 given without an interaction set alpha");
  }
  auto check = [](double t) {
    if (!std::isfinite(t) || t < 0) {
      throw RangeError("theta components must be finite and nonnegative");
    }
  };
  std::for_each(family.theta.begin(), family.theta.end(), check);
  std::for_each(family.theta2.begin(), family.theta2.end(), check);
  if (interaction && !family.alpha->subset_of(VarSet::Full(l))) {
    throw RangeError("alpha exceeds L");
  }

  std::vector<double> exponent(std::size_t{1} << l, 0.0);
  for (std::size_t k = 0; k < family.anchors.size(); ++k) {
    const LatticeFunction f = CellMarginFunction(table, family.anchors[k]);
    const double t2 = family.theta2.empty() ? 0.0 : family.theta2[k];
    for (std::uint32_t m = 0; m < exponent.size(); ++m) {
      exponent[m] += family.theta[k] * f(VarSet(m));
      if (interaction) exponent[m] += t2 * f(VarSet(m) & *family.alpha);
    }
  }
  const double shift = *std::max_element(exponent.begin(), exponent.end());
  double sum = 0;
  for (double e : exponent) sum += std::exp(e - shift);
  const double log_norm = shift + std::log(sum);

  std::vector<double> mu(exponent.size());
  std::vector<double> log_mu(exponent.size());
  double total = 0;
  for (std::size_t m = 0; m < mu.size(); ++m) {
    log_mu[m] = exponent[m] - log_norm;
    mu[m] = std::exp(log_mu[m]);
    total += mu[m];
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw RangeError("density failed to normalize: total " +
                     std::to_string(total));
  }
  return {LatticeFunction(l, std::move(mu)), log_norm,
          LatticeFunction(l, std::move(log_mu))};
}

CheckResult IsLogSupermodular(const LatticeFunction& mu,
                              SupermodularMode mode) {
  std::vector<double> logs(mu.size());
  for (std::size_t m = 0; m < mu.size(); ++m) {
    const double v = mu.values()[m];
    if (!(v > 0)) {
      throw RangeError("log-supermodularity needs a strictly positive "
                       "function; value at " +
                       VarSet(static_cast<std::uint32_t>(m)).ToString() +
                       " is " + std::to_string(v));
    }
    logs[m] = std::log(v);
  }
  return IsSupermodular(LatticeFunction(mu.num_vars(), std::move(logs)), mode);
}

CheckResult IsLogSupermodular(const ExpFamilyDensity& density,
                              SupermodularMode mode) {
  return IsSupermodular(density.log_mu, mode);
}

double FkgCovariance(const LatticeFunction& mu, const LatticeFunction& h1,
                     const LatticeFunction& h2) {
  if (h1.num_vars() != mu.num_vars() || h2.num_vars() != mu.num_vars()) {
    throw RangeError("covariance arguments range over different lattices");
  }
  double total = 0, e1 = 0, e2 = 0;
  for (std::size_t m = 0; m < mu.size(); ++m) {
    const double w = mu.values()[m];
    if (w < 0) throw RangeError("mu has a negative value");
    total += w;
    e1 += w * h1.values()[m];
    e2 += w * h2.values()[m];
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw RangeError("mu is not normalized: total " + std::to_string(total));
  }
  double cov = 0;
  for (std::size_t m = 0; m < mu.size(); ++m) {
    cov += mu.values()[m] * (h1.values()[m] - e1) * (h2.values()[m] - e2);
  }
  return cov;
}

std::pair<LatticeFunction, LatticeFunction> FkgMarginPair(
    const ContingencyTable& table, const CellIndex& anchor, VarSet alpha,
    VarSet beta) {
  const LatticeFunction f = CellMarginFunction(table, anchor);
  return {RestrictToSubset(f, alpha), RestrictToSubset(f, beta)};
}

}  // namespace tablebounds
