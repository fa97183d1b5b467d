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

#include "tablebounds/lattice_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "tablebounds/combinatorics.hpp"
#include "tablebounds/error.hpp"
#include "tablebounds/parallel.hpp"

namespace tablebounds {

LatticeFunction::LatticeFunction(int num_vars, std::vector<double> values)
    : num_vars_(num_vars), values_(std::move(values)) {
  if (num_vars < 0 || num_vars > kMaxLatticeVars) {
    throw RangeError("lattice functions support 0.." +
                     std::to_string(kMaxLatticeVars) + " variables, got " +
                     std::to_string(num_vars));
  }
  if (values_.size() != (std::size_t{1} << num_vars)) {
    throw RangeError("lattice function over " + std::to_string(num_vars) +
                     " variables needs " +
                     std::to_string(std::size_t{1} << num_vars) + " values");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw RangeError("lattice function value not finite");
    if (v != std::floor(v)) integral_ = false;
  }
}

LatticeFunction LatticeFunction::Constant(int num_vars, double value) {
  return LatticeFunction(num_vars,
                         std::vector<double>(std::size_t{1} << num_vars, value));
}

double LatticeFunction::tolerance() const {
  if (integral_) return 0.0;
  double scale = 0;
  for (double v : values_) scale = std::max(scale, std::abs(v));
  return 1e-9 * scale;
}

LatticeFunction LatticeFunction::Negated() const {
  std::vector<double> neg(values_.size());
  std::transform(values_.begin(), values_.end(), neg.begin(),
                 [](double v) { return -v; });
  return LatticeFunction(num_vars_, std::move(neg));
}

std::string Witness::Describe() const {
  std::string where;
  switch (kind) {
    case WitnessKind::kMonotoneViolation:
      where = "monotonicity fails on " + a.ToString() + " subset of " +
              b.ToString();
      break;
    case WitnessKind::kSupermodularViolation:
      where = "supermodularity fails on a=" + a.ToString() +
              ", b=" + b.ToString();
      break;
    case WitnessKind::kMtp2Violation: {
      std::string xs = "(", ys = "(";
      for (std::size_t i = 0; i < x.size(); ++i) {
        xs += (i ? "," : "") + std::to_string(x[i]);
        ys += (i ? "," : "") + std::to_string(y[i]);
      }
      where = "MTP2 fails on cells " + xs + ") and " + ys + ")";
      break;
    }
  }
  return where + ": " + std::to_string(lhs) + " > " + std::to_string(rhs);
}

namespace {

CheckResult Monotone(const LatticeFunction& f, bool decreasing) {
  const double tol = f.tolerance();
  const std::uint32_t n = static_cast<std::uint32_t>(f.size());
  for (std::uint32_t m = 0; m < n; ++m) {
    for (int i = 0; i < f.num_vars(); ++i) {
      const std::uint32_t bit = 1u << i;
      if (m & bit) continue;
      const VarSet a(m), b(m | bit);
      const double lo = decreasing ? f(b) : f(a);
      const double hi = decreasing ? f(a) : f(b);
      if (lo > hi + tol) {
        return {false, Witness{WitnessKind::kMonotoneViolation, a, b, {}, {},
                               lo, hi}};
      }
    }
  }
  return {};
}

Witness SupermodularWitness(const LatticeFunction& f, VarSet a, VarSet b) {
  return Witness{WitnessKind::kSupermodularViolation, a, b, {}, {},
                 f(a) + f(b), f(a | b) + f(a & b)};
}

}  // namespace

CheckResult IsDecreasing(const LatticeFunction& f) { return Monotone(f, true); }

CheckResult IsIncreasing(const LatticeFunction& f) {
  return Monotone(f, false);
}

CheckResult IsSupermodular(const LatticeFunction& f, SupermodularMode mode) {
  const double tol = f.tolerance();
  const std::uint32_t n = static_cast<std::uint32_t>(f.size());
  const int l = f.num_vars();
  if (mode == SupermodularMode::kLocal) {
    for (std::uint32_t m = 0; m < n; ++m) {
      for (int i = 0; i < l; ++i) {
        if (m & (1u << i)) continue;
        for (int j = i + 1; j < l; ++j) {
          if (m & (1u << j)) continue;
          const VarSet a(m | (1u << i)), b(m | (1u << j));
          const Witness w = SupermodularWitness(f, a, b);
          if (w.lhs > w.rhs + tol) return {false, w};
        }
      }
    }
    return {};
  }

  auto first_violation = [&](std::uint32_t a) -> std::optional<std::uint32_t> {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (f(VarSet(a)) + f(VarSet(b)) >
          f(VarSet(a | b)) + f(VarSet(a & b)) + tol) {
        return b;
      }
    }
    return std::nullopt;
  };
  const auto row = ParallelFindFirst(
      n, [&](std::size_t a) {
        return first_violation(static_cast<std::uint32_t>(a)).has_value();
      },
      /*min_parallel=*/256);
  if (!row) return {};
  const std::uint32_t a = static_cast<std::uint32_t>(*row);
  return {false, SupermodularWitness(f, VarSet(a), VarSet(*first_violation(a)))};
}

CheckResult IsSubmodular(const LatticeFunction& f, SupermodularMode mode) {
  CheckResult r = IsSupermodular(f.Negated(), mode);
  if (r.witness) {
    // Report in terms of f: f(a|b) + f(a&b) > f(a) + f(b).
    std::swap(r.witness->lhs, r.witness->rhs);
    r.witness->lhs = -r.witness->lhs;
    r.witness->rhs = -r.witness->rhs;
  }
  return r;
}

LatticeFunction IndicatorFunction(VarSet s, int num_vars) {
  if (!s.subset_of(VarSet::Full(num_vars))) {
    throw RangeError("indicator set " + s.ToString() + " exceeds L");
  }
  return LatticeFunction::Tabulate(
      num_vars, [s](VarSet a) { return s.subset_of(a) ? 1.0 : 0.0; });
}

LatticeFunction CumulativeFunction(const LatticeFunction& g) {
  std::vector<double> h(g.values().begin(), g.values().end());
  for (double v : h) {
    if (v < 0) throw RangeError("cumulative function needs nonnegative input");
  }
  for (int i = 0; i < g.num_vars(); ++i) {
    const std::uint32_t bit = 1u << i;
    for (std::uint32_t m = 0; m < h.size(); ++m) {
      if (m & bit) h[m] += h[m ^ bit];
    }
  }
  return LatticeFunction(g.num_vars(), std::move(h));
}

LatticeFunction RestrictToSubset(const LatticeFunction& f, VarSet alpha) {
  return LatticeFunction::Tabulate(f.num_vars(),
                                   [&](VarSet a) { return f(a & alpha); });
}

FanSets BuildFanSets(std::span<const VarSet> xs, int p, FanForm form,
                     const FanLimits& limits) {
  const int q = static_cast<int>(xs.size());
  if (q > limits.max_q) {
    throw RangeError("Fan sequence length " + std::to_string(q) +
                     " exceeds cap " + std::to_string(limits.max_q));
  }
  if (p < 1 || p > q) {
    throw RangeError("Fan order p=" + std::to_string(p) +
                     " outside 1..q=" + std::to_string(q));
  }
  if (Binomial(q, p) > limits.max_combinations) {
    throw RangeError("C(" + std::to_string(q) + "," + std::to_string(p) +
                     ") exceeds the combination cap");
  }
  const bool primal = form == FanForm::kPrimal;
  // Inner operation within a chosen subset, outer across subsets.
  auto combine = [&](std::span<const int> idx) {
    std::uint32_t acc = primal ? ~0u : 0u;
    for (int i : idx) {
      acc = primal ? (acc & xs[i].bits()) : (acc | xs[i].bits());
    }
    return acc;
  };

  FanSets out;
  ForEachCombination(q, p, [&](std::span<const int> idx) {
    out.lhs_sets.emplace_back(combine(idx));
    return true;
  });
  for (int k = p; k <= q; ++k) {
    std::uint32_t acc = primal ? 0u : ~0u;
    ForEachCombination(q, k, [&](std::span<const int> idx) {
      const std::uint32_t inner = combine(idx);
      acc = primal ? (acc | inner) : (acc & inner);
      return true;
    });
    out.rhs_terms.push_back(FanTerm{k, Binomial(k - 1, p - 1), VarSet(acc), 0});
  }
  return out;
}

FanEvaluation FanEvaluate(const LatticeFunction& f, std::span<const VarSet> xs,
                          int p, FanForm form, const FanLimits& limits) {
  const VarSet full = VarSet::Full(f.num_vars());
  for (VarSet x : xs) {
    if (!x.subset_of(full)) {
      throw RangeError("Fan element " + x.ToString() + " exceeds L");
    }
  }
  FanSets sets = BuildFanSets(xs, p, form, limits);
  FanEvaluation out;
  for (VarSet s : sets.lhs_sets) out.lhs += f(s);
  for (FanTerm& t : sets.rhs_terms) {
    t.value = f(t.set);
    out.rhs += static_cast<double>(t.coefficient) * t.value;
  }
  out.rhs_terms = std::move(sets.rhs_terms);
  return out;
}

}  // namespace tablebounds
