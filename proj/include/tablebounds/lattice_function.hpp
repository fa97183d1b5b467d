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

#ifndef TABLEBOUNDS_LATTICE_FUNCTION_HPP_
#define TABLEBOUNDS_LATTICE_FUNCTION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tablebounds/varset.hpp"

namespace tablebounds {

// Full multi-index (x_1,...,x_l), 0-based per axis.
using CellIndex = std::vector<int>;

// A real-valued function on the subset lattice 2^L, stored densely and indexed
// by VarSet bitmask.
class LatticeFunction {
 public:
  LatticeFunction(int num_vars, std::vector<double> values);

  static LatticeFunction Constant(int num_vars, double value);
  template <typename Fn>
  static LatticeFunction Tabulate(int num_vars, Fn&& fn) {
    std::vector<double> values(std::size_t{1} << num_vars);
    for (std::size_t m = 0; m < values.size(); ++m) {
      values[m] = fn(VarSet(static_cast<std::uint32_t>(m)));
    }
    return LatticeFunction(num_vars, std::move(values));
  }

  int num_vars() const { return num_vars_; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator()(VarSet a) const { return values_[a.bits()]; }

  // True when every value is an integer; such functions compare exactly.
  bool is_integral() const { return integral_; }
  // Comparison slack: 0 for integral functions, 1e-9 * max|F| otherwise.
  double tolerance() const;

  LatticeFunction Negated() const;

 private:
  int num_vars_;
  std::vector<double> values_;
  bool integral_ = true;
};

enum class WitnessKind {
  kMonotoneViolation,
  kSupermodularViolation,
  kMtp2Violation,
};

// A violated inequality lhs <= rhs. Lattice checks fill `a`/`b`; table checks
// fill the cells `x`/`y`.
struct Witness {
  WitnessKind kind;
  VarSet a;
  VarSet b;
  CellIndex x;
  CellIndex y;
  double lhs = 0;
  double rhs = 0;

  std::string Describe() const;
};

struct CheckResult {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return holds; }
};

// F(a) >= F(b) for all a subset of b, via the covering pairs (a, a+{i}).
// Witness: a, b with lhs = F(b), rhs = F(a).
CheckResult IsDecreasing(const LatticeFunction& f);
// F(a) <= F(b) for all a subset of b. Witness: lhs = F(a), rhs = F(b).
CheckResult IsIncreasing(const LatticeFunction& f);

enum class SupermodularMode {
  kLocal,       // F(a+i+j) + F(a) >= F(a+i) + F(a+j), O(l^2 2^l)
  kExhaustive,  // all ordered pairs, O(4^l)
};

// F(a|b) + F(a&b) >= F(a) + F(b). Witness: lhs = F(a) + F(b),
// rhs = F(a|b) + F(a&b).
CheckResult IsSupermodular(const LatticeFunction& f,
                           SupermodularMode mode = SupermodularMode::kLocal);
CheckResult IsSubmodular(const LatticeFunction& f,
                         SupermodularMode mode = SupermodularMode::kLocal);

// 1 if s is a subset of a, else 0.
LatticeFunction IndicatorFunction(VarSet s, int num_vars);

// H(a) = sum over s subset of a of G(s), by the subset-sum (zeta) transform.
// G must be nonnegative.
LatticeFunction CumulativeFunction(const LatticeFunction& g);

// a -> F(a & alpha).
LatticeFunction RestrictToSubset(const LatticeFunction& f, VarSet alpha);

enum class FanForm { kPrimal, kDual };

struct FanLimits {
  int max_q = 20;
  std::int64_t max_combinations = 1'000'000;
};

// One right-hand term C(k-1, p-1) * F(set_k). For the primal form set_k is the
// join over all k-subsets of their meets; for the dual form the meet of joins.
struct FanTerm {
  int k = 0;
  std::int64_t coefficient = 0;
  VarSet set;
  double value = 0;
};

// The lattice elements appearing in Fan's inequality for a sequence xs and
// order p, independent of any function.
struct FanSets {
  std::vector<VarSet> lhs_sets;  // one per p-subset, in lexicographic order
  std::vector<FanTerm> rhs_terms;  // k = p..q
};

FanSets BuildFanSets(std::span<const VarSet> xs, int p, FanForm form,
                     const FanLimits& limits = {});

struct FanEvaluation {
  double lhs = 0;
  double rhs = 0;
  std::vector<FanTerm> rhs_terms;
};

FanEvaluation FanEvaluate(const LatticeFunction& f, std::span<const VarSet> xs,
                          int p, FanForm form, const FanLimits& limits = {});

}  // namespace tablebounds

#endif  // TABLEBOUNDS_LATTICE_FUNCTION_HPP_
