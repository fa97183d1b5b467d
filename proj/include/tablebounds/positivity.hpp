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

#ifndef TABLEBOUNDS_POSITIVITY_HPP_
#define TABLEBOUNDS_POSITIVITY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tablebounds/lattice_function.hpp"
#include "tablebounds/table.hpp"

namespace tablebounds {

// Per-axis permutation of category indices: perms[axis][old] = new.
class Relabeling {
 public:
  explicit Relabeling(std::vector<std::vector<int>> perms);
  static Relabeling Identity(const std::vector<int>& cardinalities);

  const std::vector<std::vector<int>>& perms() const { return perms_; }
  // Every axis order reversed after this relabeling.
  Relabeling Reversed() const;
  ContingencyTable Apply(const ContingencyTable& table) const;
  std::string ToString() const;

  friend bool operator==(const Relabeling&, const Relabeling&) = default;
  friend auto operator<=>(const Relabeling& a, const Relabeling& b) {
    return a.perms_ <=> b.perms_;
  }

 private:
  std::vector<std::vector<int>> perms_;
};

enum class Mtp2Mode {
  kExhaustive,  // every incomparable pair of cells
  kLocal,       // adjacent 2x2 squares only
};

// n_x + n_y <= n_{x^y} + n_{xvy} for cells x, y (componentwise min / max).
// Witness: cells x, y with lhs = n_x + n_y, rhs = n_{x^y} + n_{xvy}.
CheckResult IsMtp2Additive(const ContingencyTable& table,
                           Mtp2Mode mode = Mtp2Mode::kExhaustive);
// n_x * n_y <= n_{x^y} * n_{xvy}.
CheckResult IsMtp2Multiplicative(const ContingencyTable& table,
                                 Mtp2Mode mode = Mtp2Mode::kExhaustive);

enum class Mtp2Criterion { kAdditive, kMultiplicative };

// Brute force over all per-axis permutations (at most `max_candidates`).
// Returns the lexicographically smallest relabeling under which the criterion
// holds, or nullopt. Throws kRange when the search space exceeds the cap.
std::optional<Relabeling> SearchMtp2Relabeling(
    const ContingencyTable& table, Mtp2Criterion criterion,
    std::int64_t max_candidates = 1'000'000);

// mu(a) proportional to exp(sum_k theta_k F_k(a) + sum_k theta2_k F_k(a & alpha))
// with F_k the cell-margin function anchored at anchors[k].
struct ExpFamily {
  std::vector<CellIndex> anchors;
  std::vector<double> theta;
  std::optional<VarSet> alpha;
  std::vector<double> theta2;  // empty, or one per anchor when alpha is set
};

struct ExpFamilyDensity {
  LatticeFunction mu;
  double log_norm = 0;  // c(theta)
  // log mu, kept separately because mu itself underflows to 0 once the
  // exponents spread by more than about 745.
  LatticeFunction log_mu;
};

ExpFamilyDensity ComputeExpFamilyDensity(const ExpFamily& family,
                                         const ContingencyTable& table);

// mu(a|b) mu(a&b) >= mu(a) mu(b), checked as supermodularity of log mu.
// Throws kRange on a nonpositive value.
CheckResult IsLogSupermodular(const LatticeFunction& mu,
                              SupermodularMode mode = SupermodularMode::kLocal);

// Same check on the log weights of a density, so cells that underflow in
// mu are still compared exactly.
CheckResult IsLogSupermodular(const ExpFamilyDensity& density,
                              SupermodularMode mode = SupermodularMode::kLocal);

// E[h1 h2] - E[h1] E[h2] under mu, by exact summation over 2^L.
// Throws kRange if mu does not sum to 1 within 1e-9.
double FkgCovariance(const LatticeFunction& mu, const LatticeFunction& h1,
                     const LatticeFunction& h2);

// (a -> n_{x0(a & alpha),+}, a -> n_{x0(a & beta),+}); both decreasing.
std::pair<LatticeFunction, LatticeFunction> FkgMarginPair(
    const ContingencyTable& table, const CellIndex& anchor, VarSet alpha,
    VarSet beta);

}  // namespace tablebounds

#endif  // TABLEBOUNDS_POSITIVITY_HPP_
