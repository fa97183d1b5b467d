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

#include "tablebounds/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "tablebounds/error.hpp"

namespace tablebounds {

const char* OutcomeName(EnumerationOutcome outcome) {
  return outcome == EnumerationOutcome::kComplete ? "complete" : "exhausted";
}

namespace {

// Depth-first assignment of cells in row-major order. Every released marginal
// cell is a linear constraint over the full cells projecting onto it.
class Enumerator {
 public:
  Enumerator(const MarginalFamily& fam, const EnumerationBudget& budget,
             const std::function<void(std::span<const std::int64_t>)>& visit)
      : budget_(budget), visit_(visit) {
    if (!fam.is_integer()) {
      throw RangeError("enumeration needs an integer family");
    }
    ForEachCell(fam.cardinalities(), [&](const CellIndex&, std::size_t) {
      ++num_cells_;
    });
    cons_of_.resize(num_cells_);
    for (const MarginalTable& m : fam.marginals()) {
      const std::size_t base = remaining_.size();
      for (double v : m.table.counts()) {
        remaining_.push_back(static_cast<std::int64_t>(v));
      }
      cells_.resize(remaining_.size());
      ForEachCell(fam.cardinalities(),
                  [&](const CellIndex& x, std::size_t flat) {
                    const std::size_t c =
                        base + m.table.FlatIndex(ProjectCell(x, m.vars));
                    cons_of_[flat].push_back(c);
                    cells_[c].push_back(flat);
                  });
    }
    last_.resize(cells_.size());
    for (std::size_t c = 0; c < cells_.size(); ++c) last_[c] = cells_[c].back();
    assignment_.assign(num_cells_, 0);
  }

  EnumerationStats Run() {
    stopped_ = false;
    Visit(0);
    if (stopped_) stats_.outcome = EnumerationOutcome::kExhausted;
    return stats_;
  }

 private:
  std::int64_t Cap(std::size_t cell) const {
    std::int64_t cap = std::numeric_limits<std::int64_t>::max();
    for (std::size_t c : cons_of_[cell]) cap = std::min(cap, remaining_[c]);
    return cap;
  }

  // Each constraint touched by `cell` must still be reachable from the
  // capacities of its unassigned cells.
  bool Reachable(std::size_t cell) const {
    for (std::size_t c : cons_of_[cell]) {
      std::int64_t capacity = 0;
      for (std::size_t y : cells_[c]) {
        if (y <= cell) continue;
        capacity += Cap(y);
        if (capacity >= remaining_[c]) break;
      }
      if (capacity < remaining_[c]) return false;
    }
    return true;
  }

  void Assign(std::size_t cell, std::int64_t v) {
    assignment_[cell] = v;
    for (std::size_t c : cons_of_[cell]) remaining_[c] -= v;
  }
  void Unassign(std::size_t cell) {
    for (std::size_t c : cons_of_[cell]) remaining_[c] += assignment_[cell];
    assignment_[cell] = 0;
  }

  void Visit(std::size_t cell) {
    if (stopped_) return;
    if (cell == num_cells_) {
      if (stats_.tables >= budget_.max_tables) {
        stopped_ = true;
        return;
      }
      ++stats_.tables;
      visit_(assignment_);
      return;
    }
    if (++stats_.nodes > budget_.max_nodes) {
      stopped_ = true;
      return;
    }
    const std::int64_t hi = Cap(cell);
    std::int64_t forced = -1;
    for (std::size_t c : cons_of_[cell]) {
      if (last_[c] != cell) continue;
      if (forced >= 0 && forced != remaining_[c]) return;
      forced = remaining_[c];
    }
    if (forced >= 0) {
      if (forced > hi) return;
      Assign(cell, forced);
      if (Reachable(cell)) Visit(cell + 1);
      Unassign(cell);
      return;
    }
    for (std::int64_t v = 0; v <= hi && !stopped_; ++v) {
      Assign(cell, v);
      if (Reachable(cell)) Visit(cell + 1);
      Unassign(cell);
    }
  }

  EnumerationBudget budget_;
  const std::function<void(std::span<const std::int64_t>)>& visit_;
  std::size_t num_cells_ = 0;
  std::vector<std::vector<std::size_t>> cons_of_;
  std::vector<std::vector<std::size_t>> cells_;
  std::vector<std::size_t> last_;
  std::vector<std::int64_t> remaining_;
  std::vector<std::int64_t> assignment_;
  EnumerationStats stats_;
  bool stopped_ = false;
};

ContingencyTable ToTable(const MarginalFamily& fam,
                         std::span<const std::int64_t> counts) {
  return ContingencyTable(fam.cardinalities(),
                          std::vector<double>(counts.begin(), counts.end()),
                          CountKind::kInteger, fam.labels());
}

}  // namespace

EnumerationStats EnumerateTables(
    const MarginalFamily& fam, const EnumerationBudget& budget,
    const std::function<void(std::span<const std::int64_t>)>& visit) {
  return Enumerator(fam, budget, visit).Run();
}

std::vector<ContingencyTable> CollectTables(const MarginalFamily& fam,
                                            const EnumerationBudget& budget,
                                            EnumerationStats* stats) {
  std::vector<ContingencyTable> out;
  const EnumerationStats s = EnumerateTables(
      fam, budget,
      [&](std::span<const std::int64_t> c) { out.push_back(ToTable(fam, c)); });
  if (stats) *stats = s;
  return out;
}

std::vector<SharpBounds> ComputeAllSharpBounds(const MarginalFamily& fam,
                                               const EnumerationBudget& budget) {
  std::vector<SharpBounds> out;
  ForEachCell(fam.cardinalities(), [&](const CellIndex& x, std::size_t) {
    SharpBounds s;
    s.cell = x;
    out.push_back(std::move(s));
  });
  const EnumerationStats stats =
      EnumerateTables(fam, budget, [&](std::span<const std::int64_t> c) {
        for (std::size_t i = 0; i < out.size(); ++i) {
          SharpBounds& s = out[i];
          if (s.tables_found == 0 || c[i] < s.min_count) {
            s.min_count = c[i];
            s.min_table = ToTable(fam, c);
          }
          if (s.tables_found == 0 || c[i] > s.max_count) {
            s.max_count = c[i];
            s.max_table = ToTable(fam, c);
          }
          ++s.tables_found;
        }
      });
  for (SharpBounds& s : out) s.outcome = stats.outcome;
  return out;
}

SharpBounds ComputeSharpBounds(const MarginalFamily& fam, const CellIndex& cell,
                               const EnumerationBudget& budget) {
  fam.ValidateCell(cell);
  std::size_t flat = 0;
  for (int axis = 0; axis < fam.num_vars(); ++axis) {
    flat = flat * static_cast<std::size_t>(fam.cardinalities()[axis]) +
           static_cast<std::size_t>(cell[axis]);
  }
  SharpBounds s;
  s.cell = cell;
  const EnumerationStats stats =
      EnumerateTables(fam, budget, [&](std::span<const std::int64_t> c) {
        if (s.tables_found == 0 || c[flat] < s.min_count) {
          s.min_count = c[flat];
          s.min_table = ToTable(fam, c);
        }
        if (s.tables_found == 0 || c[flat] > s.max_count) {
          s.max_count = c[flat];
          s.max_table = ToTable(fam, c);
        }
        ++s.tables_found;
      });
  s.outcome = stats.outcome;
  return s;
}

Certification Certify(const BoundReport& report, const MarginalFamily& fam,
                      const EnumerationBudget& budget) {
  Certification cert;
  cert.sharp = ComputeSharpBounds(fam, report.cell, budget);
  cert.complete = cert.sharp.sharp();
  if (cert.sharp.tables_found == 0) return cert;
  const double lo = static_cast<double>(cert.sharp.min_count);
  const double hi = static_cast<double>(cert.sharp.max_count);
  if (report.lower > lo) {
    throw CertificationFailure(
        report.formula + " lower bound " + std::to_string(report.lower) +
            " exceeds the attained value " + std::to_string(lo) + " at cell " +
            CellToString(report.cell),
        cert.sharp.min_table);
  }
  if (hi > report.upper) {
    throw CertificationFailure(
        report.formula + " upper bound " + std::to_string(report.upper) +
            " is below the attained value " + std::to_string(hi) +
            " at cell " + CellToString(report.cell),
        cert.sharp.max_table);
  }
  cert.slack_lower = lo - report.lower;
  cert.slack_upper = report.upper - hi;
  return cert;
}

}  // namespace tablebounds
