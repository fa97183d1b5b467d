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

#ifndef TABLEBOUNDS_ORACLE_HPP_
#define TABLEBOUNDS_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "tablebounds/bounds.hpp"
#include "tablebounds/table.hpp"

namespace tablebounds {

struct EnumerationBudget {
  std::int64_t max_nodes = 10'000'000;
  std::int64_t max_tables = 1'000'000;
};

enum class EnumerationOutcome { kComplete, kExhausted };

const char* OutcomeName(EnumerationOutcome outcome);

struct EnumerationStats {
  EnumerationOutcome outcome = EnumerationOutcome::kComplete;
  std::int64_t nodes = 0;
  std::int64_t tables = 0;
};

// Every nonnegative integer table reproducing the family's marginals exactly,
// visited in deterministic depth-first order (row-major cell assignment). The
// visitor sees the row-major counts of each table.
EnumerationStats EnumerateTables(
    const MarginalFamily& fam, const EnumerationBudget& budget,
    const std::function<void(std::span<const std::int64_t>)>& visit);

std::vector<ContingencyTable> CollectTables(const MarginalFamily& fam,
                                            const EnumerationBudget& budget,
                                            EnumerationStats* stats = nullptr);

// Range of one cell over the enumerated tables. Sharp only when complete.
struct SharpBounds {
  CellIndex cell;
  std::int64_t min_count = 0;
  std::int64_t max_count = 0;
  std::int64_t tables_found = 0;
  EnumerationOutcome outcome = EnumerationOutcome::kComplete;
  ContingencyTable min_table;  // attains min_count
  ContingencyTable max_table;  // attains max_count

  bool sharp() const {
    return outcome == EnumerationOutcome::kComplete && tables_found > 0;
  }
};

SharpBounds ComputeSharpBounds(const MarginalFamily& fam, const CellIndex& cell,
                               const EnumerationBudget& budget = {});

// One enumeration, every cell (row-major).
std::vector<SharpBounds> ComputeAllSharpBounds(
    const MarginalFamily& fam, const EnumerationBudget& budget = {});

struct Certification {
  SharpBounds sharp;
  double slack_lower = 0;  // sharp.min - report.lower
  double slack_upper = 0;  // report.upper - sharp.max
  bool complete = false;
};

// Thrown when a formula bound excludes an enumerated table.
class CertificationFailure : public std::runtime_error {
 public:
  CertificationFailure(const std::string& message, ContingencyTable table)
      : std::runtime_error(message), table_(std::move(table)) {}
  const ContingencyTable& table() const { return table_; }

 private:
  ContingencyTable table_;
};

Certification Certify(const BoundReport& report, const MarginalFamily& fam,
                      const EnumerationBudget& budget = {});

}  // namespace tablebounds

#endif  // TABLEBOUNDS_ORACLE_HPP_
