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

#ifndef TABLEBOUNDS_IO_HPP_
#define TABLEBOUNDS_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "tablebounds/bounds.hpp"
#include "tablebounds/lattice_function.hpp"
#include "tablebounds/oracle.hpp"
#include "tablebounds/positivity.hpp"
#include "tablebounds/table.hpp"

// Table and family documents, plus JSON renderings of every report type.
// Variable indices are 1-based in documents; cells are 0-based. Emitted
// documents carry "schema": 1; a "schema" key on input must equal 1.
namespace tablebounds::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// {"cardinalities": [...], "labels": [[...]], "counts": [...], "kind": ...}
ContingencyTable TableFromJson(const json& doc);
json TableToJson(const ContingencyTable& table);

// 2-way only. First row holds column labels (first field is a corner label);
// each further row is a row label followed by counts.
ContingencyTable TableFromCsv(const std::string& text);

// {"cardinalities": [...], "labels": ..., "marginals": [{"vars": [...],
// "counts": [...]}, ...]}
MarginalFamily FamilyFromJson(const json& doc);
json FamilyToJson(const MarginalFamily& fam);

std::string ReadFile(const std::string& path);
// JSON, or CSV when the path ends in ".csv".
ContingencyTable LoadTable(const std::string& path);
MarginalFamily LoadFamily(const std::string& path);

// "Poor,Low" (labels) or "0,2" (0-based indices); tokens may mix.
CellIndex ParseCell(const std::string& text, const std::vector<int>& cards,
                    const std::vector<std::vector<std::string>>& labels);

// "{1,2}|{1,3}" or "{1},{2}" (1-based).
std::vector<VarSet> ParseVarSetList(const std::string& text, int num_vars);

json ToJson(VarSet s);
json ToJson(const MarginalTable& m);
json ToJson(const Witness& w);
json ToJson(const BoundReport& r);
json ToJson(const FanBoundReport& r);
json ToJson(const FanEvaluation& e);
json ToJson(const KwerelStats& k);
json ToJson(const FanDecompositionComparison& c);
json ToJson(const SharpBounds& s);
json ToJson(const Certification& c);
json ToJson(const Relabeling& r);

}  // namespace tablebounds::io

#endif  // TABLEBOUNDS_IO_HPP_
