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

#include "tablebounds/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "tablebounds/error.hpp"

namespace tablebounds::io {
namespace {

void CheckSchemaVersion(const json& doc) {
  if (!doc.is_object()) throw SchemaError("document must be a JSON object");
  if (doc.contains("schema") &&
      (!doc["schema"].is_number_integer() || doc["schema"] != kSchemaVersion)) {
    throw SchemaError("unsupported schema version " + doc["schema"].dump());
  }
}

std::vector<int> ReadCardinalities(const json& doc) {
  if (!doc.contains("cardinalities") || !doc["cardinalities"].is_array()) {
    throw SchemaError("\"cardinalities\" must be an array of positive integers");
  }
  std::vector<int> cards;
  for (const json& c : doc["cardinalities"]) {
    if (!c.is_number_integer() || c.get<long long>() < 1 ||
        c.get<long long>() > std::numeric_limits<int>::max()) {
      throw SchemaError("\"cardinalities\" must be an array of positive integers");
    }
    cards.push_back(c.get<int>());
  }
  return cards;
}

std::vector<std::vector<std::string>> ReadLabels(const json& doc) {
  std::vector<std::vector<std::string>> labels;
  if (!doc.contains("labels") || doc["labels"].is_null()) return labels;
  if (!doc["labels"].is_array()) throw SchemaError("\"labels\" must be an array");
  for (const json& axis : doc["labels"]) {
    if (!axis.is_array()) throw SchemaError("each label list must be an array");
    labels.emplace_back();
    for (const json& name : axis) {
      if (!name.is_string()) throw SchemaError("labels must be strings");
      labels.back().push_back(name.get<std::string>());
    }
  }
  return labels;
}

std::vector<double> ReadCounts(const json& holder, bool* integral) {
  if (!holder.contains("counts") || !holder["counts"].is_array()) {
    throw SchemaError("\"counts\" must be an array of numbers");
  }
  std::vector<double> counts;
  *integral = true;
  for (const json& v : holder["counts"]) {
    if (!v.is_number()) throw SchemaError("\"counts\" must hold numbers");
    const double d = v.get<double>();
    if (!std::isfinite(d) || d < 0) {
      throw SchemaError("counts must be finite and nonnegative");
    }
    if (d != std::floor(d)) *integral = false;
    counts.push_back(d);
  }
  return counts;
}

CountKind ReadKind(const json& doc, bool integral) {
  if (!doc.contains("kind")) return integral ? CountKind::kInteger : CountKind::kReal;
  if (doc["kind"] == "integer") {
    if (!integral) throw SchemaError("kind \"integer\" with non-integral counts");
    return CountKind::kInteger;
  }
  if (doc["kind"] == "real") return CountKind::kReal;
  throw SchemaError("\"kind\" must be \"integer\" or \"real\"");
}

// Constructor range errors inside a document are schema problems.
template <typename Fn>
auto AsSchema(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kRange) throw SchemaError(e.what());
    throw;
  }
}

json Num(double v) {
  if (std::isinf(v)) return nullptr;
  if (v == std::floor(v) && std::abs(v) < 9.0e15) {
    return static_cast<std::int64_t>(v);
  }
  return v;
}

json CountsJson(const ContingencyTable& t) {
  json counts = json::array();
  for (double v : t.counts()) counts.push_back(Num(v));
  return counts;
}

std::string Trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(Trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(Trim(cur));
  return out;
}

json TermsJson(const std::vector<BoundTerm>& terms) {
  json out = json::array();
  for (const BoundTerm& t : terms) {
    out.push_back({{"set", ToJson(t.set)},
                   {"coefficient", RationalToString(t.coefficient)},
                   {"value", Num(t.value)}});
  }
  return out;
}

json CellJson(const CellIndex& x) { return json(x); }

}  // namespace

ContingencyTable TableFromJson(const json& doc) {
  CheckSchemaVersion(doc);
  std::vector<int> cards = ReadCardinalities(doc);
  if (cards.empty()) throw SchemaError("a table needs at least one axis");
  bool integral = true;
  std::vector<double> counts = ReadCounts(doc, &integral);
  const CountKind kind = ReadKind(doc, integral);
  auto labels = ReadLabels(doc);
  return AsSchema([&] {
    return ContingencyTable(std::move(cards), std::move(counts), kind,
                            std::move(labels));
  });
}

json TableToJson(const ContingencyTable& table) {
  json doc = {{"schema", kSchemaVersion},
              {"cardinalities", table.cardinalities()},
              {"counts", CountsJson(table)},
              {"kind", table.is_integer() ? "integer" : "real"}};
  if (table.has_labels()) doc["labels"] = table.labels();
  return doc;
}

ContingencyTable TableFromCsv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    rows.push_back(Split(line, ','));
  }
  if (rows.size() < 2 || rows[0].size() < 2) {
    throw SchemaError("CSV table needs a header row and at least one data row");
  }
  std::vector<std::string> col_labels(rows[0].begin() + 1, rows[0].end());
  std::vector<std::string> row_labels;
  std::vector<double> counts;
  bool integral = true;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) {
      throw SchemaError("CSV row " + std::to_string(r + 1) +
                        " has the wrong number of fields");
    }
    row_labels.push_back(rows[r][0]);
    for (std::size_t c = 1; c < rows[r].size(); ++c) {
      double v = 0;
      try {
        std::size_t used = 0;
        v = std::stod(rows[r][c], &used);
        if (used != rows[r][c].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw SchemaError("CSV field '" + rows[r][c] + "' is not a number");
      }
      if (v != std::floor(v)) integral = false;
      counts.push_back(v);
    }
  }
  std::vector<int> cards = {static_cast<int>(row_labels.size()),
                            static_cast<int>(col_labels.size())};
  return AsSchema([&] {
    return ContingencyTable(cards, counts,
                            integral ? CountKind::kInteger : CountKind::kReal,
                            {row_labels, col_labels});
  });
}

MarginalFamily FamilyFromJson(const json& doc) {
  CheckSchemaVersion(doc);
  std::vector<int> cards = ReadCardinalities(doc);
  if (cards.empty()) throw SchemaError("a family needs at least one axis");
  auto labels = ReadLabels(doc);
  if (!doc.contains("marginals") || !doc["marginals"].is_array()) {
    throw SchemaError("\"marginals\" must be an array");
  }
  const int l = static_cast<int>(cards.size());
  if (l > kMaxLatticeVars) throw SchemaError("too many variables");
  std::vector<MarginalTable> ms;
  for (const json& m : doc["marginals"]) {
    if (!m.is_object() || !m.contains("vars") || !m["vars"].is_array()) {
      throw SchemaError("each marginal needs a \"vars\" array");
    }
    std::vector<int> vars;
    for (const json& v : m["vars"]) {
      if (!v.is_number_integer()) throw SchemaError("\"vars\" must be integers");
      vars.push_back(v.get<int>());
    }
    for (std::size_t i = 1; i < vars.size(); ++i) {
      if (vars[i] <= vars[i - 1]) {
        throw SchemaError("\"vars\" must be strictly ascending");
      }
    }
    const VarSet a = AsSchema([&] { return VarSet::FromOneBased(vars, l); });
    std::vector<int> sub_cards;
    std::vector<std::vector<std::string>> sub_labels;
    for (int v : a.indices()) {
      sub_cards.push_back(cards[v]);
      if (!labels.empty() && v < static_cast<int>(labels.size())) {
        sub_labels.push_back(labels[v]);
      }
    }
    bool integral = true;
    std::vector<double> counts = ReadCounts(m, &integral);
    const CountKind kind = ReadKind(doc, integral);
    if (sub_labels.size() != sub_cards.size()) sub_labels.clear();
    ms.push_back(AsSchema([&] {
      return MarginalTable{a, ContingencyTable(sub_cards, counts, kind,
                                               std::move(sub_labels))};
    }));
  }
  return AsSchema([&] {
    return MarginalFamily(std::move(cards), std::move(ms), std::move(labels));
  });
}

json FamilyToJson(const MarginalFamily& fam) {
  json doc = {{"schema", kSchemaVersion},
              {"cardinalities", fam.cardinalities()},
              {"marginals", json::array()}};
  if (!fam.labels().empty()) doc["labels"] = fam.labels();
  if (!fam.is_integer()) doc["kind"] = "real";
  for (const MarginalTable& m : fam.marginals()) {
    doc["marginals"].push_back(
        {{"vars", ToJson(m.vars)}, {"counts", CountsJson(m.table)}});
  }
  return doc;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {
json ParseJsonFile(const std::string& path) {
  try {
    return json::parse(ReadFile(path));
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}
}  // namespace

ContingencyTable LoadTable(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
    return TableFromCsv(ReadFile(path));
  }
  return TableFromJson(ParseJsonFile(path));
}

MarginalFamily LoadFamily(const std::string& path) {
  return FamilyFromJson(ParseJsonFile(path));
}

CellIndex ParseCell(const std::string& text, const std::vector<int>& cards,
                    const std::vector<std::vector<std::string>>& labels) {
  const std::vector<std::string> tokens = Split(text, ',');
  if (tokens.size() != cards.size()) {
    throw RangeError("cell '" + text + "' needs " +
                     std::to_string(cards.size()) + " coordinates");
  }
  CellIndex cell;
  for (std::size_t axis = 0; axis < tokens.size(); ++axis) {
    const std::string& tok = tokens[axis];
    int index = -1;
    if (!labels.empty()) {
      const auto& names = labels[axis];
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == tok) index = static_cast<int>(i);
      }
    }
    if (index < 0 && !tok.empty() &&
        std::all_of(tok.begin(), tok.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      index = std::stoi(tok);
    }
    if (index < 0 || index >= cards[axis]) {
      throw RangeError("'" + tok + "' is not a category of axis " +
                       std::to_string(axis + 1));
    }
    cell.push_back(index);
  }
  return cell;
}

std::vector<VarSet> ParseVarSetList(const std::string& text, int num_vars) {
  std::vector<VarSet> out;
  if (text.find('{') == std::string::npos) {
    for (const std::string& part : Split(text, '|')) {
      out.push_back(ParseVarSet(part, num_vars));
    }
    return out;
  }
  std::size_t pos = 0;
  while ((pos = text.find('{', pos)) != std::string::npos) {
    const std::size_t close = text.find('}', pos);
    if (close == std::string::npos) {
      throw RangeError("unbalanced braces in '" + text + "'");
    }
    out.push_back(ParseVarSet(text.substr(pos, close - pos + 1), num_vars));
    pos = close + 1;
  }
  return out;
}

json ToJson(VarSet s) {
  json out = json::array();
  for (int v : s.indices()) out.push_back(v + 1);
  return out;
}

json ToJson(const MarginalTable& m) {
  json doc = TableToJson(m.table);
  doc["vars"] = ToJson(m.vars);
  if (m.vars.empty()) doc["total"] = Num(m.table[0]);
  return doc;
}

json ToJson(const Witness& w) {
  json out;
  switch (w.kind) {
    case WitnessKind::kMonotoneViolation:
      out["kind"] = "monotone-violation";
      break;
    case WitnessKind::kSupermodularViolation:
      out["kind"] = "supermodular-violation";
      break;
    case WitnessKind::kMtp2Violation:
      out["kind"] = "mtp2-violation";
      break;
  }
  if (w.kind == WitnessKind::kMtp2Violation) {
    out["cells"] = {CellJson(w.x), CellJson(w.y)};
  } else {
    out["a"] = ToJson(w.a);
    out["b"] = ToJson(w.b);
  }
  out["lhs"] = Num(w.lhs);
  out["rhs"] = Num(w.rhs);
  return out;
}

json ToJson(const BoundReport& r) {
  json out = {{"schema", kSchemaVersion},
              {"cell", CellJson(r.cell)},
              {"formula", r.formula},
              {"lower", Num(r.lower)},
              {"upper", Num(r.upper)},
              {"has_cell_bound", r.has_cell_bound},
              {"raw_lower", Num(r.raw_lower)}};
  if (r.raw_lower_exact) {
    out["raw_lower_exact"] = RationalToString(*r.raw_lower_exact);
  }
  json used = json::array();
  for (VarSet s : r.subsets_used) used.push_back(ToJson(s));
  out["subsets_used"] = used;
  json cands = json::array();
  for (const LowerCandidate& c : r.lower_candidates) {
    json j = {{"terms", TermsJson(c.terms)}, {"value", Num(c.value)}};
    if (c.exact) j["exact"] = RationalToString(*c.exact);
    cands.push_back(j);
  }
  out["lower_candidates"] = cands;
  out["upper_terms"] = TermsJson(r.upper_terms);
  if (!r.components.empty()) out["components"] = r.components;
  return out;
}

json ToJson(const FanBoundReport& r) {
  json out = ToJson(r.report);
  json xs = json::array();
  for (VarSet x : r.xs) xs.push_back(ToJson(x));
  out["xs"] = xs;
  out["p"] = r.p;
  out["lhs"] = Num(r.lhs);
  json terms = json::array();
  for (std::size_t i = 0; i < r.rhs_terms.size(); ++i) {
    const FanTerm& t = r.rhs_terms[i];
    const bool moved = std::find(r.moved_terms.begin(), r.moved_terms.end(),
                                 static_cast<int>(i)) != r.moved_terms.end();
    json j = {{"k", t.k}, {"coefficient", t.coefficient},
              {"set", ToJson(t.set)}, {"moved", moved}};
    if (!moved) j["value"] = Num(t.value);
    terms.push_back(j);
  }
  out["rhs_terms"] = terms;
  out["target_coefficient"] = r.target_coefficient;
  if (r.identity_holds) out["identity_holds"] = *r.identity_holds;
  return out;
}

json ToJson(const FanEvaluation& e) {
  json terms = json::array();
  for (const FanTerm& t : e.rhs_terms) {
    terms.push_back({{"k", t.k}, {"coefficient", t.coefficient},
                     {"set", ToJson(t.set)}, {"value", Num(t.value)}});
  }
  return {{"schema", kSchemaVersion}, {"lhs", Num(e.lhs)},
          {"rhs", Num(e.rhs)}, {"holds", e.lhs <= e.rhs},
          {"rhs_terms", terms}};
}

json ToJson(const KwerelStats& k) {
  return {{"schema", kSchemaVersion},
          {"l", k.num_vars},
          {"d", k.d},
          {"S_d", RationalToString(k.s_d)},
          {"p_full_lower", RationalToString(k.p_full)},
          {"p_full_lower_value", boost::rational_cast<double>(k.p_full)}};
}

json ToJson(const FanDecompositionComparison& c) {
  json out = {{"schema", kSchemaVersion},
              {"decomposition", ToJson(c.decomposition)}};
  out["fan"] = c.fan ? ToJson(*c.fan) : json(nullptr);
  out["fan_separator_form"] =
      c.fan_separator_form ? Num(*c.fan_separator_form) : json(nullptr);
  out["decomposition_dominates_fan"] =
      c.decomposition_dominates_fan ? json(*c.decomposition_dominates_fan)
                                    : json(nullptr);
  out["decomposition_dominates_separator_form"] =
      c.decomposition_dominates_separator_form
          ? json(*c.decomposition_dominates_separator_form)
          : json(nullptr);
  return out;
}

json ToJson(const SharpBounds& s) {
  return {{"schema", kSchemaVersion},
          {"cell", CellJson(s.cell)},
          {"min", s.min_count},
          {"max", s.max_count},
          {"tables_found", s.tables_found},
          {"outcome", OutcomeName(s.outcome)},
          {"sharp", s.sharp()}};
}

json ToJson(const Certification& c) {
  return {{"schema", kSchemaVersion},
          {"sharp", ToJson(c.sharp)},
          {"slack", {Num(c.slack_lower), Num(c.slack_upper)}},
          {"complete", c.complete}};
}

json ToJson(const Relabeling& r) { return {{"perms", r.perms()}}; }

}  // namespace tablebounds::io
