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

// tablebounds: bounds and lattice checks for contingency tables.
//
//   tablebounds marginalize TABLE --vars 1,2
//   tablebounds release TABLE --subsets '{1}|{2}'
//   tablebounds bounds FAMILY --cell Poor,Low --method simple
//   tablebounds check TABLE --property mtp2-additive --relabel
//   tablebounds oracle FAMILY --cell 0,0 --certify simple
//   tablebounds expfam TABLE --anchors 0,0 --theta 0.5 --action density
//   tablebounds fan TABLE --anchor 0,0 --xs '{1},{2}' --p 1
//
// Every command prints one JSON document on stdout. Exit codes: 0 success,
// 1 property failure, 2 schema, 3 range, 4 missing marginal, 5 budget.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "tablebounds/bounds.hpp"
#include "tablebounds/error.hpp"
#include "tablebounds/io.hpp"
#include "tablebounds/lattice_function.hpp"
#include "tablebounds/oracle.hpp"
#include "tablebounds/positivity.hpp"
#include "tablebounds/table.hpp"

namespace tb = tablebounds;
using tb::io::json;

namespace {

constexpr int kPropertyFailed = 1;

void Emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::vector<double> ParseNumbers(const std::string& text) {
  std::vector<double> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      out.push_back(std::stod(cur));
    } catch (const std::exception&) {
      throw tb::RangeError("'" + cur + "' is not a number");
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

json LabelledCell(const tb::CellIndex& cell,
                  const std::vector<std::vector<std::string>>& labels) {
  if (labels.empty()) return nullptr;
  json names = json::array();
  for (std::size_t axis = 0; axis < cell.size(); ++axis) {
    names.push_back(labels[axis][cell[axis]]);
  }
  return names;
}

std::string After(const std::string& s, const std::string& prefix) {
  return s.substr(prefix.size());
}

bool StartsWith(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

// ---- marginalize / release ----

int RunMarginalize(const std::string& path, const std::string& vars) {
  const tb::ContingencyTable table = tb::io::LoadTable(path);
  const tb::VarSet a = tb::ParseVarSet(vars, table.num_vars());
  Emit(tb::io::ToJson(tb::Marginalize(table, a)));
  return 0;
}

int RunRelease(const std::string& path, const std::string& subsets) {
  const tb::ContingencyTable table = tb::io::LoadTable(path);
  const auto sets = tb::io::ParseVarSetList(subsets, table.num_vars());
  Emit(tb::io::FamilyToJson(tb::MarginalFamily::FromTable(table, sets)));
  return 0;
}

// ---- bounds ----

// "{1,2}|{1,3},1": the order p follows the last closing brace.
std::pair<std::vector<tb::VarSet>, int> ParseFanMethod(const std::string& text,
                                                       int l) {
  const std::size_t close = text.rfind('}');
  const std::size_t comma =
      close == std::string::npos ? std::string::npos : text.find(',', close);
  if (comma == std::string::npos) {
    throw tb::RangeError("fan method needs the form fan:{..}|{..},p");
  }
  return {tb::io::ParseVarSetList(text.substr(0, comma), l),
          std::stoi(text.substr(comma + 1))};
}


json BoundsFor(const tb::MarginalFamily& fam, const tb::CellIndex& cell,
               const std::string& method) {
  const int l = fam.num_vars();
  if (method == "simple") return tb::io::ToJson(tb::SimpleFrechet(fam, cell));
  if (method == "3way" || method == "3way:one") {
    return tb::io::ToJson(
        tb::Frechet3Way(fam, cell, tb::ThreeWayBasis::kOneDim));
  }
  if (method == "3way:two") {
    return tb::io::ToJson(
        tb::Frechet3Way(fam, cell, tb::ThreeWayBasis::kTwoDim));
  }
  if (StartsWith(method, "ddim:")) {
    return tb::io::ToJson(
        tb::FrechetDDim(fam, cell, std::stoi(After(method, "ddim:"))));
  }
  if (StartsWith(method, "kwerel:")) {
    return tb::io::ToJson(
        tb::KwerelForm(fam, cell, std::stoi(After(method, "kwerel:"))));
  }
  if (StartsWith(method, "decomp:")) {
    const tb::Decomposition decomp(
        tb::io::ParseVarSetList(After(method, "decomp:"), l), l);
    return tb::io::ToJson(tb::DecompositionBound(fam, decomp, cell));
  }
  if (StartsWith(method, "compare:")) {
    const tb::Decomposition decomp(
        tb::io::ParseVarSetList(After(method, "compare:"), l), l);
    return tb::io::ToJson(tb::CompareFanVsDecomposition(fam, decomp, cell));
  }
  if (StartsWith(method, "fan:")) {
    const auto [xs, p] = ParseFanMethod(After(method, "fan:"), l);
    return tb::io::ToJson(tb::FanLowerBound(fam, cell, xs, p));
  }
  if (method == "best") return tb::io::ToJson(tb::BestBounds(fam, cell));
  throw tb::RangeError("unknown method '" + method + "'");
}

// The plain bound report behind a method, for certification.
tb::BoundReport ReportFor(const tb::MarginalFamily& fam,
                          const tb::CellIndex& cell, const std::string& method) {
  const int l = fam.num_vars();
  if (method == "simple") return tb::SimpleFrechet(fam, cell);
  if (method == "3way" || method == "3way:one") {
    return tb::Frechet3Way(fam, cell, tb::ThreeWayBasis::kOneDim);
  }
  if (method == "3way:two") {
    return tb::Frechet3Way(fam, cell, tb::ThreeWayBasis::kTwoDim);
  }
  if (StartsWith(method, "ddim:")) {
    return tb::FrechetDDim(fam, cell, std::stoi(After(method, "ddim:")));
  }
  if (StartsWith(method, "decomp:")) {
    const tb::Decomposition decomp(
        tb::io::ParseVarSetList(After(method, "decomp:"), l), l);
    return tb::DecompositionBound(fam, decomp, cell);
  }
  if (StartsWith(method, "fan:")) {
    const auto [xs, p] = ParseFanMethod(After(method, "fan:"), l);
    return tb::FanLowerBound(fam, cell, xs, p).report;
  }
  if (method == "best") return tb::BestBounds(fam, cell);
  throw tb::RangeError("method '" + method + "' cannot be certified");
}

int RunBounds(const std::string& path, const std::string& cell_text,
              const std::string& method) {
  const tb::MarginalFamily fam = tb::io::LoadFamily(path);
  const tb::CellIndex cell =
      tb::io::ParseCell(cell_text, fam.cardinalities(), fam.labels());
  json out = BoundsFor(fam, cell, method);
  if (!fam.labels().empty()) out["cell_labels"] = LabelledCell(cell, fam.labels());
  Emit(out);
  return 0;
}

// ---- check ----

tb::LatticeFunction BinaryTableAsLattice(const tb::ContingencyTable& table) {
  for (int c : table.cardinalities()) {
    if (c != 2) {
      throw tb::RangeError(
          "log-supermodular check needs a binary table (every axis of size 2)");
    }
  }
  const int l = table.num_vars();
  std::vector<double> values(std::size_t{1} << l);
  tb::ForEachCell(table.cardinalities(),
                  [&](const tb::CellIndex& x, std::size_t flat) {
                    std::uint32_t m = 0;
                    for (int axis = 0; axis < l; ++axis) {
                      if (x[axis] == 1) m |= 1u << axis;
                    }
                    values[m] = table[flat];
                  });
  return tb::LatticeFunction(l, std::move(values));
}

int RunCheck(const std::string& path, const std::string& property,
             const std::string& anchor_text, bool relabel,
             const std::string& mode_text) {
  const tb::ContingencyTable table = tb::io::LoadTable(path);
  json out = {{"schema", tb::io::kSchemaVersion}, {"property", property}};
  tb::CheckResult result;

  if (property == "mtp2-additive" || property == "mtp2-multiplicative") {
    const bool additive = property == "mtp2-additive";
    const tb::Mtp2Mode mode =
        mode_text == "local" ? tb::Mtp2Mode::kLocal : tb::Mtp2Mode::kExhaustive;
    auto check = [&](const tb::ContingencyTable& t) {
      return additive ? tb::IsMtp2Additive(t, mode)
                      : tb::IsMtp2Multiplicative(t, mode);
    };
    result = check(table);
    if (result.witness) out["witness"] = tb::io::ToJson(*result.witness);
    if (!result.holds && relabel) {
      const auto found = tb::SearchMtp2Relabeling(
          table, additive ? tb::Mtp2Criterion::kAdditive
                          : tb::Mtp2Criterion::kMultiplicative);
      if (found) {
        result = check(found->Apply(table));
        out["relabeling"] = tb::io::ToJson(*found);
        out["relabeled_table"] = tb::io::TableToJson(found->Apply(table));
      } else {
        out["relabeling"] = nullptr;
      }
    }
  } else if (property == "log-supermodular") {
    result = tb::IsLogSupermodular(BinaryTableAsLattice(table),
                                   mode_text == "exhaustive"
                                       ? tb::SupermodularMode::kExhaustive
                                       : tb::SupermodularMode::kLocal);
    if (result.witness) out["witness"] = tb::io::ToJson(*result.witness);
  } else if (property == "decreasing" || property == "supermodular") {
    // Every anchor unless one is given.
    std::vector<tb::CellIndex> anchors;
    if (!anchor_text.empty()) {
      anchors.push_back(tb::io::ParseCell(anchor_text, table.cardinalities(),
                                          table.labels()));
    } else {
      tb::ForEachCell(table.cardinalities(),
                      [&](const tb::CellIndex& x, std::size_t) {
                        anchors.push_back(x);
                      });
    }
    for (const tb::CellIndex& anchor : anchors) {
      const tb::LatticeFunction f = tb::CellMarginFunction(table, anchor);
      result = property == "decreasing"
                   ? tb::IsDecreasing(f)
                   : tb::IsSupermodular(f, mode_text == "exhaustive"
                                               ? tb::SupermodularMode::kExhaustive
                                               : tb::SupermodularMode::kLocal);
      if (!result.holds) {
        out["anchor"] = anchor;
        out["witness"] = tb::io::ToJson(*result.witness);
        break;
      }
    }
    out["anchors_checked"] = anchors.size();
  } else {
    throw tb::RangeError("unknown property '" + property + "'");
  }
  out["holds"] = result.holds;
  Emit(out);
  return result.holds ? 0 : kPropertyFailed;
}

// ---- oracle ----

int RunOracle(const std::string& path, const std::string& cell_text,
              std::int64_t budget_nodes, std::int64_t budget_tables,
              const std::string& certify, bool require_complete) {
  const tb::MarginalFamily fam = tb::io::LoadFamily(path);
  tb::EnumerationBudget budget;
  budget.max_nodes = budget_nodes;
  budget.max_tables = budget_tables;

  if (cell_text.empty()) {
    if (!certify.empty()) throw tb::RangeError("--certify needs --cell");
    const auto all = tb::ComputeAllSharpBounds(fam, budget);
    json cells = json::array();
    for (const auto& s : all) cells.push_back(tb::io::ToJson(s));
    Emit({{"schema", tb::io::kSchemaVersion}, {"cells", cells}});
    const bool complete =
        all.empty() || all.front().outcome == tb::EnumerationOutcome::kComplete;
    return (require_complete && !complete) ? 5 : 0;
  }
  const tb::CellIndex cell =
      tb::io::ParseCell(cell_text, fam.cardinalities(), fam.labels());
  if (certify.empty()) {
    const tb::SharpBounds s = tb::ComputeSharpBounds(fam, cell, budget);
    Emit(tb::io::ToJson(s));
    return (require_complete && s.outcome != tb::EnumerationOutcome::kComplete)
               ? 5
               : 0;
  }
  const tb::BoundReport r = ReportFor(fam, cell, certify);
  const json report = tb::io::ToJson(r);
  try {
    const tb::Certification c = tb::Certify(r, fam, budget);
    json out = tb::io::ToJson(c);
    out["report"] = report;
    Emit(out);
    return c.complete ? 0 : 5;
  } catch (const tb::CertificationFailure& e) {
    Emit({{"schema", tb::io::kSchemaVersion},
          {"violation", e.what()},
          {"table", tb::io::TableToJson(e.table())},
          {"report", report}});
    return kPropertyFailed;
  }
}

// ---- expfam / fan ----

std::vector<tb::CellIndex> ParseAnchors(const std::string& text,
                                        const tb::ContingencyTable& table) {
  std::vector<tb::CellIndex> out;
  std::string cur;
  for (char c : text + ";") {
    if (c == ';') {
      if (!cur.empty()) {
        out.push_back(
            tb::io::ParseCell(cur, table.cardinalities(), table.labels()));
      }
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

int RunExpFam(const std::string& path, const std::string& anchors_text,
              const std::string& theta_text, const std::string& alpha_text,
              const std::string& theta2_text, const std::string& action) {
  const tb::ContingencyTable table = tb::io::LoadTable(path);
  tb::ExpFamily family;
  family.anchors = ParseAnchors(anchors_text, table);
  family.theta = ParseNumbers(theta_text);
  if (family.anchors.empty()) throw tb::RangeError("--anchors is required");
  if (family.theta.size() == 1 && family.anchors.size() > 1) {
    family.theta.assign(family.anchors.size(), family.theta.front());
  }
  if (!alpha_text.empty()) {
    family.alpha = tb::ParseVarSet(alpha_text, table.num_vars());
    family.theta2 = ParseNumbers(theta2_text);
    if (family.theta2.size() == 1 && family.anchors.size() > 1) {
      family.theta2.assign(family.anchors.size(), family.theta2.front());
    }
  }
  const tb::ExpFamilyDensity density =
      tb::ComputeExpFamilyDensity(family, table);
  json out = {{"schema", tb::io::kSchemaVersion},
              {"log_norm", density.log_norm}};

  if (action == "density") {
    json rows = json::array();
    double total = 0;
    for (std::size_t m = 0; m < density.mu.size(); ++m) {
      const tb::VarSet a(static_cast<std::uint32_t>(m));
      rows.push_back({{"set", tb::io::ToJson(a)}, {"mu", density.mu(a)}});
      total += density.mu(a);
    }
    const tb::CheckResult lsm = tb::IsLogSupermodular(density);
    out["density"] = rows;
    out["total"] = total;
    out["is_log_supermodular"] = lsm.holds;
    if (lsm.witness) out["witness"] = tb::io::ToJson(*lsm.witness);
    Emit(out);
    return lsm.holds ? 0 : kPropertyFailed;
  }
  if (StartsWith(action, "fkg:")) {
    const auto sets = tb::io::ParseVarSetList(After(action, "fkg:"),
                                              table.num_vars());
    if (sets.size() != 2) throw tb::RangeError("fkg needs two sets: fkg:{..},{..}");
    const auto [h1, h2] =
        tb::FkgMarginPair(table, family.anchors.front(), sets[0], sets[1]);
    const double cov = tb::FkgCovariance(density.mu, h1, h2);
    out["alpha"] = tb::io::ToJson(sets[0]);
    out["beta"] = tb::io::ToJson(sets[1]);
    out["covariance"] = cov;
    out["nonnegative"] = cov >= -1e-12;
    Emit(out);
    return cov >= -1e-12 ? 0 : kPropertyFailed;
  }
  throw tb::RangeError("unknown action '" + action + "'");
}

int RunFan(const std::string& path, const std::string& anchor_text,
           const std::string& xs_text, int p, const std::string& form) {
  const tb::ContingencyTable table = tb::io::LoadTable(path);
  const tb::CellIndex anchor =
      tb::io::ParseCell(anchor_text, table.cardinalities(), table.labels());
  const auto xs = tb::io::ParseVarSetList(xs_text, table.num_vars());
  const tb::LatticeFunction f = tb::CellMarginFunction(table, anchor);
  const tb::FanEvaluation e = tb::FanEvaluate(
      f, xs, p, form == "dual" ? tb::FanForm::kDual : tb::FanForm::kPrimal);
  json out = tb::io::ToJson(e);
  out["form"] = form;
  Emit(out);
  return e.lhs <= e.rhs ? 0 : kPropertyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frechet-type bounds and lattice checks for contingency tables"};
  app.require_subcommand(1);

  std::string path, vars, subsets, cell, method = "best", property, anchor,
      mode = "exhaustive", certify, anchors, theta = "0", alpha, theta2,
      action = "density", xs, form = "primal";
  bool relabel = false, require_complete = false;
  std::int64_t budget_nodes = tb::EnumerationBudget{}.max_nodes;
  std::int64_t budget_tables = tb::EnumerationBudget{}.max_tables;
  int p = 1;

  auto* marginalize = app.add_subcommand("marginalize", "Marginal table n(a)");
  marginalize->add_option("table", path, "Table file (JSON or 2-way CSV)")->required();
  marginalize->add_option("--vars", vars, "1-based variables, e.g. 1,3 (empty = total)");

  auto* release = app.add_subcommand("release", "Family file from a table");
  release->add_option("table", path, "Table file")->required();
  release->add_option("--subsets", subsets, "Released subsets, e.g. {1}|{2}")->required();

  auto* bounds = app.add_subcommand("bounds", "Cell bounds from released marginals");
  bounds->add_option("family", path, "Family file")->required();
  bounds->add_option("--cell", cell, "Target cell (labels or 0-based indices)")->required();
  bounds->add_option("--method", method,
                     "simple|3way[:one|:two]|ddim:<d>|kwerel:<d>|decomp:<cover>|"
                     "fan:<xs>,<p>|compare:<cover>|best");

  auto* check = app.add_subcommand("check", "Lattice and positivity properties");
  check->add_option("table", path, "Table file")->required();
  check->add_option("--property", property,
                    "decreasing|supermodular|mtp2-additive|mtp2-multiplicative|"
                    "log-supermodular")->required();
  check->add_option("--anchor", anchor, "Anchor cell for decreasing/supermodular");
  check->add_flag("--relabel", relabel, "Search for an MTP2 relabeling on failure");
  check->add_option("--mode", mode, "exhaustive|local");

  auto* oracle = app.add_subcommand("oracle", "Exact enumeration of consistent tables");
  oracle->add_option("family", path, "Family file")->required();
  oracle->add_option("--cell", cell, "Target cell (all cells when omitted)");
  oracle->add_option("--budget", budget_nodes, "Maximum search nodes");
  oracle->add_option("--max-tables", budget_tables, "Maximum tables enumerated");
  oracle->add_option("--certify", certify, "Bound method to certify");
  oracle->add_flag("--require-complete", require_complete,
                   "Exit 5 if the budget runs out");

  auto* expfam = app.add_subcommand("expfam", "Exponential-family density on 2^L");
  expfam->add_option("table", path, "Table file")->required();
  expfam->add_option("--anchors", anchors, "Anchor cells separated by ';'")->required();
  expfam->add_option("--theta", theta, "Comma-separated nonnegative parameters");
  expfam->add_option("--alpha", alpha, "Interaction set, e.g. {1}");
  expfam->add_option("--theta2", theta2, "Interaction parameters");
  expfam->add_option("--action", action, "density|fkg:<alpha>,<beta>");

  auto* fan = app.add_subcommand("fan", "Evaluate Fan's inequality on a cell-margin function");
  fan->add_option("table", path, "Table file")->required();
  fan->add_option("--anchor", anchor, "Anchor cell")->required();
  fan->add_option("--xs", xs, "Sequence of sets, e.g. {1},{2}")->required();
  fan->add_option("--p", p, "Order p");
  fan->add_option("--form", form, "primal|dual");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(tb::ErrorKind::kSchema);
  }

  try {
    if (*marginalize) return RunMarginalize(path, vars);
    if (*release) return RunRelease(path, subsets);
    if (*bounds) return RunBounds(path, cell, method);
    if (*check) return RunCheck(path, property, anchor, relabel, mode);
    if (*oracle) {
      return RunOracle(path, cell, budget_nodes, budget_tables, certify,
                       require_complete);
    }
    if (*expfam) return RunExpFam(path, anchors, theta, alpha, theta2, action);
    if (*fan) return RunFan(path, anchor, xs, p, form);
  } catch (const tb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(tb::ErrorKind::kRange);
  }
  return 0;
}
