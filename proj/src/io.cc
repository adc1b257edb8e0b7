// Copyright 2026 The cfbounds Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cfbounds/io.h"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cfbounds/errors.h"

namespace cfbounds {
namespace {

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, ',')) parts.push_back(current);
  if (!text.empty() && text.back() == ',') parts.push_back("");
  return parts;
}

const Json& Require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(where + ": missing \"" + key + "\"");
  }
  return obj.at(key);
}

std::vector<std::string> StringList(const Json& value, const std::string& where) {
  if (!value.is_array()) throw ParseError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) throw ParseError(where + ": expected an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<std::size_t> VariableIndices(const CausalModel& model, const Json& value,
                                         const std::string& where) {
  std::vector<std::size_t> out;
  for (const auto& name : StringList(value, where)) out.push_back(model.IndexOf(name));
  return out;
}

std::size_t ClusterIndexOf(const CausalModel& model, const std::vector<std::size_t>& variables,
                           const std::string& where) {
  if (variables.empty()) throw ParseError(where + ": empty variable list");
  const std::size_t c = model.ClusterOf(variables[0]);
  if (model.clusters()[c] != variables) {
    throw ParseError(where + ": variables must name exactly one cluster, in declared order");
  }
  return c;
}

Json RationalString(const Rational& value) { return ToExactString(value); }

}  // namespace

Rational ParseProbabilityValue(const Json& value, const std::string& where) {
  if (value.is_string()) {
    try {
      return ParseRational(value.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (value.is_number_integer()) return Rational(value.get<long long>());
  throw ParseError(where + ": probabilities must be decimal strings such as \"0.32\"");
}

CausalModel ParseModel(const Json& model) {
  if (model.is_string()) {
    if (model.get<std::string>() == "iv-binary") return IvModel();
    throw ParseError("unknown model kind '" + model.get<std::string>() + "'");
  }
  const Json& vars = Require(model, "variables", "model");
  if (!vars.is_array()) throw ParseError("model.variables must be an array");
  std::vector<Variable> variables;
  for (const auto& v : vars) {
    Variable variable;
    const Json& name = Require(v, "name", "model.variables[]");
    if (!name.is_string()) throw ParseError("variable name must be a string");
    variable.name = name.get<std::string>();
    const std::string where = "variable '" + variable.name + "'";
    variable.domain = StringList(Require(v, "domain", where), where + " domain");
    for (const auto& label : variable.domain) {
      if (label.find(',') != std::string::npos) {
        throw ParseError(where + ": value labels may not contain ','");
      }
    }
    if (v.contains("parents")) variable.parents = StringList(v.at("parents"), where + " parents");
    variables.push_back(std::move(variable));
  }
  std::vector<std::vector<std::string>> clusters;
  if (model.contains("clusters")) {
    const Json& cs = model.at("clusters");
    if (!cs.is_array()) throw ParseError("model.clusters must be an array");
    for (const auto& c : cs) clusters.push_back(StringList(c, "model.clusters[]"));
  }
  return CausalModel(std::move(variables), std::move(clusters));
}

namespace {

IvDistribution ParseIv(const Json& doc) {
  const Json& p = Require(doc, "p", "dataset");
  if (!p.is_object()) throw ParseError("dataset.p must be an object");
  std::array<Rational, kIvObservedCount> values;
  std::set<std::string> known;
  for (std::size_t i = 0; i < kIvObservedCount; ++i) {
    const std::string key = IvKey(i);
    known.insert(key);
    values[i] = ParseProbabilityValue(Require(p, key.c_str(), "dataset.p"), "p[" + key + "]");
  }
  for (const auto& [key, _] : p.items()) {
    if (!known.count(key)) throw ParseError("dataset.p: unknown key '" + key + "'");
  }
  const Rational p_z1 = ParseProbabilityValue(Require(doc, "p_z1", "dataset"), "p_z1");
  return IvDistribution::Make(values, p_z1);
}

ObservedConditionals ParseConditionals(const Json& list, const CausalModel& model) {
  if (!list.is_array()) throw ParseError("dataset.conditionals must be an array");
  const auto& clusters = model.clusters();
  std::vector<ConditionalTable> tables(clusters.size());
  std::vector<std::vector<bool>> filled(clusters.size());
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    tables[c].cluster = clusters[c];
    const std::size_t configs = JointValueCount(model, ReducedParents(model, clusters[c]));
    tables[c].columns.assign(configs,
                             std::vector<Rational>(JointValueCount(model, clusters[c]), 0));
    filled[c].assign(configs, false);
  }
  for (const auto& entry : list) {
    const auto vars = VariableIndices(model, Require(entry, "variables", "conditional"),
                                      "conditional.variables");
    const std::size_t c = ClusterIndexOf(model, vars, "conditional");
    const auto reduced = ReducedParents(model, clusters[c]);
    std::map<std::size_t, std::size_t> given;
    if (entry.contains("given")) {
      const Json& g = entry.at("given");
      if (!g.is_object()) throw ParseError("conditional.given must be an object");
      for (const auto& [name, label] : g.items()) {
        if (!label.is_string()) throw ParseError("conditional.given values must be labels");
        const std::size_t var = model.IndexOf(name);
        given[var] = model.ValueIndex(var, label.get<std::string>());
      }
    }
    std::size_t config = 0;
    for (std::size_t parent : reduced) {
      auto it = given.find(parent);
      if (it == given.end()) {
        throw ParseError("conditional for '" + model.variable(vars[0]).name +
                         "' must give a value for '" + model.variable(parent).name + "'");
      }
      config = config * model.domain_size(parent) + it->second;
      given.erase(it);
    }
    if (!given.empty()) {
      throw ParseError("conditional gives '" + model.variable(given.begin()->first).name +
                       "', which is not a reduced parent of the cluster");
    }
    if (filled[c][config]) throw ParseError("duplicate conditional table entry");
    filled[c][config] = true;

    const Json& p = Require(entry, "p", "conditional");
    if (!p.is_object()) throw ParseError("conditional.p must be an object");
    for (const auto& [key, value] : p.items()) {
      const auto labels = SplitCommas(key);
      if (labels.size() != vars.size()) {
        throw ParseError("conditional key '" + key + "' needs " + std::to_string(vars.size()) +
                         " comma-separated labels");
      }
      std::size_t joint = 0;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        joint = joint * model.domain_size(vars[i]) + model.ValueIndex(vars[i], labels[i]);
      }
      tables[c].columns[config][joint] = ParseProbabilityValue(value, "p[" + key + "]");
    }
  }
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (std::size_t g = 0; g < filled[c].size(); ++g) {
      if (!filled[c][g]) {
        throw ParseError("missing conditional table for cluster containing '" +
                         model.variable(clusters[c][0]).name + "'");
      }
    }
  }
  return ObservedConditionals(model, std::move(tables));
}

}  // namespace

Dataset ParseDataset(const Json& doc) {
  if (!doc.is_object()) throw ParseError("dataset must be a JSON object");
  const std::string name =
      doc.contains("name") && doc.at("name").is_string() ? doc.at("name").get<std::string>() : "";
  const Json& model_json = Require(doc, "model", "dataset");
  if (model_json.is_string() && model_json.get<std::string>() == "iv-binary") {
    IvDistribution iv = ParseIv(doc);
    CausalModel model = IvModel();
    ObservedConditionals observed = IvObservedConditionals(model, iv);
    return Dataset{name, std::move(model), std::move(observed), std::move(iv)};
  }
  CausalModel model = ParseModel(model_json);
  ObservedConditionals observed =
      ParseConditionals(Require(doc, "conditionals", "dataset"), model);
  return Dataset{name, std::move(model), std::move(observed), std::nullopt};
}

Json IvDatasetJson(const std::string& name, const IvDistribution& dist) {
  Json doc;
  doc["name"] = name;
  doc["model"] = "iv-binary";
  doc["p_z1"] = RationalString(dist.p_z1);
  Json p = Json::object();
  for (std::size_t i = 0; i < kIvObservedCount; ++i) p[IvKey(i)] = RationalString(dist.p[i]);
  doc["p"] = std::move(p);
  return doc;
}

Json DatasetToJson(const Dataset& dataset) {
  if (dataset.iv) return IvDatasetJson(dataset.name, *dataset.iv);
  const CausalModel& model = dataset.model;
  Json doc;
  doc["name"] = dataset.name;
  Json vars = Json::array();
  for (const auto& v : model.variables()) {
    vars.push_back({{"name", v.name}, {"domain", v.domain}, {"parents", v.parents}});
  }
  Json clusters = Json::array();
  for (const auto& c : model.clusters()) {
    Json names = Json::array();
    for (std::size_t v : c) names.push_back(model.variable(v).name);
    clusters.push_back(std::move(names));
  }
  doc["model"] = {{"variables", std::move(vars)}, {"clusters", std::move(clusters)}};
  Json conditionals = Json::array();
  for (std::size_t c = 0; c < model.clusters().size(); ++c) {
    const ConditionalTable& table = dataset.observed.table(c);
    const auto reduced = ReducedParents(model, table.cluster);
    Json names = Json::array();
    for (std::size_t v : table.cluster) names.push_back(model.variable(v).name);
    for (std::size_t g = 0; g < table.columns.size(); ++g) {
      Json given = Json::object();
      const auto config = JointValues(model, reduced, g);
      for (std::size_t i = 0; i < reduced.size(); ++i) {
        given[model.variable(reduced[i]).name] = model.variable(reduced[i]).domain[config[i]];
      }
      Json p = Json::object();
      for (std::size_t v = 0; v < table.columns[g].size(); ++v) {
        const auto values = JointValues(model, table.cluster, v);
        std::string key;
        for (std::size_t i = 0; i < values.size(); ++i) {
          if (i > 0) key += ",";
          key += model.variable(table.cluster[i]).domain[values[i]];
        }
        p[key] = RationalString(table.columns[g][v]);
      }
      conditionals.push_back({{"variables", names}, {"given", std::move(given)}, {"p", std::move(p)}});
    }
  }
  doc["conditionals"] = std::move(conditionals);
  return doc;
}

ResponsePrior ParsePrior(const Json& doc, const CausalModel& model) {
  const Json& list = Require(doc, "priors", "prior file");
  if (!list.is_array()) throw ParseError("priors must be an array");
  std::vector<JointResponseDistribution> distributions;
  for (const auto& entry : list) {
    JointResponseDistribution d;
    d.variables = VariableIndices(model, Require(entry, "variables", "prior"), "prior.variables");
    const std::uint64_t cells = ClusterCellCount(model, d.variables);
    d.probabilities.assign(cells, 0);
    const Json& p = Require(entry, "p", "prior");
    if (!p.is_object()) throw ParseError("prior.p must be an object");
    for (const auto& [key, value] : p.items()) {
      const auto parts = SplitCommas(key);
      if (parts.size() != d.variables.size()) {
        throw ParseError("prior key '" + key + "' needs one response index per variable");
      }
      std::uint64_t cell = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::uint64_t count = model.responses(d.variables[i]).count();
        std::uint64_t r = 0;
        try {
          r = std::stoull(parts[i]);
        } catch (const std::exception&) {
          throw ParseError("prior key '" + key + "' is not a list of response indices");
        }
        if (r >= count) throw ParseError("prior key '" + key + "' out of range");
        cell = cell * count + r;
      }
      d.probabilities[cell] = ParseProbabilityValue(value, "prior[" + key + "]");
    }
    distributions.push_back(std::move(d));
  }
  return ResponsePrior(model, std::move(distributions));
}

std::vector<SubjectiveConstraint> ParseSubjective(const Json& doc, const CausalModel& model) {
  const Json& list = Require(doc, "constraints", "constraint file");
  if (!list.is_array()) throw ParseError("constraints must be an array");
  std::vector<SubjectiveConstraint> out;
  for (const auto& entry : list) {
    SubjectiveConstraint constraint;
    const Json& terms = Require(entry, "terms", "constraint");
    if (!terms.is_array() || terms.empty()) throw ParseError("constraint.terms must be a non-empty array");
    for (const auto& t : terms) {
      SubjectiveTerm term;
      const Json& r = Require(t, "r", "constraint term");
      if (!r.is_object()) throw ParseError("constraint term r must be an object");
      for (const auto& [name, index] : r.items()) {
        if (!index.is_number_unsigned()) {
          throw ParseError("response index for '" + name + "' must be a non-negative integer");
        }
        term.responses[model.IndexOf(name)] = index.get<std::uint64_t>();
      }
      term.coefficient = t.contains("coef") ? ParseProbabilityValue(t.at("coef"), "coef") : Rational(1);
      constraint.terms.push_back(std::move(term));
    }
    const std::string sense =
        entry.contains("sense") ? entry.at("sense").get<std::string>() : std::string("=");
    if (sense == "=" || sense == "==") {
      constraint.sense = RowSense::kEqual;
    } else if (sense == "<=") {
      constraint.sense = RowSense::kLessEqual;
    } else if (sense == ">=") {
      constraint.sense = RowSense::kGreaterEqual;
    } else {
      throw ParseError("constraint sense must be =, <= or >=");
    }
    constraint.rhs = ParseProbabilityValue(Require(entry, "rhs", "constraint"), "rhs");
    if (entry.contains("label")) constraint.label = entry.at("label").get<std::string>();
    SubjectiveCluster(model, constraint);
    out.push_back(std::move(constraint));
  }
  return out;
}

std::vector<Rational> ParseQ(const Json& doc) {
  const Json& q = Require(doc, "q", "q file");
  if (!q.is_object()) throw ParseError("q must be an object");
  std::vector<Rational> out(kIvCellCount, 0);
  for (const auto& [key, value] : q.items()) {
    std::string k = key;
    if (k.size() == 3 && k[0] == 'q') k = k.substr(1);
    if (k.size() != 2 || k[0] < '0' || k[0] > '3' || k[1] < '0' || k[1] > '3') {
      throw ParseError("q key '" + key + "' must be jk with j, k in 0..3");
    }
    out[static_cast<std::size_t>(4 * (k[0] - '0') + (k[1] - '0'))] =
        ParseProbabilityValue(value, "q[" + key + "]");
  }
  for (const auto& v : out) {
    if (v < 0 || v > 1) throw InvalidArgumentError("q entries must lie in [0, 1]");
  }
  NormalizeColumn(out, "q");
  return out;
}

Json QToJson(const std::vector<Rational>& q) {
  Json cells = Json::object();
  for (std::size_t c = 0; c < q.size(); ++c) {
    cells[std::to_string(c / 4) + std::to_string(c % 4)] = RationalString(q[c]);
  }
  return Json{{"q", std::move(cells)}};
}

std::vector<std::string> BuiltinDatasetNames() { return {"peptaid", "party"}; }

std::optional<Json> BuiltinDatasetJson(const std::string& name) {
  if (name == "peptaid") {
    return Json::parse(R"({
      "name": "peptaid",
      "model": "iv-binary",
      "p_z1": "0.1",
      "p": {
        "00.0": "0.32", "01.0": "0.32", "10.0": "0.04", "11.0": "0.32",
        "00.1": "0.02", "01.1": "0.17", "10.1": "0.67", "11.1": "0.14"
      }
    })");
  }
  if (name == "party") {
    // P(a1) is not part of the story; any positive value gives the same
    // counterfactual bounds.
    return Json::parse(R"({
      "name": "party",
      "model": {
        "variables": [
          { "name": "A", "domain": ["a0", "a1"], "parents": [] },
          { "name": "B", "domain": ["b0", "b1"], "parents": ["A"] }
        ],
        "clusters": [["A"], ["B"]]
      },
      "conditionals": [
        { "variables": ["A"], "given": {}, "p": { "a0": "0.5", "a1": "0.5" } },
        { "variables": ["B"], "given": { "A": "a0" }, "p": { "b0": "0.9", "b1": "0.1" } },
        { "variables": ["B"], "given": { "A": "a1" }, "p": { "b0": "0.1", "b1": "0.9" } }
      ]
    })");
  }
  return std::nullopt;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

Dataset LoadDataset(const std::string& name_or_path) {
  if (auto builtin = BuiltinDatasetJson(name_or_path)) return ParseDataset(*builtin);
  return ParseDataset(ReadJsonFile(name_or_path));
}

}  // namespace cfbounds
