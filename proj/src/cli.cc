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

#include "cfbounds/cli.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cfbounds/bounds.h"
#include "cfbounds/errors.h"
#include "cfbounds/io.h"
#include "cfbounds/synth.h"

namespace cfbounds {
namespace {

struct GlobalOptions {
  bool json = false;
  int precision = 2;
  std::string method = "lp";
};

// Thrown when --method both finds a closed form and the LP disagreeing.
class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string Lower(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return text;
}

std::size_t FindVariable(const CausalModel& model, const std::string& name) {
  for (std::size_t v = 0; v < model.size(); ++v) {
    if (model.variable(v).name == name) return v;
  }
  for (std::size_t v = 0; v < model.size(); ++v) {
    if (Lower(model.variable(v).name) == Lower(name)) return v;
  }
  throw ParseError("unknown variable '" + name + "'");
}

std::size_t FindValue(const CausalModel& model, std::size_t var, const std::string& text) {
  const auto& domain = model.variable(var).domain;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (domain[i] == text) return i;
  }
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (Lower(domain[i]) == Lower(text)) return i;
  }
  if (!text.empty() && std::all_of(text.begin(), text.end(),
                                   [](unsigned char c) { return std::isdigit(c); })) {
    const std::size_t index = std::stoul(text);
    if (index < domain.size()) return index;
  }
  throw ParseError("'" + text + "' is not a value of " + model.variable(var).name);
}

// "z=1,d=d1,Y=y1": names are case-insensitive, values are labels or indices.
PartialAssignment ParseAssignment(const CausalModel& model, const std::string& text) {
  PartialAssignment out;
  if (text.empty()) return out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected name=value, got '" + item + "'");
    const std::size_t var = FindVariable(model, item.substr(0, eq));
    const std::size_t value = FindValue(model, var, item.substr(eq + 1));
    auto [it, inserted] = out.emplace(var, value);
    if (!inserted && it->second != value) {
      throw ParseError("conflicting values for " + model.variable(var).name);
    }
  }
  return out;
}

std::string Join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string Starred(const CausalModel& model, const PartialAssignment& a) {
  std::vector<std::string> parts;
  for (const auto& [var, value] : a) {
    parts.push_back(model.variable(var).name + "=" + model.variable(var).domain[value] + "*");
  }
  return Join(parts, ", ");
}

std::string QueryText(const CausalModel& model, const CounterfactualQuery& q) {
  std::string text = "P(" + Starred(model, q.consequent);
  std::vector<std::string> conditions;
  if (!q.intervention.empty()) conditions.push_back("do(" + model.Describe(q.intervention) + ")");
  if (!q.observations.empty()) conditions.push_back(model.Describe(q.observations));
  if (!conditions.empty()) text += " | " + Join(conditions, ", ");
  return text + ")";
}

std::string AceText(const CausalModel& model, const CounterfactualQuery& q) {
  std::string text =
      "ACE(" + model.variable(*q.treatment).name + "→" + model.variable(*q.response).name;
  if (!q.observations.empty()) {
    std::vector<std::string> labels;
    for (const auto& [var, value] : q.observations) {
      labels.push_back(model.variable(var).domain[value]);
    }
    text += " | " + Join(labels, ", ");
  }
  return text + ")";
}

Json ValueJson(const Rational& v, int precision) {
  return Json{{"decimal", ToDecimalString(v, precision)}, {"exact", ToFractionString(v)}};
}

std::string WitnessText(const std::vector<std::string>& names, const std::vector<Rational>& w) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 0) parts.push_back("P(" + names[i] + ")=" + ToFractionString(w[i]));
  }
  return Join(parts, ", ");
}

Json WitnessJson(const std::vector<std::string>& names, const std::vector<Rational>& w) {
  Json out = Json::object();
  for (std::size_t i = 0; i < w.size(); ++i) out[names[i]] = ToFractionString(w[i]);
  return out;
}

Json BoundsJson(const BoundsResult& r, int precision) {
  Json out;
  out["method"] = ToString(r.method);
  out["lower"] = ValueJson(r.lower, precision);
  out["upper"] = ValueJson(r.upper, precision);
  if (r.method == Method::kLp) {
    out["lower_witness"] = WitnessJson(r.parameters, r.lower_witness);
    out["upper_witness"] = WitnessJson(r.parameters, r.upper_witness);
  } else {
    out["lower_term"] = r.lower_term;
    out["upper_term"] = r.upper_term;
  }
  return out;
}

void PrintDetails(std::ostream& out, const BoundsResult& r) {
  if (r.method == Method::kLp) {
    out << "lower witness: " << WitnessText(r.parameters, r.lower_witness) << "\n";
    out << "upper witness: " << WitnessText(r.parameters, r.upper_witness) << "\n";
  } else {
    out << "lower term: " << r.lower_term << "\n";
    out << "upper term: " << r.upper_term << "\n";
  }
}

enum class Style { kInequality, kInterval };

// Runs the requested method(s) and prints the report.
void Report(std::ostream& out, const GlobalOptions& g, const std::string& dataset,
            const std::string& label, Style style,
            const std::function<BoundsResult()>& lp,
            const std::function<BoundsResult()>& symbolic) {
  std::vector<BoundsResult> results;
  if (g.method == "lp" || g.method == "both") results.push_back(lp());
  if (g.method == "symbolic" || g.method == "both") results.push_back(symbolic());
  const bool agree = results.size() < 2 || (results[0].lower == results[1].lower &&
                                            results[0].upper == results[1].upper);
  const BoundsResult& main = results.front();

  if (g.json) {
    Json doc;
    doc["dataset"] = dataset;
    doc["query"] = label;
    doc["method"] = g.method;
    doc["lower"] = ValueJson(main.lower, g.precision);
    doc["upper"] = ValueJson(main.upper, g.precision);
    Json runs = Json::array();
    for (const auto& r : results) runs.push_back(BoundsJson(r, g.precision));
    doc["results"] = std::move(runs);
    if (results.size() > 1) doc["agree"] = agree;
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      const std::string lo = ToDecimalString(r.lower, g.precision);
      const std::string hi = ToDecimalString(r.upper, g.precision);
      if (style == Style::kInequality) {
        out << lo << " ≤ " << label << " ≤ " << hi << "\n";
      } else {
        out << label << " ∈ [" << lo << ", " << hi << "]\n";
      }
      out << "exact: [" << ToFractionString(r.lower) << ", " << ToFractionString(r.upper)
          << "]\n";
      out << "method: " << ToString(r.method) << "\n";
      PrintDetails(out, r);
    }
    if (results.size() > 1 && agree) out << "lp and symbolic agree: yes\n";
  }
  if (!agree) throw CheckFailed("lp and symbolic bounds disagree for " + label);
}

const IvDistribution& RequireIv(const Dataset& d, const char* what) {
  if (!d.iv) throw ScopeError(std::string(what) + " needs the binary instrumental-variable model");
  return *d.iv;
}

std::vector<SubjectiveConstraint> LoadConstraints(const std::string& path,
                                                  const CausalModel& model) {
  if (path.empty()) return {};
  return ParseSubjective(ReadJsonFile(path), model);
}

bool IsPlaintiffEvidence(const PartialAssignment& o) {
  return o == PartialAssignment{{0, 1}, {1, 1}, {2, 1}};
}

// ---------------------------------------------------------------------------

struct AceArgs {
  std::string dataset;
  std::string treatment;
  std::string response;
  std::string given;
  std::string constraints;
};

int RunAce(const AceArgs& a, const GlobalOptions& g, std::ostream& out) {
  const Dataset d = LoadDataset(a.dataset);
  const CausalModel& model = d.model;
  CounterfactualQuery q;
  if (a.treatment.empty() && !d.iv) throw ParseError("--treatment is required for this model");
  if (a.response.empty() && !d.iv) throw ParseError("--response is required for this model");
  q.treatment = FindVariable(model, a.treatment.empty() ? "D" : a.treatment);
  q.response = FindVariable(model, a.response.empty() ? "Y" : a.response);
  q.observations = ParseAssignment(model, a.given);
  q.kind = q.observations.empty() ? QueryKind::kAce : QueryKind::kSubpopAce;
  const auto subjective = LoadConstraints(a.constraints, model);

  auto lp = [&] { return BoundQuery(model, d.observed, q, subjective); };
  auto symbolic = [&]() -> BoundsResult {
    const IvDistribution& iv = RequireIv(d, "the symbolic method");
    if (!subjective.empty()) throw ScopeError("closed forms do not take extra constraints");
    if (*q.response == 2 && q.kind == QueryKind::kAce && *q.treatment == 1) {
      return ToBoundsResult(SymbolicAceBounds(iv));
    }
    if (*q.response == 2 && IsPlaintiffEvidence(q.observations) && *q.treatment != 2) {
      return SubpopAceBounds(iv, *q.treatment == 0 ? Liability::kMarketer : Liability::kProducer,
                             Method::kSymbolic);
    }
    throw ScopeError("no closed form for " + AceText(model, q) + "; use --method lp");
  };
  Report(out, g, d.name, AceText(model, q), Style::kInequality, lp, symbolic);
  return kExitOk;
}

struct CounterfactualArgs {
  std::string dataset;
  std::string given;
  std::string intervention;
  std::string consequent;
  std::string constraints;
};

int RunCounterfactual(const CounterfactualArgs& a, const GlobalOptions& g, std::ostream& out) {
  const Dataset d = LoadDataset(a.dataset);
  const CausalModel& model = d.model;
  CounterfactualQuery q;
  q.kind = QueryKind::kBound;
  q.observations = ParseAssignment(model, a.given);
  q.intervention = ParseAssignment(model, a.intervention);
  q.consequent = ParseAssignment(model, a.consequent);
  if (q.consequent.empty()) throw ParseError("--query must name at least one variable");
  const auto subjective = LoadConstraints(a.constraints, model);

  auto lp = [&] { return BoundQuery(model, d.observed, q, subjective); };
  auto symbolic = [&]() -> BoundsResult {
    const IvDistribution& iv = RequireIv(d, "the symbolic method");
    if (!subjective.empty()) throw ScopeError("closed forms do not take extra constraints");
    const PartialAssignment y1{{2, 1}};
    if (IsPlaintiffEvidence(q.observations) && q.consequent == y1) {
      if (q.intervention == PartialAssignment{{0, 0}}) {
        return ToBoundsResult(SymbolicLiabilityBounds(iv, Liability::kMarketer));
      }
      if (q.intervention == PartialAssignment{{1, 0}}) {
        return ToBoundsResult(SymbolicLiabilityBounds(iv, Liability::kProducer));
      }
    }
    if (q.observations.empty() && q.consequent == y1 && q.intervention.size() == 1 &&
        q.intervention.begin()->first == 1) {
      const auto both = SymbolicTreatmentResponseBounds(iv);
      return ToBoundsResult(q.intervention.begin()->second == 0 ? both.untreated : both.treated);
    }
    throw ScopeError("no closed form for " + QueryText(model, q) + "; use --method lp");
  };
  Report(out, g, d.name, QueryText(model, q), Style::kInterval, lp, symbolic);
  return kExitOk;
}

struct ExactArgs {
  std::string model;
  std::string prior;
  std::string given;
  std::string intervention;
  std::string consequent;
};

int RunExact(const ExactArgs& a, const GlobalOptions& g, std::ostream& out) {
  const std::optional<Json> builtin = BuiltinDatasetJson(a.model);
  const Json doc = builtin ? *builtin : ReadJsonFile(a.model);
  const CausalModel model = ParseModel(doc.contains("model") ? doc.at("model") : doc);
  const ResponsePrior prior = ParsePrior(ReadJsonFile(a.prior), model);
  CounterfactualQuery q;
  q.kind = QueryKind::kExact;
  q.observations = ParseAssignment(model, a.given);
  q.intervention = ParseAssignment(model, a.intervention);
  q.consequent = ParseAssignment(model, a.consequent);
  if (q.consequent.empty()) throw ParseError("--query must name at least one variable");
  const Rational value = EvaluateExact(model, prior, q);
  const std::string label = QueryText(model, q);
  if (g.json) {
    Json doc_out;
    doc_out["query"] = label;
    doc_out["value"] = ValueJson(value, g.precision);
    out << doc_out.dump(2) << "\n";
  } else {
    out << label << " = " << ToDecimalString(value, g.precision) << "\n";
    out << "exact: " << ToFractionString(value) << "\n";
  }
  return kExitOk;
}

struct SimulateArgs {
  std::string q;
  std::uint64_t seed = 0;
  std::uint64_t n = 0;
  std::string p_z1;
  std::string emit;
};

int RunSimulate(const SimulateArgs& a, const GlobalOptions& g, std::ostream& out) {
  std::vector<Rational> q;
  Rational p_z1(1, 2);
  std::string source;
  std::optional<IvDistribution> reference;
  if (a.q == "peptaid-witness") {
    const Dataset peptaid = LoadDataset("peptaid");
    reference = *peptaid.iv;
    q = AceBoundsLp(*reference).lower_witness;
    p_z1 = reference->p_z1;
    source = "peptaid-witness";
  } else if (!a.q.empty()) {
    q = ParseQ(ReadJsonFile(a.q));
    source = "file " + a.q;
  } else {
    Rng rng(a.seed);
    q = RandomQ(rng);
    source = "seed " + std::to_string(a.seed);
  }
  if (!a.p_z1.empty()) p_z1 = ParseRational(a.p_z1);
  if (p_z1 <= 0 || p_z1 >= 1) throw InvalidArgumentError("--p-z1 must lie strictly between 0 and 1");

  const IvDistribution exact = Pushforward(q, p_z1);
  const Rational truth = TrueAce(q);
  const BoundsResult bounds = AceBoundsLp(exact);
  const bool inside = bounds.lower <= truth && truth <= bounds.upper;

  std::optional<TrialResult> trial;
  double deviation = 0;
  double tolerance = 0;
  if (a.n > 0) {
    trial = SimulateTrial(q, p_z1, a.n, a.seed);
    deviation = ToDouble(MaxDeviation(trial->empirical, exact));
    const double n = static_cast<double>(a.n);
    tolerance = 4.0 * std::sqrt(std::log(n) / n);
  }
  const IvDistribution& emitted = trial ? trial->empirical : exact;
  const std::string name =
      a.q == "peptaid-witness" ? std::string("peptaid-witness") : "simulated-seed-" + std::to_string(a.seed);
  const Json dataset = IvDatasetJson(name, emitted);
  std::optional<bool> reproduces;
  if (reference && !trial) reproduces = exact.p == reference->p && exact.p_z1 == reference->p_z1;

  if (!a.emit.empty()) {
    std::ofstream file(a.emit);
    if (!file) throw ParseError("cannot write '" + a.emit + "'");
    file << dataset.dump(2) << "\n";
  }

  if (g.json) {
    Json doc;
    doc["source"] = source;
    doc["p_z1"] = ToFractionString(p_z1);
    doc["n"] = a.n;
    doc["q"] = QToJson(q).at("q");
    doc["true_ace"] = ValueJson(truth, g.precision);
    doc["bounds"] = BoundsJson(bounds, g.precision);
    doc["inside"] = inside;
    if (trial) {
      doc["max_deviation"] = deviation;
      doc["tolerance"] = tolerance;
      doc["within_tolerance"] = deviation <= tolerance;
    }
    if (reproduces) doc["reproduces_builtin"] = *reproduces;
    doc["dataset"] = dataset;
    out << doc.dump(2) << "\n";
  } else {
    out << "q source: " << source << "\n";
    out << "P(z1): " << ToFractionString(p_z1) << "\n";
    if (trial) {
      out << "n: " << a.n << "\n";
    } else {
      out << "n: 0 (exact pushforward)\n";
    }
    out << "true ACE: " << ToDecimalString(truth, g.precision) << " (exact "
        << ToFractionString(truth) << ")\n";
    out << "ACE bounds from exact pushforward: [" << ToDecimalString(bounds.lower, g.precision)
        << ", " << ToDecimalString(bounds.upper, g.precision) << "] (exact ["
        << ToFractionString(bounds.lower) << ", " << ToFractionString(bounds.upper) << "])\n";
    out << "true ACE inside bounds: " << (inside ? "yes" : "no") << "\n";
    if (trial) {
      std::ostringstream line;
      line.setf(std::ios::fixed);
      line.precision(6);
      line << "max deviation from pushforward: " << deviation
           << " (tolerance 4·sqrt(ln n / n) = " << tolerance
           << "): " << (deviation <= tolerance ? "ok" : "exceeded");
      out << line.str() << "\n";
    }
    if (reproduces) out << "reproduces built-in peptaid: " << (*reproduces ? "yes" : "no") << "\n";
    if (a.emit.empty()) {
      out << dataset.dump(2) << "\n";
    } else {
      out << "dataset written to " << a.emit << "\n";
    }
  }
  if (!inside) throw CheckFailed("true ACE falls outside its bounds");
  return kExitOk;
}

int RunDatasets(const std::string& action, const std::string& name, const GlobalOptions& g,
                std::ostream& out) {
  if (action == "list") {
    if (g.json) {
      out << Json(BuiltinDatasetNames()).dump() << "\n";
    } else {
      for (const auto& n : BuiltinDatasetNames()) out << n << "\n";
    }
    return kExitOk;
  }
  if (action != "show") throw ParseError("datasets: expected 'list' or 'show NAME'");
  if (name.empty()) throw ParseError("datasets show: missing dataset name");
  const std::optional<Json> doc = BuiltinDatasetJson(name);
  if (!doc) throw ParseError("unknown built-in dataset '" + name + "'");
  out << doc->dump(2) << "\n";
  return kExitOk;
}

int RunFeasible(const std::string& dataset, const std::string& constraints,
                const GlobalOptions& g, std::ostream& out) {
  const Dataset d = LoadDataset(dataset);
  const auto subjective = LoadConstraints(constraints, d.model);
  bool feasible = false;
  std::string detail;
  if (d.iv && subjective.empty()) {
    const FeasibilityResult r = CheckFeasibility(*d.iv);
    feasible = r.feasible;
    std::vector<std::string> names;
    for (std::size_t c = 0; c < kIvCellCount; ++c) names.push_back(IvCellName(c));
    if (feasible) {
      detail = "witness: " + WitnessText(names, r.witness);
    } else {
      std::vector<std::string> parts;
      for (std::size_t i = 0; i < r.certificate.size(); ++i) {
        if (r.certificate[i] == 0) continue;
        parts.push_back((i < kIvObservedCount ? "p" + IvKey(i) : std::string("sum")) + ":" +
                        ToFractionString(r.certificate[i]));
      }
      detail = "Farkas certificate y (y^T A <= 0, y^T b > 0): " + Join(parts, " ");
    }
  } else {
    const SpecificationCheck r = CheckSpecificationFeasible(d.model, d.observed, subjective);
    feasible = r.feasible;
    if (!feasible) detail = r.reason + (r.certificate.empty() ? "" : "\n" + r.certificate);
  }
  if (g.json) {
    Json doc;
    doc["dataset"] = d.name;
    doc["feasible"] = feasible;
    if (!detail.empty()) doc["detail"] = detail;
    out << doc.dump(2) << "\n";
  } else {
    out << "feasible: " << (feasible ? "yes" : "no") << "\n";
    if (!detail.empty()) out << detail << "\n";
  }
  return feasible ? kExitOk : kExitInfeasible;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bounds on counterfactual probabilities", "cfbounds"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--precision", g.precision, "Decimal places in reports")
      ->check(CLI::Range(0, 40));
  app.add_option("--method", g.method, "lp, symbolic or both")
      ->check(CLI::IsMember({"lp", "symbolic", "both"}));

  AceArgs ace;
  auto* ace_cmd = app.add_subcommand("ace", "Bounds on the average causal effect");
  ace_cmd->add_option("dataset", ace.dataset, "Built-in name or dataset file")->required();
  ace_cmd->add_option("--treatment", ace.treatment, "Treatment variable (default D)");
  ace_cmd->add_option("--response", ace.response, "Response variable (default Y)");
  ace_cmd->add_option("--given", ace.given, "Observed evidence, e.g. z=1,d=1,y=1");
  ace_cmd->add_option("--constraints", ace.constraints, "Subjective constraint file");

  CounterfactualArgs cf;
  auto* cf_cmd = app.add_subcommand("counterfactual", "Bounds on P(c* | do(a*), o)");
  cf_cmd->add_option("dataset", cf.dataset, "Built-in name or dataset file")->required();
  cf_cmd->add_option("--given", cf.given, "Observed evidence o");
  cf_cmd->add_option("--do", cf.intervention, "Counterfactual antecedent a*")->required();
  cf_cmd->add_option("--query", cf.consequent, "Counterfactual consequent c*")->required();
  cf_cmd->add_option("--constraints", cf.constraints, "Subjective constraint file");

  ExactArgs ex;
  auto* ex_cmd = app.add_subcommand("exact", "Exact value under a full response prior");
  ex_cmd->add_option("model", ex.model, "Built-in name, dataset or model file")->required();
  ex_cmd->add_option("--prior", ex.prior, "Response prior file")->required();
  ex_cmd->add_option("--given", ex.given, "Observed evidence o");
  ex_cmd->add_option("--do", ex.intervention, "Counterfactual antecedent a*");
  ex_cmd->add_option("--query", ex.consequent, "Counterfactual consequent c*")->required();

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Ground-truth population and containment check");
  sim_cmd->add_option("--q", sim.q, "Response distribution file, or peptaid-witness");
  sim_cmd->add_option("--seed", sim.seed, "Seed for q and for sampling");
  sim_cmd->add_option("-n", sim.n, "Sample size; 0 uses the exact pushforward");
  sim_cmd->add_option("--p-z1", sim.p_z1, "P(z1) as a decimal or fraction (default 1/2)");
  sim_cmd->add_option("--emit", sim.emit, "Write the observed dataset to this file");

  std::string ds_action;
  std::string ds_name;
  auto* ds_cmd = app.add_subcommand("datasets", "List or show built-in datasets");
  ds_cmd->add_option("action", ds_action, "list or show")->required();
  ds_cmd->add_option("name", ds_name, "Dataset name for show");

  std::string fe_dataset;
  std::string fe_constraints;
  auto* fe_cmd = app.add_subcommand("feasible", "Check whether a dataset admits a model");
  fe_cmd->add_option("dataset", fe_dataset, "Built-in name or dataset file")->required();
  fe_cmd->add_option("--constraints", fe_constraints, "Subjective constraint file");

  for (auto* sub : {ace_cmd, cf_cmd, ex_cmd, sim_cmd, ds_cmd, fe_cmd}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ace_cmd) return RunAce(ace, g, out);
    if (*cf_cmd) return RunCounterfactual(cf, g, out);
    if (*ex_cmd) return RunExact(ex, g, out);
    if (*sim_cmd) return RunSimulate(sim, g, out);
    if (*ds_cmd) return RunDatasets(ds_action, ds_name, g, out);
    if (*fe_cmd) return RunFeasible(fe_dataset, fe_constraints, g, out);
  } catch (const InfeasibleError& e) {
    err << "error: infeasible: " << e.what() << "\n";
    if (!e.certificate().empty()) err << e.certificate() << "\n";
    return kExitInfeasible;
  } catch (const ScopeError& e) {
    err << "error: out of scope: " << e.what() << "\n";
    return kExitScope;
  } catch (const CheckFailed& e) {
    err << "error: check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cfbounds
