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

#include "cfbounds/bounds.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cfbounds/errors.h"

namespace cfbounds {

std::string ToString(Method method) {
  return method == Method::kLp ? "lp" : "symbolic";
}

namespace {

struct CounterfactualTerm {
  PartialAssignment intervention;
  PartialAssignment consequent;
  int sign;
};

void RequireBinary(const CausalModel& model, std::size_t var, const char* role) {
  if (model.domain_size(var) != 2) {
    throw InvalidArgumentError(std::string(role) + " '" + model.variable(var).name +
                               "' must be binary");
  }
}

// The query as a signed sum of counterfactual probabilities sharing the
// observations o.
std::vector<CounterfactualTerm> Terms(const CausalModel& model,
                                      const CounterfactualQuery& query) {
  switch (query.kind) {
    case QueryKind::kExact:
    case QueryKind::kBound:
      return {{query.intervention, query.consequent, 1}};
    case QueryKind::kTreatmentResponse:
      if (!query.observations.empty()) {
        throw InvalidArgumentError("a treatment-response query takes no observations");
      }
      return {{query.intervention, query.consequent, 1}};
    case QueryKind::kAce:
    case QueryKind::kSubpopAce: {
      if (!query.treatment || !query.response) {
        throw InvalidArgumentError("an ACE query needs treatment and response variables");
      }
      if (query.kind == QueryKind::kAce && !query.observations.empty()) {
        throw InvalidArgumentError("population ACE takes no observations");
      }
      if (query.kind == QueryKind::kSubpopAce && query.observations.empty()) {
        throw InvalidArgumentError("subpopulation ACE needs observations");
      }
      if (!query.intervention.empty() || !query.consequent.empty()) {
        throw InvalidArgumentError("an ACE query fixes its own intervention and consequent");
      }
      const std::size_t t = *query.treatment;
      const std::size_t y = *query.response;
      if (t >= model.size() || y >= model.size()) {
        throw InvalidArgumentError("unknown ACE variable");
      }
      if (t == y) throw InvalidArgumentError("treatment and response must differ");
      RequireBinary(model, t, "treatment");
      RequireBinary(model, y, "response");
      return {{{{t, 1}}, {{y, 1}}, 1}, {{{t, 0}}, {{y, 1}}, -1}};
    }
  }
  return {};
}

struct ClusterAnalysis {
  LinearConstraintSystem system;
  bool identified = false;
  std::vector<Rational> values;  // when identified
};

std::string DescribeCertificate(const std::vector<std::string>& labels,
                                const std::vector<Rational>& y) {
  std::ostringstream out;
  out << "Farkas certificate y (y^T A <= 0, y^T b > 0):";
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 0) continue;
    out << " " << (i < labels.size() ? labels[i] : "row" + std::to_string(i)) << ":"
        << ToFractionString(y[i]);
  }
  return out.str();
}

bool SatisfiesRow(const ConstraintRow& row, const std::vector<Rational>& x) {
  Rational lhs = 0;
  for (std::size_t i = 0; i < x.size(); ++i) lhs += row.coefficients[i] * x[i];
  switch (row.sense) {
    case RowSense::kEqual:
      return lhs == row.rhs;
    case RowSense::kLessEqual:
      return lhs <= row.rhs;
    case RowSense::kGreaterEqual:
      return lhs >= row.rhs;
  }
  return false;
}

// Inequality rows get one slack column each.
LinearProgram ClusterProgram(const LinearConstraintSystem& system, std::vector<Rational> objective,
                             std::vector<std::string>& labels) {
  const std::size_t cells = system.parameters.size();
  std::size_t slacks = 0;
  for (const auto& row : system.rows) {
    if (row.sense != RowSense::kEqual) ++slacks;
  }
  LinearProgram lp;
  lp.objective = std::move(objective);
  lp.objective.resize(cells + slacks, 0);
  std::size_t slack = cells;
  for (const auto& row : system.rows) {
    std::vector<Rational> coefficients = row.coefficients;
    coefficients.resize(cells + slacks, 0);
    if (row.sense == RowSense::kLessEqual) coefficients[slack++] = 1;
    if (row.sense == RowSense::kGreaterEqual) coefficients[slack++] = -1;
    lp.constraints.matrix.push_back(std::move(coefficients));
    lp.constraints.rhs.push_back(row.rhs);
    labels.push_back(row.label);
  }
  return lp;
}

// Phase 1 on a cluster whose rows have no valid solution, for the certificate.
[[noreturn]] void ThrowInfeasible(const std::string& what, const LinearConstraintSystem& system) {
  std::vector<std::string> labels;
  const LinearProgram lp =
      ClusterProgram(system, std::vector<Rational>(system.parameters.size(), 0), labels);
  const LpSolution solution = Solve(lp);
  throw InfeasibleError(what, solution.status == LpStatus::kInfeasible
                                  ? DescribeCertificate(labels, solution.farkas)
                                  : std::string());
}

std::vector<ClusterAnalysis> AnalyzeClusters(const CausalModel& model,
                                             const ObservedConditionals& observed,
                                             const std::vector<SubjectiveConstraint>& subjective) {
  std::vector<ClusterAnalysis> analyses(model.clusters().size());
  for (std::size_t c = 0; c < analyses.size(); ++c) {
    analyses[c].system = BuildClusterConstraints(model, observed, c);
  }
  for (const auto& constraint : subjective) {
    analyses[SubjectiveCluster(model, constraint)].system.rows.push_back(
        SubjectiveRow(model, constraint));
  }
  for (auto& analysis : analyses) {
    const std::size_t cells = analysis.system.parameters.size();
    const LinearSolveResult solved = SolveLinearSystem(analysis.system.Equalities(), cells);
    if (!solved.consistent) {
      ThrowInfeasible("observed specification is inconsistent for response parameters {" +
                          analysis.system.parameters.front() + ", ...}",
                      analysis.system);
    }
    if (!solved.unique) continue;
    const bool nonnegative = std::all_of(solved.solution.begin(), solved.solution.end(),
                                         [](const Rational& v) { return v >= 0; });
    const bool rows_ok =
        std::all_of(analysis.system.rows.begin(), analysis.system.rows.end(),
                    [&](const ConstraintRow& row) { return SatisfiesRow(row, solved.solution); });
    if (!nonnegative || !rows_ok) {
      ThrowInfeasible("the only response distribution matching the observations for {" +
                          analysis.system.parameters.front() + ", ...} is invalid",
                      analysis.system);
    }
    analysis.identified = true;
    analysis.values = solved.solution;
  }
  return analyses;
}

std::string ClusterName(const CausalModel& model, std::size_t c) {
  std::string name = "{";
  for (std::size_t i = 0; i < model.clusters()[c].size(); ++i) {
    if (i > 0) name += ",";
    name += model.variable(model.clusters()[c][i]).name;
  }
  return name + "}";
}

LinearObjective Assemble(const CausalModel& model, const ObservedConditionals& observed,
                         const CounterfactualQuery& query,
                         const std::vector<ClusterAnalysis>& analyses) {
  if (query.kind == QueryKind::kExact) {
    throw InvalidArgumentError("exact queries need a response prior, not bounds");
  }
  const auto terms = Terms(model, query);

  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < analyses.size(); ++c) {
    if (!analyses[c].identified) free.push_back(c);
  }
  if (free.size() > 1) {
    std::string names;
    for (std::size_t c : free) names += (names.empty() ? "" : ", ") + ClusterName(model, c);
    throw ScopeError("objective is nonlinear: response distributions of clusters " + names +
                     " are all unidentified");
  }

  LinearObjective objective;
  objective.cluster = free.empty() ? analyses.size() - 1 : free.front();
  objective.parameters = analyses[objective.cluster].system.parameters;
  objective.numerator.assign(objective.parameters.size(), 0);

  if (!query.observations.empty()) {
    objective.denominator = observed.Marginal(model, query.observations);
    if (objective.denominator == 0) {
      throw ConditioningError("observations have probability zero: " +
                              model.Describe(query.observations));
    }
  }

  const auto& clusters = model.clusters();
  ForEachResponseState(model, [&](const ResponseState& r) {
    if (!Extends(EvaluateFactual(model, r), query.observations)) return;
    Rational weight = 1;
    for (std::size_t c = 0; c < clusters.size() && weight != 0; ++c) {
      if (c == objective.cluster) continue;
      weight *= analyses[c].values[ClusterCell(model, clusters[c], r)];
    }
    if (weight == 0) return;
    const std::uint64_t cell = ClusterCell(model, clusters[objective.cluster], r);
    for (const auto& term : terms) {
      if (Extends(EvaluateCounterfactual(model, r, term.intervention), term.consequent)) {
        if (term.sign > 0) {
          objective.numerator[cell] += weight;
        } else {
          objective.numerator[cell] -= weight;
        }
      }
    }
  });
  return objective;
}

}  // namespace

Rational EvaluateExact(const CausalModel& model, const ResponsePrior& prior,
                       const CounterfactualQuery& query) {
  Rational total = 0;
  for (const auto& term : Terms(model, query)) {
    const Rational value =
        QueryExact(model, prior, query.observations, term.intervention, term.consequent);
    total += term.sign > 0 ? value : Rational(-value);
  }
  return total;
}

std::vector<Rational> LinearObjective::Coefficients() const {
  std::vector<Rational> out = numerator;
  for (auto& c : out) c /= denominator;
  return out;
}

LinearObjective AssembleObjective(const CausalModel& model, const ObservedConditionals& observed,
                                  const CounterfactualQuery& query,
                                  const std::vector<SubjectiveConstraint>& subjective) {
  return Assemble(model, observed, query, AnalyzeClusters(model, observed, subjective));
}

BoundsResult BoundQuery(const CausalModel& model, const ObservedConditionals& observed,
                        const CounterfactualQuery& query,
                        const std::vector<SubjectiveConstraint>& subjective) {
  const auto analyses = AnalyzeClusters(model, observed, subjective);
  const LinearObjective objective = Assemble(model, observed, query, analyses);
  const LinearConstraintSystem& system = analyses[objective.cluster].system;
  const std::size_t cells = system.parameters.size();
  std::vector<std::string> labels;
  LinearProgram lp = ClusterProgram(system, objective.Coefficients(), labels);

  LpBounds solved = OptimizeBoth(lp);
  if (solved.lower.status == LpStatus::kInfeasible) {
    throw InfeasibleError("observed specification admits no response distribution for " +
                              ClusterName(model, objective.cluster),
                          DescribeCertificate(labels, solved.lower.farkas));
  }
  if (solved.lower.status != LpStatus::kOptimal || solved.upper.status != LpStatus::kOptimal) {
    throw InvalidArgumentError("bound linear program is unbounded");
  }
  BoundsResult result;
  result.lower = solved.lower.value;
  result.upper = solved.upper.value;
  result.lower_witness.assign(solved.lower.witness.begin(),
                              solved.lower.witness.begin() + static_cast<std::ptrdiff_t>(cells));
  result.upper_witness.assign(solved.upper.witness.begin(),
                              solved.upper.witness.begin() + static_cast<std::ptrdiff_t>(cells));
  result.parameters = system.parameters;
  result.method = Method::kLp;
  return result;
}

SpecificationCheck CheckSpecificationFeasible(const CausalModel& model,
                                              const ObservedConditionals& observed,
                                              const std::vector<SubjectiveConstraint>& subjective) {
  SpecificationCheck check;
  std::vector<ClusterAnalysis> analyses;
  try {
    analyses = AnalyzeClusters(model, observed, subjective);
  } catch (const InfeasibleError& e) {
    check.feasible = false;
    check.reason = e.what();
    check.certificate = e.certificate();
    return check;
  }
  for (std::size_t c = 0; c < analyses.size(); ++c) {
    const LinearConstraintSystem& system = analyses[c].system;
    std::vector<std::string> labels;
    LinearProgram lp =
        ClusterProgram(system, std::vector<Rational>(system.parameters.size(), 0), labels);
    const LpSolution solution = Solve(lp);
    if (solution.status == LpStatus::kInfeasible) {
      check.feasible = false;
      check.reason = "no response distribution for " + ClusterName(model, c);
      check.certificate = DescribeCertificate(labels, solution.farkas);
      return check;
    }
  }
  return check;
}

std::vector<Rational> IvAceObjective() {
  std::vector<Rational> c(kIvCellCount, 0);
  for (std::size_t j = 0; j < 4; ++j) {
    c[4 * j + 1] = 1;
    c[4 * j + 2] = -1;
  }
  return c;
}

std::vector<Rational> IvTreatmentResponseObjective(int d) {
  if (d != 0 && d != 1) throw InvalidArgumentError("treatment value must be 0 or 1");
  std::vector<Rational> c(kIvCellCount, 0);
  for (std::size_t j = 0; j < 4; ++j) {
    c[4 * j + 3] = 1;
    c[4 * j + (d == 1 ? 1 : 2)] = 1;
  }
  return c;
}

namespace {

std::vector<std::string> IvRowLabels() {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < kIvObservedCount; ++i) labels.push_back("p" + IvKey(i));
  labels.push_back("sum");
  return labels;
}

std::vector<std::string> IvParameters() {
  std::vector<std::string> names;
  for (std::size_t c = 0; c < kIvCellCount; ++c) names.push_back(IvCellName(c));
  return names;
}

BoundsResult IvLpBounds(const IvDistribution& dist, std::vector<Rational> objective) {
  LinearProgram lp;
  lp.objective = std::move(objective);
  lp.constraints = IvEqualities(dist);
  LpBounds solved = OptimizeBoth(lp);
  if (solved.lower.status != LpStatus::kOptimal) {
    throw InfeasibleError("observed distribution is not the image of any response distribution",
                          DescribeCertificate(IvRowLabels(), solved.lower.farkas));
  }
  BoundsResult result;
  result.lower = solved.lower.value;
  result.upper = solved.upper.value;
  result.lower_witness = std::move(solved.lower.witness);
  result.upper_witness = std::move(solved.upper.witness);
  result.parameters = IvParameters();
  result.method = Method::kLp;
  return result;
}

}  // namespace

BoundsResult AceBoundsLp(const IvDistribution& dist) {
  return IvLpBounds(dist, IvAceObjective());
}

BoundsResult TreatmentResponseBoundsLp(const IvDistribution& dist, int d) {
  return IvLpBounds(dist, IvTreatmentResponseObjective(d));
}

CounterfactualQuery LiabilityQuery(const CausalModel& iv_model, Liability which) {
  CounterfactualQuery query;
  query.kind = QueryKind::kBound;
  query.observations = iv_model.Assign({{"Z", "z1"}, {"D", "d1"}, {"Y", "y1"}});
  query.intervention = which == Liability::kMarketer ? iv_model.Assign({{"Z", "z0"}})
                                                     : iv_model.Assign({{"D", "d0"}});
  query.consequent = iv_model.Assign({{"Y", "y1"}});
  return query;
}

BoundsResult LiabilityBoundsLp(const IvDistribution& dist, Liability which) {
  if (dist(1, 1, 1) == 0) {
    throw ConditioningError("P(y1, d1 | z1) = 0: liability query conditions on a null event");
  }
  const CausalModel model = IvModel();
  return BoundQuery(model, IvObservedConditionals(model, dist), LiabilityQuery(model, which));
}

SymbolicTerm SymbolicTerm::Parse(const std::string& text) {
  SymbolicTerm term;
  term.text = text;
  term.constant = 0;
  for (auto& c : term.coefficients) c = 0;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool any = false;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (any) {
      throw ParseError("expected '+' or '-' in term '" + text + "'");
    }
    if (i < text.size() && text[i] == 'p') {
      if (i + 5 > text.size() || text[i + 3] != '.') {
        throw ParseError("bad parameter in term '" + text + "'");
      }
      const int y = text[i + 1] - '0';
      const int d = text[i + 2] - '0';
      const int z = text[i + 4] - '0';
      term.coefficients[IvIndex(y, d, z)] += sign;
      i += 5;
    } else if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      term.constant += sign * std::stoi(text.substr(start, i - start));
    } else {
      throw ParseError("unexpected character in term '" + text + "'");
    }
    any = true;
  }
  if (!any) throw ParseError("empty term");
  return term;
}

Rational SymbolicTerm::Evaluate(const IvDistribution& dist) const {
  Rational value = constant;
  for (std::size_t i = 0; i < kIvObservedCount; ++i) {
    if (coefficients[i] != 0) value += coefficients[i] * dist.p[i];
  }
  return value;
}

namespace {

ClosedForm MakeForm(std::initializer_list<const char*> lower,
                    std::initializer_list<const char*> upper, bool divide) {
  ClosedForm form;
  for (const char* t : lower) form.lower.push_back(SymbolicTerm::Parse(t));
  for (const char* t : upper) form.upper.push_back(SymbolicTerm::Parse(t));
  form.divide_by_p11_1 = divide;
  return form;
}

}  // namespace

const ClosedForm& AceClosedForm() {
  static const ClosedForm form = MakeForm(
      {
          "p11.1 + p00.0 - 1",
          "p11.0 + p00.1 - 1",
          "p11.0 - p11.1 - p10.1 - p01.0 - p10.0",
          "p11.1 - p11.0 - p10.0 - p01.1 - p10.1",
          "-p01.1 - p10.1",
          "-p01.0 - p10.0",
          "p00.1 - p01.1 - p10.1 - p01.0 - p00.0",
          "p00.0 - p01.0 - p10.0 - p01.1 - p00.1",
      },
      {
          "1 - p01.1 - p10.0",
          "1 - p01.0 - p10.1",
          "-p01.0 + p01.1 + p00.1 + p11.0 + p00.0",
          "-p01.1 + p11.1 + p00.1 + p01.0 + p00.0",
          "p11.1 + p00.1",
          "p11.0 + p00.0",
          "-p10.1 + p11.1 + p00.1 + p11.0 + p10.0",
          "-p10.0 + p11.0 + p00.0 + p11.1 + p10.1",
      },
      false);
  return form;
}

const ClosedForm& TreatmentResponseClosedForm(int d) {
  static const ClosedForm untreated = MakeForm(
      {
          "p10.0 + p11.0 - p00.1 - p11.1",
          "p10.1",
          "p10.0",
          "p01.0 + p10.0 - p00.1 - p01.1",
      },
      {
          "p01.0 + p10.0 + p10.1 + p11.1",
          "1 - p00.1",
          "1 - p00.0",
          "p10.0 + p11.0 + p01.1 + p10.1",
      },
      false);
  static const ClosedForm treated = MakeForm(
      {
          "p11.0",
          "p11.1",
          "-p00.0 - p01.0 + p00.1 + p11.1",
          "-p01.0 - p10.0 + p10.1 + p11.1",
      },
      {
          "1 - p01.1",
          "1 - p01.0",
          "p00.0 + p11.0 + p10.1 + p11.1",
          "p10.0 + p11.0 + p00.1 + p11.1",
      },
      false);
  if (d != 0 && d != 1) throw InvalidArgumentError("treatment value must be 0 or 1");
  return d == 0 ? untreated : treated;
}

const ClosedForm& LiabilityClosedForm(Liability which) {
  static const ClosedForm marketer = MakeForm(
      {"0", "p11.1 - p00.0", "p11.0 - p00.1 - p10.1", "p10.0 - p01.1 - p10.1"},
      {"p11.1", "p10.0 + p11.0", "1 - p00.0 - p10.1"}, true);
  static const ClosedForm producer = MakeForm(
      {"0", "p11.1 - p00.0 - p11.0", "p10.0 - p01.1 - p10.1"},
      {"p11.1", "p10.0 + p11.0", "1 - p00.0 - p10.1"}, true);
  return which == Liability::kMarketer ? marketer : producer;
}

SymbolicBounds EvaluateClosedForm(const ClosedForm& form, const IvDistribution& dist) {
  Rational scale = 1;
  if (form.divide_by_p11_1) {
    if (dist(1, 1, 1) == 0) {
      throw ConditioningError("P(y1, d1 | z1) = 0: closed form divides by p11.1");
    }
    scale = 1 / dist(1, 1, 1);
  }
  SymbolicBounds out;
  for (std::size_t i = 0; i < form.lower.size(); ++i) {
    Rational v = form.lower[i].Evaluate(dist);
    if (i == 0 || v > out.lower.value) out.lower = {std::move(v), i, form.lower[i].text};
  }
  for (std::size_t i = 0; i < form.upper.size(); ++i) {
    Rational v = form.upper[i].Evaluate(dist);
    if (i == 0 || v < out.upper.value) out.upper = {std::move(v), i, form.upper[i].text};
  }
  out.lower.value *= scale;
  out.upper.value *= scale;
  if (form.divide_by_p11_1) {
    out.lower.text = "(" + out.lower.text + ") / p11.1";
    out.upper.text = "(" + out.upper.text + ") / p11.1";
  }
  return out;
}

SymbolicBounds SymbolicAceBounds(const IvDistribution& dist) {
  return EvaluateClosedForm(AceClosedForm(), dist);
}

TreatmentResponseBounds SymbolicTreatmentResponseBounds(const IvDistribution& dist) {
  return {EvaluateClosedForm(TreatmentResponseClosedForm(0), dist),
          EvaluateClosedForm(TreatmentResponseClosedForm(1), dist)};
}

SymbolicBounds SymbolicLiabilityBounds(const IvDistribution& dist, Liability which) {
  return EvaluateClosedForm(LiabilityClosedForm(which), dist);
}

BoundsResult ToBoundsResult(const SymbolicBounds& bounds) {
  BoundsResult result;
  result.lower = bounds.lower.value;
  result.upper = bounds.upper.value;
  result.method = Method::kSymbolic;
  result.lower_term = bounds.lower.text;
  result.upper_term = bounds.upper.text;
  return result;
}

BoundsResult SubpopAceBounds(const IvDistribution& dist, Liability which, Method method) {
  BoundsResult liability = method == Method::kLp
                               ? LiabilityBoundsLp(dist, which)
                               : ToBoundsResult(SymbolicLiabilityBounds(dist, which));
  BoundsResult result;
  result.method = method;
  result.lower = 1 - liability.upper;
  result.upper = 1 - liability.lower;
  result.lower_witness = std::move(liability.upper_witness);
  result.upper_witness = std::move(liability.lower_witness);
  result.parameters = std::move(liability.parameters);
  if (method == Method::kSymbolic) {
    result.lower_term = "1 - " + liability.upper_term;
    result.upper_term = "1 - " + liability.lower_term;
  }
  return result;
}

std::vector<std::string> CompareClosedFormsWithLp(const IvDistribution& dist) {
  std::vector<std::string> mismatches;
  auto compare = [&](const std::string& name, const SymbolicBounds& symbolic,
                     const BoundsResult& lp) {
    auto report = [&](const char* side, const Rational& s, const Rational& l) {
      std::ostringstream out;
      out << name << " " << side << ": closed form " << ToFractionString(s) << " vs LP "
          << ToFractionString(l) << " at p = (";
      for (std::size_t i = 0; i < kIvObservedCount; ++i) {
        out << (i ? ", " : "") << "p" << IvKey(i) << "=" << ToFractionString(dist.p[i]);
      }
      out << ")";
      mismatches.push_back(out.str());
    };
    if (symbolic.lower.value != lp.lower) report("lower", symbolic.lower.value, lp.lower);
    if (symbolic.upper.value != lp.upper) report("upper", symbolic.upper.value, lp.upper);
  };
  compare("ACE(D->Y)", SymbolicAceBounds(dist), AceBoundsLp(dist));
  const auto responses = SymbolicTreatmentResponseBounds(dist);
  compare("P(y1*|do(d0))", responses.untreated, TreatmentResponseBoundsLp(dist, 0));
  compare("P(y1*|do(d1))", responses.treated, TreatmentResponseBoundsLp(dist, 1));
  if (dist(1, 1, 1) != 0) {
    compare("P(y1*|do(z0),z1,d1,y1)", SymbolicLiabilityBounds(dist, Liability::kMarketer),
            LiabilityBoundsLp(dist, Liability::kMarketer));
    compare("P(y1*|do(d0),z1,d1,y1)", SymbolicLiabilityBounds(dist, Liability::kProducer),
            LiabilityBoundsLp(dist, Liability::kProducer));
  }
  return mismatches;
}

SanityStatistics ComputeSanityStatistics(const IvDistribution& dist) {
  const Rational pz[2] = {1 - dist.p_z1, dist.p_z1};
  auto joint = [&](int y, int d) {
    return pz[0] * dist(y, d, 0) + pz[1] * dist(y, d, 1);
  };
  auto ratio = [](const Rational& num, const Rational& den, const char* what) {
    if (den == 0) throw ConditioningError(std::string("zero denominator in ") + what);
    return Rational(num / den);
  };
  SanityStatistics s;
  s.y1_given_d1 = ratio(joint(1, 1), joint(0, 1) + joint(1, 1), "P(y1|d1)");
  s.y1_given_d0 = ratio(joint(1, 0), joint(0, 0) + joint(1, 0), "P(y1|d0)");
  // Each arm is a conditional distribution already; P(z) only matters for
  // whether the arm exists at all.
  s.y1_given_z1 = ratio(pz[1] * (dist(1, 0, 1) + dist(1, 1, 1)), pz[1], "P(y1|z1)");
  s.y1_given_z0 = ratio(pz[0] * (dist(1, 0, 0) + dist(1, 1, 0)), pz[0], "P(y1|z0)");
  return s;
}

}  // namespace cfbounds
