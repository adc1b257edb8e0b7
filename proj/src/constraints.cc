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

#include "cfbounds/constraints.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "cfbounds/errors.h"

namespace cfbounds {

std::vector<std::size_t> ReducedParents(const CausalModel& model,
                                        const std::vector<std::size_t>& cluster) {
  std::vector<std::size_t> reduced;
  for (std::size_t member : cluster) {
    for (std::size_t p : model.parents(member)) {
      if (std::find(cluster.begin(), cluster.end(), p) != cluster.end()) continue;
      if (std::find(reduced.begin(), reduced.end(), p) != reduced.end()) continue;
      reduced.push_back(p);
    }
  }
  return reduced;
}

std::size_t JointValueCount(const CausalModel& model, const std::vector<std::size_t>& variables) {
  std::size_t count = 1;
  for (std::size_t v : variables) {
    count *= model.domain_size(v);
    if (count > model.cap()) {
      throw CapExceededError("joint value space exceeds cap " + std::to_string(model.cap()));
    }
  }
  return count;
}

std::vector<std::size_t> JointValues(const CausalModel& model,
                                     const std::vector<std::size_t>& variables,
                                     std::size_t index) {
  std::vector<std::size_t> values(variables.size());
  for (std::size_t i = variables.size(); i-- > 0;) {
    values[i] = index % model.domain_size(variables[i]);
    index /= model.domain_size(variables[i]);
  }
  return values;
}

namespace {

std::size_t JointIndex(const CausalModel& model, const std::vector<std::size_t>& variables,
                       const Assignment& values) {
  std::size_t index = 0;
  for (std::size_t v : variables) index = index * model.domain_size(v) + values[v];
  return index;
}

std::string DescribeValues(const CausalModel& model, const std::vector<std::size_t>& variables,
                           const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (i > 0) out += ",";
    out += model.variable(variables[i]).name + "=" +
           model.variable(variables[i]).domain[values[i]];
  }
  return out;
}

}  // namespace

void NormalizeColumn(std::vector<Rational>& column, const std::string& what) {
  Rational total = 0;
  for (const auto& v : column) {
    if (v < 0 || v > 1) {
      throw InvalidArgumentError(what + ": entry " + ToExactString(v) + " outside [0, 1]");
    }
    total += v;
  }
  if (total == 1) return;
  const Rational tolerance(1, 1000000000);
  if (abs(total - 1) > tolerance) {
    throw InvalidArgumentError(what + ": probabilities sum to " + ToExactString(total) +
                               ", not 1");
  }
  for (auto& v : column) v /= total;
}

ObservedConditionals::ObservedConditionals(const CausalModel& model,
                                           std::vector<ConditionalTable> tables) {
  tables_.resize(model.clusters().size());
  std::vector<bool> seen(model.clusters().size(), false);
  for (auto& table : tables) {
    if (table.cluster.empty()) throw InvalidArgumentError("table over no variables");
    const std::size_t c = model.ClusterOf(table.cluster[0]);
    if (table.cluster != model.clusters()[c]) {
      throw InvalidArgumentError(
          "table variables must be exactly one cluster, in declared order");
    }
    if (seen[c]) throw InvalidArgumentError("two tables for one cluster");
    seen[c] = true;
    const auto reduced = ReducedParents(model, table.cluster);
    const std::size_t configs = JointValueCount(model, reduced);
    const std::size_t values = JointValueCount(model, table.cluster);
    if (table.columns.size() != configs) {
      throw InvalidArgumentError("table has " + std::to_string(table.columns.size()) +
                                 " parent configurations, expected " +
                                 std::to_string(configs));
    }
    for (std::size_t g = 0; g < configs; ++g) {
      if (table.columns[g].size() != values) {
        throw InvalidArgumentError("table column has " +
                                   std::to_string(table.columns[g].size()) +
                                   " entries, expected " + std::to_string(values));
      }
      std::string what = "table for cluster {";
      for (std::size_t i = 0; i < table.cluster.size(); ++i) {
        if (i > 0) what += ",";
        what += model.variable(table.cluster[i]).name;
      }
      what += "}";
      if (!reduced.empty()) {
        what += " given " + DescribeValues(model, reduced, JointValues(model, reduced, g));
      }
      NormalizeColumn(table.columns[g], what);
    }
    tables_[c] = std::move(table);
  }
  for (std::size_t c = 0; c < seen.size(); ++c) {
    if (!seen[c]) {
      throw InvalidArgumentError("no observed table for cluster containing '" +
                                 model.variable(model.clusters()[c][0]).name + "'");
    }
  }
}

Rational ObservedConditionals::JointProbability(const CausalModel& model,
                                                const Assignment& values) const {
  Rational p = 1;
  for (const auto& table : tables_) {
    const auto reduced = ReducedParents(model, table.cluster);
    p *= table.columns[JointIndex(model, reduced, values)][JointIndex(model, table.cluster, values)];
    if (p == 0) break;
  }
  return p;
}

Rational ObservedConditionals::Marginal(const CausalModel& model,
                                        const PartialAssignment& event) const {
  std::vector<std::size_t> all(model.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const std::size_t total = JointValueCount(model, all);
  Rational sum = 0;
  for (std::size_t index = 0; index < total; ++index) {
    Assignment values = JointValues(model, all, index);
    if (!Extends(values, event)) continue;
    sum += JointProbability(model, values);
  }
  return sum;
}

EqualityConstraints LinearConstraintSystem::Equalities() const {
  EqualityConstraints eq;
  for (const auto& row : rows) {
    if (row.sense != RowSense::kEqual) continue;
    eq.matrix.push_back(row.coefficients);
    eq.rhs.push_back(row.rhs);
  }
  return eq;
}

bool LinearConstraintSystem::HasInequalities() const {
  return std::any_of(rows.begin(), rows.end(),
                     [](const auto& r) { return r.sense != RowSense::kEqual; });
}

int Characteristic(const ResponseFunctionTable& table, std::uint64_t r, std::size_t value,
                   std::span<const std::size_t> parent_values) {
  if (value >= table.domain_size()) throw InvalidArgumentError("value out of range");
  return table.Value(r, table.ConfigurationIndex(parent_values)) == value ? 1 : 0;
}

LinearConstraintSystem BuildClusterConstraints(const CausalModel& model,
                                               const ObservedConditionals& observed,
                                               std::size_t cluster_index) {
  const auto& cluster = model.clusters().at(cluster_index);
  if (cluster.size() > 2) {
    throw ScopeError("clusters of more than two latent-coupled variables are not supported");
  }
  const auto reduced = ReducedParents(model, cluster);
  const std::uint64_t cells = ClusterCellCount(model, cluster);
  const std::size_t configs = JointValueCount(model, reduced);
  const std::size_t values = JointValueCount(model, cluster);
  const ConditionalTable& table = observed.table(cluster_index);

  LinearConstraintSystem system;
  for (std::uint64_t cell = 0; cell < cells; ++cell) {
    const auto indices = ClusterCellIndices(model, cluster, cell);
    std::string name;
    for (std::size_t i = 0; i < cluster.size(); ++i) {
      if (i > 0) name += ",";
      name += "r_" + model.variable(cluster[i]).name + "=" + std::to_string(indices[i]);
    }
    system.parameters.push_back(std::move(name));
  }

  Assignment scratch(model.size(), 0);
  for (std::size_t g = 0; g < configs; ++g) {
    const auto given = JointValues(model, reduced, g);
    for (std::size_t i = 0; i < reduced.size(); ++i) scratch[reduced[i]] = given[i];
    for (std::size_t v = 0; v < values; ++v) {
      const auto joint = JointValues(model, cluster, v);
      for (std::size_t i = 0; i < cluster.size(); ++i) scratch[cluster[i]] = joint[i];
      ConstraintRow row;
      row.label = "P(" + DescribeValues(model, cluster, joint);
      if (!reduced.empty()) row.label += "|" + DescribeValues(model, reduced, given);
      row.label += ")";
      row.coefficients.assign(cells, 0);
      for (std::uint64_t cell = 0; cell < cells; ++cell) {
        const auto indices = ClusterCellIndices(model, cluster, cell);
        int product = 1;
        for (std::size_t i = 0; i < cluster.size() && product != 0; ++i) {
          const std::size_t member = cluster[i];
          std::vector<std::size_t> parent_values;
          for (std::size_t p : model.parents(member)) parent_values.push_back(scratch[p]);
          product *= Characteristic(model.responses(member), indices[i], joint[i],
                                     parent_values);
        }
        row.coefficients[cell] = product;
      }
      row.rhs = table.columns[g][v];
      system.rows.push_back(std::move(row));
    }
  }
  ConstraintRow normalization;
  normalization.label = "sum";
  normalization.coefficients.assign(cells, 1);
  normalization.rhs = 1;
  system.rows.push_back(std::move(normalization));
  return system;
}

LinearConstraintSystem BuildCompleteConstraints(const CausalModel& model,
                                                const ObservedConditionals& observed) {
  for (const auto& cluster : model.clusters()) {
    if (cluster.size() > 1) {
      throw InvalidArgumentError(
          "model has a latent-coupled cluster; use BuildPairConstraints for it");
    }
  }
  std::vector<LinearConstraintSystem> blocks;
  std::size_t total = 0;
  for (std::size_t c = 0; c < model.clusters().size(); ++c) {
    blocks.push_back(BuildClusterConstraints(model, observed, c));
    total += blocks.back().parameters.size();
  }
  LinearConstraintSystem system;
  std::size_t offset = 0;
  for (auto& block : blocks) {
    for (auto& p : block.parameters) system.parameters.push_back(p);
    for (auto& row : block.rows) {
      std::vector<Rational> wide(total, 0);
      std::copy(row.coefficients.begin(), row.coefficients.end(),
                wide.begin() + static_cast<std::ptrdiff_t>(offset));
      row.coefficients = std::move(wide);
      system.rows.push_back(std::move(row));
    }
    offset += block.parameters.size();
  }
  return system;
}

LinearConstraintSystem BuildPairConstraints(const CausalModel& model,
                                            const ObservedConditionals& observed,
                                            std::size_t cluster) {
  const std::size_t size = model.clusters().at(cluster).size();
  if (size > 2) {
    throw ScopeError("only pairwise common-cause clusters are supported (cluster has " +
                     std::to_string(size) + " variables)");
  }
  if (size != 2) throw InvalidArgumentError("BuildPairConstraints needs a two-variable cluster");
  return BuildClusterConstraints(model, observed, cluster);
}

std::size_t SubjectiveCluster(const CausalModel& model, const SubjectiveConstraint& constraint) {
  std::set<std::size_t> clusters;
  for (const auto& term : constraint.terms) {
    for (const auto& [var, r] : term.responses) {
      if (var >= model.size()) throw InvalidArgumentError("unknown variable in constraint");
      if (r >= model.responses(var).count()) {
        throw InvalidArgumentError("response index " + std::to_string(r) +
                                   " out of range for '" + model.variable(var).name + "'");
      }
      clusters.insert(model.ClusterOf(var));
    }
  }
  if (clusters.empty()) throw InvalidArgumentError("constraint mentions no variable");
  if (clusters.size() > 1) {
    throw ScopeError("a subjective constraint must stay within one cluster");
  }
  return *clusters.begin();
}

ConstraintRow SubjectiveRow(const CausalModel& model, const SubjectiveConstraint& constraint) {
  const std::size_t c = SubjectiveCluster(model, constraint);
  const auto& cluster = model.clusters()[c];
  const std::uint64_t cells = ClusterCellCount(model, cluster);
  ConstraintRow row;
  row.label = constraint.label.empty() ? "subjective" : constraint.label;
  row.sense = constraint.sense;
  row.rhs = constraint.rhs;
  row.coefficients.assign(cells, 0);
  for (std::uint64_t cell = 0; cell < cells; ++cell) {
    const auto indices = ClusterCellIndices(model, cluster, cell);
    for (const auto& term : constraint.terms) {
      bool match = true;
      for (const auto& [var, r] : term.responses) {
        auto pos = std::find(cluster.begin(), cluster.end(), var) - cluster.begin();
        if (indices[static_cast<std::size_t>(pos)] != r) match = false;
      }
      if (match) row.coefficients[cell] += term.coefficient;
    }
  }
  return row;
}

std::size_t IvIndex(int y, int d, int z) {
  if (y < 0 || y > 1 || d < 0 || d > 1 || z < 0 || z > 1) {
    throw InvalidArgumentError("IV indices must be 0 or 1");
  }
  return static_cast<std::size_t>(4 * z + 2 * y + d);
}

std::string IvKey(std::size_t index) {
  if (index >= kIvObservedCount) throw InvalidArgumentError("IV index out of range");
  const std::size_t z = index / 4;
  const std::size_t y = (index / 2) % 2;
  const std::size_t d = index % 2;
  return std::to_string(y) + std::to_string(d) + "." + std::to_string(z);
}

std::string IvCellName(std::size_t cell) {
  if (cell >= kIvCellCount) throw InvalidArgumentError("IV cell out of range");
  return "q" + std::to_string(cell / 4) + std::to_string(cell % 4);
}

IvDistribution IvDistribution::Make(std::array<Rational, kIvObservedCount> p, Rational p_z1) {
  if (p_z1 < 0 || p_z1 > 1) {
    throw InvalidArgumentError("P(z1) = " + ToExactString(p_z1) + " outside [0, 1]");
  }
  for (int z = 0; z < 2; ++z) {
    std::vector<Rational> arm(p.begin() + 4 * z, p.begin() + 4 * z + 4);
    NormalizeColumn(arm, "P(y, d | z" + std::to_string(z) + ")");
    std::copy(arm.begin(), arm.end(), p.begin() + 4 * z);
  }
  return IvDistribution{std::move(p), std::move(p_z1)};
}

CausalModel IvModel() {
  return CausalModel({{"Z", {"z0", "z1"}, {}}, {"D", {"d0", "d1"}, {"Z"}},
                      {"Y", {"y0", "y1"}, {"D"}}},
                     {{"Z"}, {"D", "Y"}});
}

ObservedConditionals IvObservedConditionals(const CausalModel& iv_model,
                                            const IvDistribution& dist) {
  ConditionalTable z_table{{iv_model.IndexOf("Z")}, {{1 - dist.p_z1, dist.p_z1}}};
  ConditionalTable dy_table{{iv_model.IndexOf("D"), iv_model.IndexOf("Y")}, {}};
  for (int z = 0; z < 2; ++z) {
    std::vector<Rational> column(4);
    for (int d = 0; d < 2; ++d) {
      for (int y = 0; y < 2; ++y) column[2 * d + y] = dist(y, d, z);
    }
    dy_table.columns.push_back(std::move(column));
  }
  return ObservedConditionals(iv_model, {std::move(z_table), std::move(dy_table)});
}

const RationalMatrix& IvConstraintMatrix() {
  static const RationalMatrix matrix = [] {
    // Cells q_{jk} selected by each row, rows in p order.
    const int rows[kIvObservedCount][4][2] = {
        {{0, 0}, {0, 1}, {1, 0}, {1, 1}},  // p00.0
        {{2, 0}, {2, 2}, {3, 0}, {3, 2}},  // p01.0
        {{0, 2}, {0, 3}, {1, 2}, {1, 3}},  // p10.0
        {{2, 1}, {2, 3}, {3, 1}, {3, 3}},  // p11.0
        {{0, 0}, {0, 1}, {2, 0}, {2, 1}},  // p00.1
        {{1, 0}, {1, 2}, {3, 0}, {3, 2}},  // p01.1
        {{0, 2}, {0, 3}, {2, 2}, {2, 3}},  // p10.1
        {{1, 1}, {1, 3}, {3, 1}, {3, 3}},  // p11.1
    };
    RationalMatrix m(kIvObservedCount, std::vector<Rational>(kIvCellCount, 0));
    for (std::size_t r = 0; r < kIvObservedCount; ++r) {
      for (const auto& jk : rows[r]) m[r][static_cast<std::size_t>(4 * jk[0] + jk[1])] = 1;
    }
    return m;
  }();
  return matrix;
}

std::array<Rational, kIvObservedCount> IvPushforward(std::span<const Rational> q) {
  if (q.size() != kIvCellCount) throw InvalidArgumentError("q must have 16 cells");
  std::array<Rational, kIvObservedCount> p;
  const auto& m = IvConstraintMatrix();
  for (std::size_t r = 0; r < kIvObservedCount; ++r) {
    p[r] = 0;
    for (std::size_t c = 0; c < kIvCellCount; ++c) {
      if (m[r][c] != 0) p[r] += q[c];
    }
  }
  return p;
}

EqualityConstraints IvEqualities(const IvDistribution& dist) {
  EqualityConstraints eq;
  eq.matrix = IvConstraintMatrix();
  eq.rhs.assign(dist.p.begin(), dist.p.end());
  eq.matrix.push_back(std::vector<Rational>(kIvCellCount, 1));
  eq.rhs.push_back(1);
  return eq;
}

FeasibilityResult CheckFeasibility(const IvDistribution& dist) {
  LinearProgram lp;
  lp.objective.assign(kIvCellCount, 0);
  lp.constraints = IvEqualities(dist);
  LpSolution solution = Solve(lp);
  FeasibilityResult result;
  result.feasible = solution.status == LpStatus::kOptimal;
  if (result.feasible) {
    result.witness = std::move(solution.witness);
  } else {
    result.certificate = std::move(solution.farkas);
  }
  return result;
}

}  // namespace cfbounds
