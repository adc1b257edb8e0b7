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

#include "cfbounds/rfm.h"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "cfbounds/errors.h"

namespace cfbounds {
namespace {

// a * b, or nullopt once the product exceeds `cap`.
std::optional<std::uint64_t> CappedProduct(std::uint64_t a, std::uint64_t b,
                                           std::uint64_t cap) {
  if (a != 0 && b > cap / a) return std::nullopt;
  const std::uint64_t product = a * b;
  if (product > cap) return std::nullopt;
  return product;
}

// Exact power as a decimal string, for error messages about huge counts.
std::string PowerString(std::size_t base, std::size_t exponent) {
  BigInt value = 1;
  for (std::size_t i = 0; i < exponent; ++i) value *= base;
  return value.str();
}

}  // namespace

ResponseFunctionTable::ResponseFunctionTable(std::size_t domain_size,
                                             std::vector<std::size_t> parent_domain_sizes,
                                             std::uint64_t cap)
    : domain_size_(domain_size), parent_domain_sizes_(std::move(parent_domain_sizes)) {
  if (domain_size_ == 0) throw InvalidArgumentError("empty variable domain");
  configurations_ = 1;
  for (std::size_t size : parent_domain_sizes_) {
    if (size == 0) throw InvalidArgumentError("empty parent domain");
    auto next = CappedProduct(configurations_, size, cap);
    if (!next) {
      throw CapExceededError("parent configuration count exceeds cap " +
                             std::to_string(cap));
    }
    configurations_ = static_cast<std::size_t>(*next);
  }
  count_ = 1;
  for (std::size_t c = 0; c < configurations_; ++c) {
    auto next = CappedProduct(count_, domain_size_, cap);
    if (!next) {
      throw CapExceededError("response function count " +
                             PowerString(domain_size_, configurations_) +
                             " exceeds cap " + std::to_string(cap));
    }
    count_ = *next;
  }
  digit_weight_.assign(configurations_, 1);
  for (std::size_t c = configurations_; c-- > 1;) {
    digit_weight_[c - 1] = digit_weight_[c] * domain_size_;
  }
}

std::size_t ResponseFunctionTable::ConfigurationIndex(
    std::span<const std::size_t> parent_values) const {
  if (parent_values.size() != parent_domain_sizes_.size()) {
    throw InvalidArgumentError("parent value count mismatch");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < parent_values.size(); ++i) {
    if (parent_values[i] >= parent_domain_sizes_[i]) {
      throw InvalidArgumentError("parent value out of range");
    }
    index = index * parent_domain_sizes_[i] + parent_values[i];
  }
  return index;
}

std::vector<std::size_t> ResponseFunctionTable::Configuration(std::size_t index) const {
  if (index >= configurations_) throw InvalidArgumentError("configuration out of range");
  std::vector<std::size_t> values(parent_domain_sizes_.size());
  for (std::size_t i = values.size(); i-- > 0;) {
    values[i] = index % parent_domain_sizes_[i];
    index /= parent_domain_sizes_[i];
  }
  return values;
}

std::size_t ResponseFunctionTable::Value(std::uint64_t r, std::size_t configuration) const {
  if (r >= count_) throw InvalidArgumentError("response index out of range");
  if (configuration >= configurations_) {
    throw InvalidArgumentError("configuration out of range");
  }
  return static_cast<std::size_t>((r / digit_weight_[configuration]) % domain_size_);
}

std::vector<std::size_t> ResponseFunctionTable::Outputs(std::uint64_t r) const {
  std::vector<std::size_t> outputs(configurations_);
  for (std::size_t c = 0; c < configurations_; ++c) outputs[c] = Value(r, c);
  return outputs;
}

std::uint64_t ResponseFunctionTable::IndexOf(std::span<const std::size_t> outputs) const {
  if (outputs.size() != configurations_) {
    throw InvalidArgumentError("output count mismatch");
  }
  std::uint64_t r = 0;
  for (std::size_t c = 0; c < configurations_; ++c) {
    if (outputs[c] >= domain_size_) throw InvalidArgumentError("output out of range");
    r += digit_weight_[c] * outputs[c];
  }
  return r;
}

ResponseFunctionTable EnumerateResponseFunctions(
    const Variable& variable, const std::vector<std::size_t>& parent_domain_sizes,
    std::uint64_t cap) {
  if (variable.parents.size() != parent_domain_sizes.size()) {
    throw InvalidArgumentError("variable '" + variable.name +
                               "': parent domain count mismatch");
  }
  return ResponseFunctionTable(variable.domain.size(), parent_domain_sizes, cap);
}

CausalModel::CausalModel(std::vector<Variable> variables,
                         std::vector<std::vector<std::string>> clusters,
                         std::uint64_t cap)
    : variables_(std::move(variables)), cap_(cap) {
  if (variables_.empty()) throw InvalidArgumentError("model has no variables");
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const Variable& v = variables_[i];
    if (v.name.empty()) throw InvalidArgumentError("variable with empty name");
    if (!index_.emplace(v.name, i).second) {
      throw InvalidArgumentError("duplicate variable '" + v.name + "'");
    }
    if (v.domain.size() < 2) {
      throw InvalidArgumentError("variable '" + v.name + "' needs at least two values");
    }
    std::set<std::string> labels(v.domain.begin(), v.domain.end());
    if (labels.size() != v.domain.size()) {
      throw InvalidArgumentError("variable '" + v.name + "' has duplicate domain labels");
    }
  }

  parents_.resize(variables_.size());
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    std::set<std::size_t> seen;
    for (const auto& p : variables_[i].parents) {
      auto it = index_.find(p);
      if (it == index_.end()) {
        throw InvalidArgumentError("variable '" + variables_[i].name +
                                   "' has unknown parent '" + p + "'");
      }
      if (it->second == i) {
        throw InvalidArgumentError("variable '" + p + "' lists itself as a parent");
      }
      if (!seen.insert(it->second).second) {
        throw InvalidArgumentError("variable '" + variables_[i].name +
                                   "' lists parent '" + p + "' twice");
      }
      parents_[i].push_back(it->second);
    }
  }

  // Kahn's algorithm; ties broken by declaration order.
  std::vector<std::size_t> indegree(variables_.size(), 0);
  std::vector<std::vector<std::size_t>> children(variables_.size());
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    indegree[i] = parents_[i].size();
    for (std::size_t p : parents_[i]) children[p].push_back(i);
  }
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (indegree[i] == 0) ready.insert(i);
  }
  while (!ready.empty()) {
    std::size_t next = *ready.begin();
    ready.erase(ready.begin());
    topo_.push_back(next);
    for (std::size_t c : children[next]) {
      if (--indegree[c] == 0) ready.insert(c);
    }
  }
  if (topo_.size() != variables_.size()) {
    throw InvalidArgumentError("parent relation is cyclic");
  }

  for (std::size_t i = 0; i < variables_.size(); ++i) {
    std::vector<std::size_t> parent_sizes;
    for (std::size_t p : parents_[i]) parent_sizes.push_back(variables_[p].domain.size());
    tables_.push_back(EnumerateResponseFunctions(variables_[i], parent_sizes, cap_));
  }

  cluster_of_.assign(variables_.size(), std::numeric_limits<std::size_t>::max());
  if (clusters.empty()) {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      cluster_of_[i] = i;
      clusters_.push_back({i});
    }
  } else {
    for (const auto& cluster : clusters) {
      if (cluster.empty()) throw InvalidArgumentError("empty cluster");
      std::vector<std::size_t> members;
      for (const auto& name : cluster) {
        std::size_t i = IndexOf(name);
        if (cluster_of_[i] != std::numeric_limits<std::size_t>::max()) {
          throw InvalidArgumentError("variable '" + name + "' is in two clusters");
        }
        cluster_of_[i] = clusters_.size();
        members.push_back(i);
      }
      clusters_.push_back(std::move(members));
    }
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      if (cluster_of_[i] == std::numeric_limits<std::size_t>::max()) {
        throw InvalidArgumentError("variable '" + variables_[i].name +
                                   "' is in no cluster");
      }
    }
  }
}

std::optional<std::size_t> CausalModel::Find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t CausalModel::IndexOf(const std::string& name) const {
  auto found = Find(name);
  if (!found) throw InvalidArgumentError("unknown variable '" + name + "'");
  return *found;
}

std::size_t CausalModel::ValueIndex(std::size_t variable, const std::string& label) const {
  const auto& domain = variables_.at(variable).domain;
  auto it = std::find(domain.begin(), domain.end(), label);
  if (it == domain.end()) {
    throw InvalidArgumentError("'" + label + "' is not a value of '" +
                               variables_[variable].name + "'");
  }
  return static_cast<std::size_t>(it - domain.begin());
}

bool CausalModel::IsComplete() const {
  return std::all_of(clusters_.begin(), clusters_.end(),
                     [](const auto& c) { return c.size() == 1; });
}

std::vector<bool> CausalModel::Descendants(std::size_t variable) const {
  std::vector<bool> mark(variables_.size(), false);
  mark.at(variable) = true;
  for (std::size_t i : topo_) {
    for (std::size_t p : parents_[i]) {
      if (mark[p]) mark[i] = true;
    }
  }
  return mark;
}

std::size_t CausalModel::ParentConfiguration(std::size_t variable,
                                             const Assignment& values) const {
  std::vector<std::size_t> parent_values;
  parent_values.reserve(parents_[variable].size());
  for (std::size_t p : parents_[variable]) parent_values.push_back(values[p]);
  return tables_[variable].ConfigurationIndex(parent_values);
}

std::uint64_t CausalModel::ResponseStateCount() const {
  std::uint64_t total = 1;
  for (const auto& table : tables_) {
    auto next = CappedProduct(total, table.count(), cap_);
    if (!next) {
      throw CapExceededError("response state space exceeds cap " + std::to_string(cap_));
    }
    total = *next;
  }
  return total;
}

PartialAssignment CausalModel::Assign(
    const std::vector<std::pair<std::string, std::string>>& pairs) const {
  PartialAssignment out;
  for (const auto& [name, label] : pairs) {
    std::size_t var = IndexOf(name);
    std::size_t value = ValueIndex(var, label);
    auto [it, inserted] = out.emplace(var, value);
    if (!inserted && it->second != value) {
      throw InvalidArgumentError("conflicting values for '" + name + "'");
    }
  }
  return out;
}

std::string CausalModel::Describe(const PartialAssignment& assignment) const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [var, value] : assignment) {
    if (!first) out << ", ";
    first = false;
    out << variables_.at(var).name << "=" << variables_[var].domain.at(value);
  }
  return out.str();
}

namespace {

void CheckState(const CausalModel& model, const ResponseState& state) {
  if (state.size() > model.size()) {
    throw InvalidArgumentError("response state has more entries than the model");
  }
  if (state.size() < model.size()) {
    throw InvalidArgumentError("missing response index for variable '" +
                               model.variable(state.size()).name + "'");
  }
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (state[i] >= model.responses(i).count()) {
      throw InvalidArgumentError("response index " + std::to_string(state[i]) +
                                 " out of range for variable '" +
                                 model.variable(i).name + "'");
    }
  }
}

void CheckPartial(const CausalModel& model, const PartialAssignment& partial) {
  for (const auto& [var, value] : partial) {
    if (var >= model.size()) throw InvalidArgumentError("unknown variable index");
    if (value >= model.domain_size(var)) {
      throw InvalidArgumentError("value out of range for '" +
                                 model.variable(var).name + "'");
    }
  }
}

Assignment Evaluate(const CausalModel& model, const ResponseState& state,
                    const PartialAssignment& intervention) {
  Assignment values(model.size(), 0);
  for (std::size_t i : model.topological_order()) {
    if (auto it = intervention.find(i); it != intervention.end()) {
      values[i] = it->second;
      continue;
    }
    values[i] = model.responses(i).Value(state[i], model.ParentConfiguration(i, values));
  }
  return values;
}

}  // namespace

Assignment EvaluateFactual(const CausalModel& model, const ResponseState& state) {
  CheckState(model, state);
  return Evaluate(model, state, {});
}

Assignment EvaluateCounterfactual(const CausalModel& model, const ResponseState& state,
                                  const PartialAssignment& intervention) {
  CheckState(model, state);
  CheckPartial(model, intervention);
  return Evaluate(model, state, intervention);
}

bool Extends(const Assignment& values, const PartialAssignment& partial) {
  for (const auto& [var, value] : partial) {
    if (values.at(var) != value) return false;
  }
  return true;
}

void ForEachResponseState(const CausalModel& model,
                          const std::function<void(const ResponseState&)>& visit) {
  model.ResponseStateCount();
  ResponseState state(model.size(), 0);
  while (true) {
    visit(state);
    std::size_t i = model.size();
    while (i > 0) {
      --i;
      if (++state[i] < model.responses(i).count()) break;
      state[i] = 0;
      if (i == 0) return;
    }
  }
}

std::vector<ResponseState> ConsistentRegion(const CausalModel& model,
                                            const PartialAssignment& observations,
                                            const PartialAssignment& intervention,
                                            const PartialAssignment& consequent) {
  CheckPartial(model, observations);
  CheckPartial(model, intervention);
  CheckPartial(model, consequent);
  std::vector<ResponseState> region;
  ForEachResponseState(model, [&](const ResponseState& r) {
    if (!Extends(Evaluate(model, r, {}), observations)) return;
    if (!Extends(Evaluate(model, r, intervention), consequent)) return;
    region.push_back(r);
  });
  return region;
}

std::uint64_t ClusterCellCount(const CausalModel& model,
                               const std::vector<std::size_t>& cluster) {
  std::uint64_t total = 1;
  for (std::size_t v : cluster) {
    auto next = CappedProduct(total, model.responses(v).count(), model.cap());
    if (!next) {
      throw CapExceededError("cluster response space exceeds cap " +
                             std::to_string(model.cap()));
    }
    total = *next;
  }
  return total;
}

std::uint64_t ClusterCell(const CausalModel& model, const std::vector<std::size_t>& cluster,
                          const ResponseState& state) {
  std::uint64_t cell = 0;
  for (std::size_t v : cluster) cell = cell * model.responses(v).count() + state.at(v);
  return cell;
}

std::vector<std::uint64_t> ClusterCellIndices(const CausalModel& model,
                                              const std::vector<std::size_t>& cluster,
                                              std::uint64_t cell) {
  std::vector<std::uint64_t> indices(cluster.size());
  for (std::size_t i = cluster.size(); i-- > 0;) {
    const std::uint64_t count = model.responses(cluster[i]).count();
    indices[i] = cell % count;
    cell /= count;
  }
  return indices;
}

ResponsePrior::ResponsePrior(const CausalModel& model,
                             std::vector<JointResponseDistribution> distributions) {
  by_cluster_.resize(model.clusters().size());
  std::vector<bool> covered(model.clusters().size(), false);
  for (auto& d : distributions) {
    if (d.variables.empty()) throw InvalidArgumentError("prior over no variables");
    const std::size_t c = model.ClusterOf(d.variables.at(0));
    std::vector<std::size_t> sorted_prior = d.variables;
    std::vector<std::size_t> sorted_cluster = model.clusters()[c];
    std::sort(sorted_prior.begin(), sorted_prior.end());
    std::sort(sorted_cluster.begin(), sorted_cluster.end());
    if (sorted_prior != sorted_cluster) {
      throw InvalidArgumentError(
          "a response prior must cover exactly one latent-coupling cluster; "
          "priors across clusters are not supported");
    }
    if (d.variables != model.clusters()[c]) {
      throw InvalidArgumentError("prior variables must follow the cluster's declared order");
    }
    if (covered[c]) throw InvalidArgumentError("two priors for one cluster");
    covered[c] = true;
    if (d.probabilities.size() != ClusterCellCount(model, d.variables)) {
      throw InvalidArgumentError("prior has " + std::to_string(d.probabilities.size()) +
                                 " cells, cluster needs " +
                                 std::to_string(ClusterCellCount(model, d.variables)));
    }
    Rational total = 0;
    for (const auto& p : d.probabilities) {
      if (p < 0 || p > 1) throw InvalidArgumentError("prior entry outside [0, 1]");
      total += p;
    }
    if (total != 1) {
      throw InvalidArgumentError("prior does not sum to 1 (sum " + ToFractionString(total) + ")");
    }
    by_cluster_[c] = std::move(d);
  }
  for (std::size_t c = 0; c < covered.size(); ++c) {
    if (!covered[c]) {
      throw InvalidArgumentError("no prior for cluster containing '" +
                                 model.variable(model.clusters()[c][0]).name + "'");
    }
  }
  for (const auto& d : by_cluster_) {
    std::vector<std::uint64_t> weights(d.variables.size(), 1);
    for (std::size_t i = d.variables.size(); i-- > 1;) {
      weights[i - 1] = weights[i] * model.responses(d.variables[i]).count();
    }
    weights_.push_back(std::move(weights));
  }
}

Rational ResponsePrior::Probability(const ResponseState& state) const {
  Rational p = 1;
  for (std::size_t c = 0; c < by_cluster_.size(); ++c) {
    std::uint64_t cell = 0;
    for (std::size_t i = 0; i < by_cluster_[c].variables.size(); ++i) {
      cell += weights_[c][i] * state.at(by_cluster_[c].variables[i]);
    }
    p *= by_cluster_[c].probabilities.at(cell);
    if (p == 0) break;
  }
  return p;
}

Rational QueryExact(const CausalModel& model, const ResponsePrior& prior,
                    const PartialAssignment& observations,
                    const PartialAssignment& intervention,
                    const PartialAssignment& consequent) {
  CheckPartial(model, observations);
  CheckPartial(model, intervention);
  CheckPartial(model, consequent);
  Rational joint = 0;
  Rational evidence = 0;
  ForEachResponseState(model, [&](const ResponseState& r) {
    if (!Extends(Evaluate(model, r, {}), observations)) return;
    const Rational p = prior.Probability(r);
    if (p == 0) return;
    evidence += p;
    if (Extends(Evaluate(model, r, intervention), consequent)) joint += p;
  });
  if (evidence == 0) {
    throw ConditioningError("observations have probability zero: " +
                            model.Describe(observations));
  }
  return joint / evidence;
}

PotentialOutcomes ResponseToPotentialOutcomes(std::uint64_t r_y) {
  if (r_y > 3) {
    throw InvalidArgumentError("response index " + std::to_string(r_y) +
                               " is not one of the four binary response functions");
  }
  return PotentialOutcomes{.y0 = (r_y == 2 || r_y == 3) ? 1 : 0,
                           .y1 = (r_y == 1 || r_y == 3) ? 1 : 0};
}

}  // namespace cfbounds
