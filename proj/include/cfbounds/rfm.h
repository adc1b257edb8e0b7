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

// Finite-domain functional causal models over canonical response functions.
//
// Every variable X with parents pa(X) is a deterministic function of its
// parents' values and a response index r_X. The index enumerates all maps
// from parent configurations to dom(X) as a mixed-radix number: one digit per
// parent configuration, configurations in lexicographic order of parent
// values (first parent most significant, first configuration most
// significant digit), digit value = output value index. For a binary X with a
// binary parent this yields 0 = constant x0, 1 = identity, 2 = inversion,
// 3 = constant x1.

#ifndef CFBOUNDS_RFM_H_
#define CFBOUNDS_RFM_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cfbounds/rational.h"

namespace cfbounds {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

struct Variable {
  std::string name;
  std::vector<std::string> domain;
  std::vector<std::string> parents;
};

// Value index of every variable, in model order.
using Assignment = std::vector<std::size_t>;
// Variable index -> value index. Used for observations, interventions and
// consequents alike.
using PartialAssignment = std::map<std::size_t, std::size_t>;
// Response index r_X of every variable, in model order.
using ResponseState = std::vector<std::uint64_t>;

class ResponseFunctionTable {
 public:
  // Throws CapExceededError when |dom|^(#configurations) exceeds `cap`.
  ResponseFunctionTable(std::size_t domain_size,
                        std::vector<std::size_t> parent_domain_sizes,
                        std::uint64_t cap = kDefaultEnumerationCap);

  std::uint64_t count() const { return count_; }
  std::size_t domain_size() const { return domain_size_; }
  std::size_t configurations() const { return configurations_; }
  const std::vector<std::size_t>& parent_domain_sizes() const {
    return parent_domain_sizes_;
  }

  std::size_t ConfigurationIndex(std::span<const std::size_t> parent_values) const;
  std::vector<std::size_t> Configuration(std::size_t index) const;

  // h_r(configuration).
  std::size_t Value(std::uint64_t r, std::size_t configuration) const;
  // Outputs of h_r for every configuration, in configuration order.
  std::vector<std::size_t> Outputs(std::uint64_t r) const;
  // Inverse of Outputs.
  std::uint64_t IndexOf(std::span<const std::size_t> outputs) const;

 private:
  std::size_t domain_size_;
  std::vector<std::size_t> parent_domain_sizes_;
  std::size_t configurations_;
  std::uint64_t count_;
  // domain_size_^(configurations_ - 1 - c) for each configuration c.
  std::vector<std::uint64_t> digit_weight_;
};

ResponseFunctionTable EnumerateResponseFunctions(
    const Variable& variable, const std::vector<std::size_t>& parent_domain_sizes,
    std::uint64_t cap = kDefaultEnumerationCap);

class CausalModel {
 public:
  // `clusters` partitions the variable names into latent-coupling clusters;
  // an empty list means every variable is its own cluster (a complete model).
  CausalModel(std::vector<Variable> variables,
              std::vector<std::vector<std::string>> clusters = {},
              std::uint64_t cap = kDefaultEnumerationCap);

  std::size_t size() const { return variables_.size(); }
  const std::vector<Variable>& variables() const { return variables_; }
  const Variable& variable(std::size_t i) const { return variables_.at(i); }
  std::optional<std::size_t> Find(const std::string& name) const;
  std::size_t IndexOf(const std::string& name) const;
  std::size_t ValueIndex(std::size_t variable, const std::string& label) const;
  std::size_t domain_size(std::size_t i) const { return variables_[i].domain.size(); }

  const std::vector<std::size_t>& parents(std::size_t i) const { return parents_[i]; }
  const std::vector<std::size_t>& topological_order() const { return topo_; }
  const ResponseFunctionTable& responses(std::size_t i) const { return tables_[i]; }
  // Variable indices per cluster, in declaration order.
  const std::vector<std::vector<std::size_t>>& clusters() const { return clusters_; }
  std::size_t ClusterOf(std::size_t variable) const { return cluster_of_[variable]; }
  bool IsComplete() const;
  std::uint64_t cap() const { return cap_; }

  // Descendants of `variable`, the variable itself included.
  std::vector<bool> Descendants(std::size_t variable) const;

  // Configuration index of `variable`'s parents under `values`.
  std::size_t ParentConfiguration(std::size_t variable, const Assignment& values) const;

  // Product of all response counts; throws CapExceededError above cap().
  std::uint64_t ResponseStateCount() const;

  // Builds a partial assignment from (variable name, value label) pairs.
  PartialAssignment Assign(
      const std::vector<std::pair<std::string, std::string>>& pairs) const;

  std::string Describe(const PartialAssignment& assignment) const;

 private:
  std::vector<Variable> variables_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> parents_;
  std::vector<std::size_t> topo_;
  std::vector<ResponseFunctionTable> tables_;
  std::vector<std::vector<std::size_t>> clusters_;
  std::vector<std::size_t> cluster_of_;
  std::uint64_t cap_;
};

Assignment EvaluateFactual(const CausalModel& model, const ResponseState& state);

// Intervened variables take their forced values; every other variable is
// recomputed from its (possibly intervened) parents with the same response
// indices.
Assignment EvaluateCounterfactual(const CausalModel& model,
                                  const ResponseState& state,
                                  const PartialAssignment& intervention);

bool Extends(const Assignment& values, const PartialAssignment& partial);

// Calls `visit` for every response state in lexicographic order (first
// variable most significant).
void ForEachResponseState(const CausalModel& model,
                          const std::function<void(const ResponseState&)>& visit);

// { r : factual world extends `observations` and the world under
//   `intervention` extends `consequent` }, in canonical order.
std::vector<ResponseState> ConsistentRegion(const CausalModel& model,
                                            const PartialAssignment& observations,
                                            const PartialAssignment& intervention,
                                            const PartialAssignment& consequent);

// Joint distribution of one cluster's response indices. Cells are ordered
// mixed-radix over the cluster's variables in declaration order, first
// variable most significant; for a cluster (D, Y) of two binary-parent binary
// variables cell 4*j + k holds P(r_D = j, r_Y = k).
struct JointResponseDistribution {
  std::vector<std::size_t> variables;
  std::vector<Rational> probabilities;
};

std::uint64_t ClusterCellCount(const CausalModel& model,
                               const std::vector<std::size_t>& cluster);
std::uint64_t ClusterCell(const CausalModel& model,
                          const std::vector<std::size_t>& cluster,
                          const ResponseState& state);
// Response indices of the cluster's variables for a cell.
std::vector<std::uint64_t> ClusterCellIndices(const CausalModel& model,
                                              const std::vector<std::size_t>& cluster,
                                              std::uint64_t cell);

// Product of independent per-cluster response distributions.
class ResponsePrior {
 public:
  // One distribution per model cluster, each over exactly that cluster's
  // variables; a distribution spanning two clusters is rejected.
  ResponsePrior(const CausalModel& model,
                std::vector<JointResponseDistribution> distributions);

  Rational Probability(const ResponseState& state) const;
  const JointResponseDistribution& cluster(std::size_t c) const { return by_cluster_[c]; }

 private:
  std::vector<JointResponseDistribution> by_cluster_;
  // Mixed-radix weight of each cluster variable's response index.
  std::vector<std::vector<std::uint64_t>> weights_;
};

// sum_{r in R} P(r) / P(o). Throws ConditioningError when P(o) = 0.
Rational QueryExact(const CausalModel& model, const ResponsePrior& prior,
                    const PartialAssignment& observations,
                    const PartialAssignment& intervention,
                    const PartialAssignment& consequent);

// Rubin's potential outcomes (Y0, Y1) of a binary outcome with a binary
// treatment parent.
struct PotentialOutcomes {
  int y0;
  int y1;
};
PotentialOutcomes ResponseToPotentialOutcomes(std::uint64_t r_y);

}  // namespace cfbounds

#endif  // CFBOUNDS_RFM_H_
