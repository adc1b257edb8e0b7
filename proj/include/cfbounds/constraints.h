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

// Linear constraints that an observed (probabilistic) specification imposes on
// the distribution of response indices.
//
// A cluster C of latent-coupled variables is observed through the table
// P(x_C | g), where g ranges over the configurations of C's reduced parents:
// parents of members of C that are not themselves in C. Each entry yields one
// equality over the cluster's joint response cells:
//
//   P(x_C | g) = sum_r P(r_C) * prod_{X in C} t(r_X; x_X, pa(X)),
//
// with t the characteristic function of X's response table, plus one
// normalization row. A singleton cluster gives the complete-model constraints;
// a two-variable cluster gives the common-cause form.

#ifndef CFBOUNDS_CONSTRAINTS_H_
#define CFBOUNDS_CONSTRAINTS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cfbounds/lp.h"
#include "cfbounds/rational.h"
#include "cfbounds/rfm.h"

namespace cfbounds {

// Column sums within this distance of 1 are rescaled exactly to 1; anything
// further off is rejected.
inline constexpr double kRenormalizeTolerance = 1e-9;

// Reduced parents of a cluster: parents of its members outside the cluster,
// in order of first appearance.
std::vector<std::size_t> ReducedParents(const CausalModel& model,
                                        const std::vector<std::size_t>& cluster);

// Number of joint value combinations of `variables` (mixed radix, first
// variable most significant).
std::size_t JointValueCount(const CausalModel& model, const std::vector<std::size_t>& variables);
std::vector<std::size_t> JointValues(const CausalModel& model,
                                     const std::vector<std::size_t>& variables,
                                     std::size_t index);

struct ConditionalTable {
  // Cluster members, in the cluster's declared order.
  std::vector<std::size_t> cluster;
  // columns[g][v] = P(cluster takes joint value v | reduced parents take
  // configuration g).
  std::vector<std::vector<Rational>> columns;
};

class ObservedConditionals {
 public:
  // One table per cluster. Entries must lie in [0, 1]; each column must sum
  // to 1 up to kRenormalizeTolerance (near misses are rescaled exactly).
  ObservedConditionals(const CausalModel& model, std::vector<ConditionalTable> tables);

  const ConditionalTable& table(std::size_t cluster) const { return tables_.at(cluster); }
  std::size_t size() const { return tables_.size(); }

  // Observational probability of a full value assignment (product of the
  // cluster tables).
  Rational JointProbability(const CausalModel& model, const Assignment& values) const;
  // Observational probability of a partial assignment, by enumeration.
  Rational Marginal(const CausalModel& model, const PartialAssignment& event) const;

 private:
  std::vector<ConditionalTable> tables_;
};

// Rescales a column summing to within kRenormalizeTolerance of 1; throws
// InvalidArgumentError for entries outside [0, 1] or larger deviations.
void NormalizeColumn(std::vector<Rational>& column, const std::string& what);

enum class RowSense { kEqual, kLessEqual, kGreaterEqual };

struct ConstraintRow {
  std::string label;
  std::vector<Rational> coefficients;
  RowSense sense = RowSense::kEqual;
  Rational rhs;
};

struct LinearConstraintSystem {
  std::vector<std::string> parameters;
  std::vector<ConstraintRow> rows;

  // Equality rows only, as a matrix.
  EqualityConstraints Equalities() const;
  bool HasInequalities() const;
};

// 1 iff h_r maps `parent_values` to `value`.
int Characteristic(const ResponseFunctionTable& table, std::uint64_t r, std::size_t value,
                   std::span<const std::size_t> parent_values);

// Constraint rows for one cluster of size 1 or 2, over its joint response
// cells (see JointResponseDistribution for the cell order). Parameters are
// named like "r_D=1,r_Y=3".
LinearConstraintSystem BuildClusterConstraints(const CausalModel& model,
                                               const ObservedConditionals& observed,
                                               std::size_t cluster);

// Complete model: all clusters singletons. Parameters of all variables are
// concatenated in model order.
LinearConstraintSystem BuildCompleteConstraints(const CausalModel& model,
                                                const ObservedConditionals& observed);

// Two-variable common-cause cluster.
LinearConstraintSystem BuildPairConstraints(const CausalModel& model,
                                            const ObservedConditionals& observed,
                                            std::size_t cluster);

// Subjective belief over one cluster's response distribution, e.g.
// P(r_B = 2) = 0. Each term selects all cells whose response indices agree
// with `responses` and multiplies their mass by `coefficient`.
struct SubjectiveTerm {
  std::map<std::size_t, std::uint64_t> responses;
  Rational coefficient = 1;
};
struct SubjectiveConstraint {
  std::vector<SubjectiveTerm> terms;
  RowSense sense = RowSense::kEqual;
  Rational rhs;
  std::string label;
};
// Cluster the constraint lives in; throws if its terms span clusters.
std::size_t SubjectiveCluster(const CausalModel& model, const SubjectiveConstraint& constraint);
ConstraintRow SubjectiveRow(const CausalModel& model, const SubjectiveConstraint& constraint);

// ---------------------------------------------------------------------------
// Binary instrumental-variable model Z -> D -> Y with D, Y latent-coupled.
//
// Observed parameters p_{yd.z} = P(y, d | z) are indexed 4*z + 2*y + d, i.e.
// 00.0, 01.0, 10.0, 11.0, 00.1, 01.1, 10.1, 11.1. Response cells
// q_{jk} = P(r_D = j, r_Y = k) are indexed 4*j + k.

inline constexpr std::size_t kIvObservedCount = 8;
inline constexpr std::size_t kIvCellCount = 16;

std::size_t IvIndex(int y, int d, int z);
// "00.0" style key of index i.
std::string IvKey(std::size_t index);
// "q13" style name of cell i.
std::string IvCellName(std::size_t cell);

struct IvDistribution {
  std::array<Rational, kIvObservedCount> p;
  Rational p_z1;

  const Rational& operator()(int y, int d, int z) const { return p[IvIndex(y, d, z)]; }

  // Validates ranges, renormalizes near-unit arms, rejects everything else.
  static IvDistribution Make(std::array<Rational, kIvObservedCount> p, Rational p_z1);
};

CausalModel IvModel();
ObservedConditionals IvObservedConditionals(const CausalModel& iv_model,
                                            const IvDistribution& dist);

// The fixed 8x16 0/1 map from q to p.
const RationalMatrix& IvConstraintMatrix();

// p = P q. Does not check that q is a distribution.
std::array<Rational, kIvObservedCount> IvPushforward(std::span<const Rational> q);

// IvConstraintMatrix plus the row sum(q) = 1, with right-hand side (p, 1).
EqualityConstraints IvEqualities(const IvDistribution& dist);

struct FeasibilityResult {
  bool feasible = false;
  // A response distribution q with P q = p when feasible.
  std::vector<Rational> witness;
  // Otherwise y over the nine rows (eight p rows, then normalization) with
  // y^T [P; 1] <= 0 and y^T (p, 1) > 0.
  std::vector<Rational> certificate;
};
FeasibilityResult CheckFeasibility(const IvDistribution& dist);

}  // namespace cfbounds

#endif  // CFBOUNDS_CONSTRAINTS_H_
