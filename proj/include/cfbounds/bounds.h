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

// Bounds on counterfactual probabilities.
//
// A query P(c* | do(a*), o) over a functional model is
//
//   sum_{r in R} P(r) / P(o),  R = { r : r reproduces o factually and c* under a* },
//
// where P(o) is fixed by the observed specification. When every cluster but
// one is pinned down by its constraints, the numerator is linear in the free
// cluster's response distribution and the bounds are two linear programs.
// More than one free cluster makes the objective a polynomial; those queries
// are refused.
//
// For the binary instrumental-variable model the published closed-form
// bounds are provided as independent evaluators of the same quantities.

#ifndef CFBOUNDS_BOUNDS_H_
#define CFBOUNDS_BOUNDS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cfbounds/constraints.h"
#include "cfbounds/lp.h"
#include "cfbounds/rational.h"
#include "cfbounds/rfm.h"

namespace cfbounds {

enum class QueryKind {
  kExact,              // needs a full response prior
  kBound,              // P(c* | do(a*), o)
  kAce,                // P(y1* | do(t1*)) - P(y1* | do(t0*))
  kTreatmentResponse,  // P(c* | do(a*)), no observations
  kSubpopAce,          // ACE conditioned on observations o
};

struct CounterfactualQuery {
  QueryKind kind = QueryKind::kBound;
  PartialAssignment observations;
  PartialAssignment intervention;
  PartialAssignment consequent;
  // ACE kinds: binary treatment and response variables; the effect is on the
  // response's second value.
  std::optional<std::size_t> treatment;
  std::optional<std::size_t> response;
};

// Exact value under a fully specified response prior.
Rational EvaluateExact(const CausalModel& model, const ResponsePrior& prior,
                       const CounterfactualQuery& query);

struct LinearObjective {
  // Cluster whose response distribution is optimized over.
  std::size_t cluster = 0;
  std::vector<std::string> parameters;
  // Sum over R of the pinned clusters' probabilities, per free-cluster cell.
  std::vector<Rational> numerator;
  // P(o); 1 when there are no observations.
  Rational denominator = 1;

  std::vector<Rational> Coefficients() const;
};

LinearObjective AssembleObjective(const CausalModel& model, const ObservedConditionals& observed,
                                  const CounterfactualQuery& query,
                                  const std::vector<SubjectiveConstraint>& subjective = {});

enum class Method { kLp, kSymbolic };
std::string ToString(Method method);

struct BoundsResult {
  Rational lower;
  Rational upper;
  // Response distributions attaining each endpoint (LP method only).
  std::vector<Rational> lower_witness;
  std::vector<Rational> upper_witness;
  std::vector<std::string> parameters;
  Method method = Method::kLp;
  // Closed-form terms attaining each endpoint (symbolic method only).
  std::string lower_term;
  std::string upper_term;
};

// Throws InfeasibleError when the observed specification (with any
// subjective rows) admits no response distribution, ScopeError for
// nonlinear objectives, ConditioningError when P(o) = 0.
BoundsResult BoundQuery(const CausalModel& model, const ObservedConditionals& observed,
                        const CounterfactualQuery& query,
                        const std::vector<SubjectiveConstraint>& subjective = {});

struct SpecificationCheck {
  bool feasible = true;
  std::string reason;
  std::string certificate;
};
// Checks every cluster's rows for a nonnegative solution.
SpecificationCheck CheckSpecificationFeasible(
    const CausalModel& model, const ObservedConditionals& observed,
    const std::vector<SubjectiveConstraint>& subjective = {});

// ---------------------------------------------------------------------------
// Binary instrumental-variable model.

// ACE(D -> Y) = sum_j q_j1 - sum_j q_j2.
std::vector<Rational> IvAceObjective();
// P(y1* | do(d)) : q_jk with Y responding y1 to d.
std::vector<Rational> IvTreatmentResponseObjective(int d);

BoundsResult AceBoundsLp(const IvDistribution& dist);
BoundsResult TreatmentResponseBoundsLp(const IvDistribution& dist, int d);

// Plaintiff-style liability queries given (z1, d1, y1): the marketer question
// P(y1* | do(z0), z1, d1, y1) and the producer question
// P(y1* | do(d0), z1, d1, y1).
enum class Liability { kMarketer, kProducer };
CounterfactualQuery LiabilityQuery(const CausalModel& iv_model, Liability which);
BoundsResult LiabilityBoundsLp(const IvDistribution& dist, Liability which);

// A linear form constant + sum_i coefficient_i * p_i over the eight observed
// parameters, parsed from its printed text ("p11.1 + p00.0 - 1").
struct SymbolicTerm {
  std::string text;
  Rational constant;
  std::array<Rational, kIvObservedCount> coefficients;

  static SymbolicTerm Parse(const std::string& text);
  Rational Evaluate(const IvDistribution& dist) const;
};

// Lower bound = max of `lower`, upper bound = min of `upper`; liability forms
// are additionally divided by p11.1.
struct ClosedForm {
  std::vector<SymbolicTerm> lower;
  std::vector<SymbolicTerm> upper;
  bool divide_by_p11_1 = false;
};

const ClosedForm& AceClosedForm();
const ClosedForm& TreatmentResponseClosedForm(int d);
const ClosedForm& LiabilityClosedForm(Liability which);

struct SymbolicBound {
  Rational value;
  std::size_t term = 0;  // first attaining term
  std::string text;
};
struct SymbolicBounds {
  SymbolicBound lower;
  SymbolicBound upper;
};

SymbolicBounds EvaluateClosedForm(const ClosedForm& form, const IvDistribution& dist);
SymbolicBounds SymbolicAceBounds(const IvDistribution& dist);
struct TreatmentResponseBounds {
  SymbolicBounds untreated;  // P(y1* | do(d0))
  SymbolicBounds treated;    // P(y1* | do(d1))
};
TreatmentResponseBounds SymbolicTreatmentResponseBounds(const IvDistribution& dist);
// Throws ConditioningError when p11.1 = 0.
SymbolicBounds SymbolicLiabilityBounds(const IvDistribution& dist, Liability which);

BoundsResult ToBoundsResult(const SymbolicBounds& bounds);

// ACE(T -> Y | z1, d1, y1) for T = D (producer) or T = Z (marketer). The
// treated counterfactual equals 1 by consistency, so the bounds are one minus
// the liability bounds, reversed.
BoundsResult SubpopAceBounds(const IvDistribution& dist, Liability which, Method method);

// Every implemented closed form against its own linear program. Returns one
// human-readable line per disagreement (empty when all agree exactly).
std::vector<std::string> CompareClosedFormsWithLp(const IvDistribution& dist);

struct SanityStatistics {
  Rational y1_given_d1;
  Rational y1_given_d0;
  Rational y1_given_z1;
  Rational y1_given_z0;
};
// Throws ConditioningError on zero denominators.
SanityStatistics ComputeSanityStatistics(const IvDistribution& dist);

}  // namespace cfbounds

#endif  // CFBOUNDS_BOUNDS_H_
