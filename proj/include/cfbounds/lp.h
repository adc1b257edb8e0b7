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

// Exact-rational linear programming over { x : Ax = b, x >= 0 }.
//
// Solve() is a dense two-phase primal simplex with Bland's rule. Phase 1
// starts from an all-artificial basis; artificials still basic at zero after
// phase 1 are pivoted out where possible and their rows dropped as redundant
// otherwise, so callers never have to reduce rank themselves.
//
// EnumerateVertices() is an independent brute-force oracle for small
// systems: it tries every candidate basis.

#ifndef CFBOUNDS_LP_H_
#define CFBOUNDS_LP_H_

#include <cstddef>
#include <string>
#include <vector>

#include "cfbounds/rational.h"

namespace cfbounds {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct EqualityConstraints {
  RationalMatrix matrix;
  std::vector<Rational> rhs;

  std::size_t rows() const { return matrix.size(); }
  // Number of variables; 0 for an empty system.
  std::size_t columns() const { return matrix.empty() ? 0 : matrix[0].size(); }
  // Throws InvalidArgumentError on ragged rows or a rhs of the wrong length.
  void Validate(std::size_t expected_columns) const;
};

enum class Sense { kMinimize, kMaximize };

struct LinearProgram {
  std::vector<Rational> objective;
  Sense sense = Sense::kMinimize;
  EqualityConstraints constraints;

  std::size_t dimension() const { return objective.size(); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string ToString(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  // Basic feasible solution attaining `value` when optimal.
  std::vector<Rational> witness;
  // When infeasible: y with y^T A <= 0 componentwise and y^T b > 0.
  std::vector<Rational> farkas;
  // Independent equality rows kept after phase 1.
  std::size_t rank = 0;
  std::size_t phase1_iterations = 0;
  std::size_t phase2_iterations = 0;
};

LpSolution Solve(const LinearProgram& lp);

struct LpBounds {
  LpSolution lower;
  LpSolution upper;
};

// Minimizes, then maximizes, the same objective.
LpBounds OptimizeBoth(const LinearProgram& lp);

struct VertexEnumerationLimits {
  std::size_t max_variables = 20;
  std::size_t max_rows = 12;
};

// All distinct basic feasible solutions of { x : Ax = b, x >= 0 }, sorted
// lexicographically. Empty when the system is infeasible. Throws
// CapExceededError beyond `limits`.
std::vector<std::vector<Rational>> EnumerateVertices(
    const EqualityConstraints& constraints, std::size_t dimension,
    VertexEnumerationLimits limits = {});

// Rank of a rational matrix (fraction-exact Gaussian elimination).
std::size_t Rank(const RationalMatrix& matrix);

// Gaussian elimination on Ax = b. `unique` means consistent with full column
// rank.
struct LinearSolveResult {
  bool consistent = false;
  bool unique = false;
  std::vector<Rational> solution;  // one particular solution when consistent
};
LinearSolveResult SolveLinearSystem(const EqualityConstraints& constraints,
                                    std::size_t dimension);

}  // namespace cfbounds

#endif  // CFBOUNDS_LP_H_
