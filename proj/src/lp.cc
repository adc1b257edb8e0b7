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

#include "cfbounds/lp.h"

#include <algorithm>
#include <set>

#include "cfbounds/errors.h"

namespace cfbounds {

void EqualityConstraints::Validate(std::size_t expected_columns) const {
  if (rhs.size() != matrix.size()) {
    throw InvalidArgumentError("constraint matrix has " + std::to_string(matrix.size()) +
                               " rows but rhs has " + std::to_string(rhs.size()));
  }
  for (const auto& row : matrix) {
    if (row.size() != expected_columns) {
      throw InvalidArgumentError("constraint row of length " + std::to_string(row.size()) +
                                 ", expected " + std::to_string(expected_columns));
    }
  }
}

std::string ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

// Dense simplex tableau: rows x cols coefficients, one rhs per row, and a
// reduced-cost row with the current objective value.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols), rhs_(rows), cost_(cols),
        basis_(rows) {}

  Rational& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  Rational& rhs(std::size_t r) { return rhs_[r]; }
  Rational& cost(std::size_t c) { return cost_[c]; }
  Rational& value() { return value_; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void Pivot(std::size_t row, std::size_t col) {
    const Rational pivot = at(row, col);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (at(row, c) != 0) at(row, c) /= pivot;
    }
    rhs_[row] /= pivot;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || at(r, col) == 0) continue;
      const Rational factor = at(r, col);
      for (std::size_t c = 0; c < cols_; ++c) {
        if (at(row, c) != 0) at(r, c) -= factor * at(row, c);
      }
      rhs_[r] -= factor * rhs_[row];
    }
    if (cost_[col] != 0) {
      const Rational factor = cost_[col];
      for (std::size_t c = 0; c < cols_; ++c) {
        if (at(row, c) != 0) cost_[c] -= factor * at(row, c);
      }
      value_ += factor * rhs_[row];
    }
    basis_[row] = col;
  }

  // Recomputes reduced costs and objective value for cost vector `c`.
  void Price(const std::vector<Rational>& c) {
    for (std::size_t j = 0; j < cols_; ++j) cost_[j] = c[j];
    value_ = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& cb = c[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (at(r, j) != 0) cost_[j] -= cb * at(r, j);
      }
      value_ += cb * rhs_[r];
    }
  }

  void DropRow(std::size_t row) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(row * cols_),
                 cells_.begin() + static_cast<std::ptrdiff_t>((row + 1) * cols_));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
    --rows_;
  }

  // Keeps only the first `keep` columns.
  void TruncateColumns(std::size_t keep) {
    std::vector<Rational> cells(rows_ * keep);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < keep; ++c) cells[r * keep + c] = at(r, c);
    }
    cells_ = std::move(cells);
    cost_.resize(keep);
    cols_ = keep;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> cells_;
  std::vector<Rational> rhs_;
  std::vector<Rational> cost_;
  Rational value_;
  std::vector<std::size_t> basis_;
};

enum class IterateResult { kOptimal, kUnbounded };

// Minimizes over columns [0, eligible) with Bland's rule: lowest-index
// improving column enters; ratio ties leave by lowest basic index.
IterateResult Iterate(Tableau& t, std::size_t eligible, std::size_t& iterations) {
  while (true) {
    std::size_t entering = eligible;
    for (std::size_t j = 0; j < eligible; ++j) {
      if (t.cost(j) < 0) {
        entering = j;
        break;
      }
    }
    if (entering == eligible) return IterateResult::kOptimal;

    std::size_t leaving = t.rows();
    Rational best_ratio;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      const Rational& a = t.at(r, entering);
      if (a <= 0) continue;
      Rational ratio = t.rhs(r) / a;
      if (leaving == t.rows() || ratio < best_ratio ||
          (ratio == best_ratio && t.basis(r) < t.basis(leaving))) {
        leaving = r;
        best_ratio = std::move(ratio);
      }
    }
    if (leaving == t.rows()) return IterateResult::kUnbounded;
    t.Pivot(leaving, entering);
    ++iterations;
  }
}

}  // namespace

LpSolution Solve(const LinearProgram& lp) {
  const std::size_t n = lp.dimension();
  const EqualityConstraints& cons = lp.constraints;
  cons.Validate(n);
  const std::size_t m = cons.rows();

  // Phase 1 over [A | I] with rows sign-flipped so that b >= 0.
  Tableau t(m, n + m);
  std::vector<int> sign(m, 1);
  for (std::size_t r = 0; r < m; ++r) {
    sign[r] = cons.rhs[r] < 0 ? -1 : 1;
    for (std::size_t c = 0; c < n; ++c) {
      t.at(r, c) = sign[r] < 0 ? Rational(-cons.matrix[r][c]) : cons.matrix[r][c];
    }
    t.at(r, n + r) = 1;
    t.rhs(r) = sign[r] < 0 ? Rational(-cons.rhs[r]) : cons.rhs[r];
    t.basis(r) = n + r;
  }
  std::vector<Rational> phase1_cost(n + m, 0);
  for (std::size_t r = 0; r < m; ++r) phase1_cost[n + r] = 1;
  t.Price(phase1_cost);

  LpSolution solution;
  Iterate(t, n + m, solution.phase1_iterations);

  if (t.value() > 0) {
    solution.status = LpStatus::kInfeasible;
    // Reduced cost of artificial r is 1 - y_r.
    solution.farkas.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
      Rational y = 1 - t.cost(n + r);
      solution.farkas[r] = sign[r] < 0 ? Rational(-y) : y;
    }
    return solution;
  }

  // Drive zero-valued artificials out of the basis; drop rows that cannot.
  for (std::size_t r = 0; r < t.rows();) {
    if (t.basis(r) < n) {
      ++r;
      continue;
    }
    std::size_t entering = n;
    for (std::size_t c = 0; c < n; ++c) {
      if (t.at(r, c) != 0) {
        entering = c;
        break;
      }
    }
    if (entering == n) {
      t.DropRow(r);
    } else {
      t.Pivot(r, entering);
      ++r;
    }
  }
  t.TruncateColumns(n);
  solution.rank = t.rows();

  std::vector<Rational> cost = lp.objective;
  if (lp.sense == Sense::kMaximize) {
    for (auto& c : cost) c = -c;
  }
  t.Price(cost);
  if (Iterate(t, n, solution.phase2_iterations) == IterateResult::kUnbounded) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  solution.status = LpStatus::kOptimal;
  solution.witness.assign(n, 0);
  for (std::size_t r = 0; r < t.rows(); ++r) solution.witness[t.basis(r)] = t.rhs(r);
  solution.value = 0;
  for (std::size_t c = 0; c < n; ++c) solution.value += lp.objective[c] * solution.witness[c];
  return solution;
}

LpBounds OptimizeBoth(const LinearProgram& lp) {
  LinearProgram minimize = lp;
  minimize.sense = Sense::kMinimize;
  LinearProgram maximize = lp;
  maximize.sense = Sense::kMaximize;
  return LpBounds{Solve(minimize), Solve(maximize)};
}

namespace {

// Reduced row echelon form of [A | b] in place. Returns pivot columns; sets
// `consistent` false when a row reduces to 0 = nonzero.
std::vector<std::size_t> RowReduce(RationalMatrix& rows, std::vector<Rational>& rhs,
                                   std::size_t columns, bool& consistent) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < columns && next_row < rows.size(); ++c) {
    std::size_t found = rows.size();
    for (std::size_t r = next_row; r < rows.size(); ++r) {
      if (rows[r][c] != 0) {
        found = r;
        break;
      }
    }
    if (found == rows.size()) continue;
    std::swap(rows[found], rows[next_row]);
    std::swap(rhs[found], rhs[next_row]);
    const Rational pivot = rows[next_row][c];
    for (auto& v : rows[next_row]) v /= pivot;
    rhs[next_row] /= pivot;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next_row || rows[r][c] == 0) continue;
      const Rational factor = rows[r][c];
      for (std::size_t k = 0; k < columns; ++k) rows[r][k] -= factor * rows[next_row][k];
      rhs[r] -= factor * rhs[next_row];
    }
    pivots.push_back(c);
    ++next_row;
  }
  consistent = true;
  for (std::size_t r = next_row; r < rows.size(); ++r) {
    if (rhs[r] != 0) consistent = false;
  }
  rows.resize(next_row);
  rhs.resize(next_row);
  return pivots;
}

// Solves the square system B x = b; false when B is singular.
bool SolveSquare(RationalMatrix a, std::vector<Rational> b, std::vector<Rational>& x) {
  const std::size_t k = b.size();
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t found = k;
    for (std::size_t r = c; r < k; ++r) {
      if (a[r][c] != 0) {
        found = r;
        break;
      }
    }
    if (found == k) return false;
    std::swap(a[found], a[c]);
    std::swap(b[found], b[c]);
    for (std::size_t r = c + 1; r < k; ++r) {
      if (a[r][c] == 0) continue;
      const Rational factor = a[r][c] / a[c][c];
      for (std::size_t j = c; j < k; ++j) a[r][j] -= factor * a[c][j];
      b[r] -= factor * b[c];
    }
  }
  x.assign(k, 0);
  for (std::size_t r = k; r-- > 0;) {
    Rational acc = b[r];
    for (std::size_t j = r + 1; j < k; ++j) acc -= a[r][j] * x[j];
    x[r] = acc / a[r][r];
  }
  return true;
}

}  // namespace

std::vector<std::vector<Rational>> EnumerateVertices(const EqualityConstraints& constraints,
                                                     std::size_t dimension,
                                                     VertexEnumerationLimits limits) {
  constraints.Validate(dimension);
  if (dimension > limits.max_variables || constraints.rows() > limits.max_rows) {
    throw CapExceededError("vertex enumeration limited to " +
                           std::to_string(limits.max_variables) + " variables and " +
                           std::to_string(limits.max_rows) + " rows; got " +
                           std::to_string(dimension) + " and " +
                           std::to_string(constraints.rows()));
  }
  RationalMatrix rows = constraints.matrix;
  std::vector<Rational> rhs = constraints.rhs;
  bool consistent = true;
  RowReduce(rows, rhs, dimension, consistent);
  if (!consistent) return {};
  const std::size_t rank = rows.size();

  std::set<std::vector<Rational>> vertices;
  std::vector<std::size_t> chosen(rank);
  for (std::size_t i = 0; i < rank; ++i) chosen[i] = i;
  if (rank > dimension) return {};
  while (true) {
    RationalMatrix basis(rank, std::vector<Rational>(rank));
    for (std::size_t r = 0; r < rank; ++r) {
      for (std::size_t i = 0; i < rank; ++i) basis[r][i] = rows[r][chosen[i]];
    }
    std::vector<Rational> x_basic;
    if (SolveSquare(std::move(basis), rhs, x_basic) &&
        std::all_of(x_basic.begin(), x_basic.end(), [](const Rational& v) { return v >= 0; })) {
      std::vector<Rational> x(dimension, 0);
      for (std::size_t i = 0; i < rank; ++i) x[chosen[i]] = x_basic[i];
      vertices.insert(std::move(x));
    }
    // Next rank-subset of columns in lexicographic order.
    std::size_t i = rank;
    while (i > 0 && chosen[i - 1] == dimension - rank + i - 1) --i;
    if (i == 0) break;
    ++chosen[i - 1];
    for (std::size_t j = i; j < rank; ++j) chosen[j] = chosen[j - 1] + 1;
  }
  return {vertices.begin(), vertices.end()};
}

std::size_t Rank(const RationalMatrix& matrix) {
  if (matrix.empty()) return 0;
  RationalMatrix rows = matrix;
  std::vector<Rational> rhs(rows.size(), 0);
  bool consistent = true;
  return RowReduce(rows, rhs, rows[0].size(), consistent).size();
}

LinearSolveResult SolveLinearSystem(const EqualityConstraints& constraints,
                                    std::size_t dimension) {
  constraints.Validate(dimension);
  RationalMatrix rows = constraints.matrix;
  std::vector<Rational> rhs = constraints.rhs;
  LinearSolveResult result;
  auto pivots = RowReduce(rows, rhs, dimension, result.consistent);
  if (!result.consistent) return result;
  result.unique = pivots.size() == dimension;
  result.solution.assign(dimension, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) result.solution[pivots[r]] = rhs[r];
  return result;
}

}  // namespace cfbounds
