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

// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact rational equality unless a line states otherwise; decimal checks
// compare the rendered strings. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cfbounds/bounds.h"
#include "cfbounds/cli.h"
#include "cfbounds/errors.h"
#include "cfbounds/io.h"
#include "cfbounds/lp.h"
#include "cfbounds/synth.h"
#include "oracle.h"

namespace cfbounds {
namespace {

constexpr int kRandomP = 1000;           // criterion 5
constexpr int kOracleIv = 200;           // criterion 6, IV programs
constexpr int kOracleGeneric = 100;      // criterion 6, generic programs
constexpr int kContainment = 1000;       // criterion 7
constexpr int kConsistencyModels = 100;  // criterion 8
constexpr double kAceSeconds = 1.0;      // criterion 1 runtime limit
constexpr double kSymbolicSeconds = 300.0;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string CliOut(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out;
  std::ostringstream err;
  const int rc = RunCli(args, out, err);
  if (code != nullptr) *code = rc;
  return out.str();
}

std::string FirstLines(const std::string& text, int n) {
  std::istringstream in(text);
  std::string line;
  std::string out;
  for (int i = 0; i < n && std::getline(in, line); ++i) out += (i ? " / " : "") + line;
  return out;
}

bool Contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

const IvDistribution& Peptaid() {
  static const IvDistribution p = *LoadDataset("peptaid").iv;
  return p;
}

Outcome Criterion1() {
  const auto start = Clock::now();
  int code = 0;
  const std::string out = CliOut({"ace", "peptaid"}, &code);
  const double elapsed = Seconds(start);
  Outcome o;
  o.pass = code == 0 && Contains(out, "-0.23 ≤ ACE(D→Y) ≤ -0.15\n") &&
           Contains(out, "exact: [-23/100, -3/20]\n") && elapsed < kAceSeconds;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f s", elapsed);
  o.detail = FirstLines(out, 2) + "; " + buf + " (limit 1 s); tolerance 0";
  return o;
}

Outcome Criterion2() {
  Outcome o;
  for (const char* action : {"z=0", "d=0"}) {
    int code = 0;
    const std::string out = CliOut({"counterfactual", "peptaid", "--given", "z=1,d=1,y=1", "--do",
                                    action, "--query", "y=1"},
                                   &code);
    o.pass = o.pass && code == 0 && Contains(out, "∈ [0.00, 0.07]\n") &&
             Contains(out, "exact: [0, 1/14]\n");
    o.detail += std::string(o.detail.empty() ? "" : "; ") + "do " + action + ": " + FirstLines(out, 2);
  }
  o.detail += "; tolerance 0 at 2 decimals";
  return o;
}

Outcome Criterion3() {
  Outcome o;
  for (const char* t : {"D", "Z"}) {
    int code = 0;
    const std::string out =
        CliOut({"ace", "peptaid", "--treatment", t, "--given", "z=1,d=1,y=1"}, &code);
    o.pass = o.pass && code == 0 &&
             Contains(out, std::string("0.93 ≤ ACE(") + t + "→Y | z1, d1, y1) ≤ 1.00\n");
    o.detail += std::string(o.detail.empty() ? "" : "; ") + FirstLines(out, 1);
  }
  o.detail += "; tolerance 0 at 2 decimals";
  return o;
}

Outcome Criterion4() {
  const auto s = ComputeSanityStatistics(Peptaid());
  const std::string got = ToDecimalString(s.y1_given_d1, 2) + " " +
                          ToDecimalString(s.y1_given_d0, 2) + " " +
                          ToDecimalString(s.y1_given_z1, 2) + " " +
                          ToDecimalString(s.y1_given_z0, 2);
  return {got == "0.50 0.26 0.81 0.36",
          "P(y1|d1) P(y1|d0) P(y1|z1) P(y1|z0) = " + got + "; tolerance 0 at 2 decimals"};
}

bool WitnessValid(const IvDistribution& p, const std::vector<Rational>& q) {
  for (const auto& v : q) {
    if (v < 0) return false;
  }
  if (Sum(q) != 1) return false;
  return IvPushforward(q) == p.p;
}

Outcome Criterion5() {
  const auto start = Clock::now();
  int mismatches = 0;
  int bad_witnesses = 0;
  std::string first;
  for (int seed = 0; seed < kRandomP; ++seed) {
    const IvDistribution p = RandomFeasibleP(static_cast<std::uint64_t>(seed));
    const auto lines = CompareClosedFormsWithLp(p);
    mismatches += static_cast<int>(lines.size());
    if (!lines.empty() && first.empty()) first = lines.front();
    const auto ace = AceBoundsLp(p);
    if (!WitnessValid(p, ace.lower_witness) || !WitnessValid(p, ace.upper_witness) ||
        TrueAce(ace.lower_witness) != ace.lower || TrueAce(ace.upper_witness) != ace.upper) {
      ++bad_witnesses;
    }
  }
  const double elapsed = Seconds(start);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%d random feasible p, %d mismatches (ACE, both treatment responses, both "
                "liabilities), %d invalid witnesses; %.1f s (limit 300 s)",
                kRandomP, mismatches, bad_witnesses, elapsed);
  return {mismatches == 0 && bad_witnesses == 0 && elapsed < kSymbolicSeconds,
          buf + (first.empty() ? std::string() : "; first: " + first)};
}

Rational Dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Returns false on any disagreement between the simplex and the vertex list.
bool OracleAgrees(const LinearProgram& lp) {
  const auto vertices = EnumerateVertices(lp.constraints, lp.dimension());
  const LpBounds both = OptimizeBoth(lp);
  if (vertices.empty()) return both.lower.status == LpStatus::kInfeasible;
  if (both.lower.status != LpStatus::kOptimal || both.upper.status != LpStatus::kOptimal) {
    return false;
  }
  Rational lo = Dot(lp.objective, vertices.front());
  Rational hi = lo;
  for (const auto& v : vertices) {
    lo = std::min(lo, Dot(lp.objective, v));
    hi = std::max(hi, Dot(lp.objective, v));
  }
  return lo == both.lower.value && hi == both.upper.value;
}

Outcome Criterion6() {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> coef(-3, 3);
  int failures = 0;
  for (int t = 0; t < kOracleIv; ++t) {
    LinearProgram lp;
    lp.constraints = IvEqualities(RandomFeasibleP(static_cast<std::uint64_t>(10000 + t)));
    for (int j = 0; j < 16; ++j) lp.objective.emplace_back(coef(rng));
    if (!OracleAgrees(lp)) ++failures;
  }
  std::uniform_int_distribution<int> dim(3, 9);
  for (int t = 0; t < kOracleGeneric; ++t) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
    // Right-hand sides come from a nonnegative point, so every program is
    // feasible; the all-ones row keeps the polytope bounded.
    std::vector<Rational> point(n);
    for (auto& v : point) v = std::uniform_int_distribution<int>(0, 3)(rng);
    point[0] += 1;
    LinearProgram lp;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Rational> row(n);
      for (auto& v : row) v = coef(rng);
      lp.constraints.rhs.push_back(Dot(row, point));
      lp.constraints.matrix.push_back(std::move(row));
    }
    lp.constraints.matrix.push_back(std::vector<Rational>(n, 1));
    lp.constraints.rhs.push_back(Sum(point));
    for (std::size_t j = 0; j < n; ++j) lp.objective.emplace_back(coef(rng));
    if (!OracleAgrees(lp)) ++failures;
  }
  return {failures == 0,
          std::to_string(kOracleIv + kOracleGeneric) + " instances (" + std::to_string(kOracleIv) +
              " IV, " + std::to_string(kOracleGeneric) + " generic), " + std::to_string(failures) +
              " disagreements; tolerance 0"};
}

Outcome Criterion7() {
  Rng rng(7);
  int violations = 0;
  for (int t = 0; t < kContainment; ++t) {
    const auto q = RandomQ(rng);
    const Rational p_z1(static_cast<long>(1 + rng.Below(99)), 100);
    const auto bounds = AceBoundsLp(Pushforward(q, p_z1));
    const Rational truth = TrueAce(q);
    if (truth < bounds.lower || truth > bounds.upper) ++violations;
  }
  return {violations == 0, std::to_string(kContainment) + " ground-truth q, " +
                               std::to_string(violations) + " violations"};
}

CausalModel RandomModel(std::mt19937_64& rng) {
  while (true) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    std::vector<Variable> vars;
    for (std::size_t i = 0; i < n; ++i) {
      Variable v;
      v.name = std::string(1, static_cast<char>('A' + i));
      const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
      for (std::size_t x = 0; x < k; ++x) v.domain.push_back(std::string(1, static_cast<char>('a' + i)) + std::to_string(x));
      for (std::size_t p = 0; p < i && v.parents.size() < 2; ++p) {
        if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) v.parents.push_back(vars[p].name);
      }
      vars.push_back(std::move(v));
    }
    try {
      CausalModel m(vars, {}, 20000);
      m.ResponseStateCount();
      return m;
    } catch (const CapExceededError&) {
    }
  }
}

PartialAssignment RandomSubset(std::mt19937_64& rng, const Assignment& world, std::size_t n,
                               bool nonempty) {
  PartialAssignment out;
  while (out.empty()) {
    for (std::size_t v = 0; v < n; ++v) {
      if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) out[v] = world[v];
    }
    if (!nonempty) break;
  }
  return out;
}

Outcome Criterion8() {
  std::mt19937_64 rng(8);
  int checked = 0;
  int failures = 0;
  for (int t = 0; t < kConsistencyModels; ++t) {
    const CausalModel m = RandomModel(rng);
    oracle::IndependentPrior ip;
    std::vector<JointResponseDistribution> dists;
    for (std::size_t v = 0; v < m.size(); ++v) {
      ip.push_back(oracle::RandomSimplexPoint(rng, m.responses(v).count(), 20));
      dists.push_back({{v}, ip.back()});
    }
    const ResponsePrior prior(m, dists);
    // A world in the prior's support makes P(o) > 0.
    ResponseState state(m.size());
    for (std::size_t v = 0; v < m.size(); ++v) {
      do {
        state[v] = std::uniform_int_distribution<std::uint64_t>(0, ip[v].size() - 1)(rng);
      } while (ip[v][state[v]] == 0);
    }
    const Assignment world = EvaluateFactual(m, state);
    const PartialAssignment o = RandomSubset(rng, world, m.size(), true);
    PartialAssignment action;
    for (const auto& [v, x] : o) {
      if (action.empty() || std::uniform_int_distribution<int>(0, 1)(rng) == 1) action[v] = x;
    }
    Assignment other(m.size());
    for (std::size_t v = 0; v < m.size(); ++v) {
      other[v] = std::uniform_int_distribution<std::size_t>(0, m.domain_size(v) - 1)(rng);
    }
    const PartialAssignment c = RandomSubset(rng, other, m.size(), true);
    const Rational counterfactual = QueryExact(m, prior, o, action, c);
    const Rational conditional = oracle::Conditional(m, ip, c, o);
    ++checked;
    if (counterfactual != conditional) ++failures;
  }
  return {failures == 0 && checked >= kConsistencyModels,
          std::to_string(checked) + " random complete models with do(a*) agreeing with o, " +
              std::to_string(failures) + " inequalities; tolerance 0"};
}

Outcome Criterion9() {
  const Dataset party = LoadDataset("party");
  const CausalModel& m = party.model;
  CounterfactualQuery q;
  q.observations = {{0, 0}, {1, 0}};
  q.intervention = {{0, 1}};
  q.consequent = {{1, 1}};
  const BoundsResult plain = BoundQuery(m, party.observed, q);
  SubjectiveConstraint no_inversion;
  no_inversion.terms.push_back({{{1, 2}}, 1});
  no_inversion.rhs = 0;
  const BoundsResult narrowed = BoundQuery(m, party.observed, q, {no_inversion});

  auto exact = [&](std::vector<Rational> rb) {
    const ResponsePrior prior(m, {{{0}, {Rational(1, 2), Rational(1, 2)}}, {{1}, std::move(rb)}});
    return EvaluateExact(m, prior, {QueryKind::kExact, q.observations, q.intervention,
                                    q.consequent, std::nullopt, std::nullopt});
  };
  // Unable to attend: Bob's two potential outcomes are independent draws.
  const Rational unable = exact({Rational(9, 100), Rational(81, 100), Rational(1, 100),
                                 Rational(9, 100)});
  // Angry: the only exception is doing the opposite of Ann.
  const Rational angry = exact({0, Rational(9, 10), Rational(1, 10), 0});

  const bool pass = plain.lower == Rational(8, 9) && plain.upper == 1 &&
                    narrowed.lower >= Rational(8, 9) && narrowed.upper <= 1 &&
                    unable == Rational(9, 10) && angry == 1;
  return {pass, "bounds [" + ToFractionString(plain.lower) + ", " + ToFractionString(plain.upper) +
                    "]; with P(r_b=2)=0: [" + ToFractionString(narrowed.lower) + ", " +
                    ToFractionString(narrowed.upper) + "]; unable-to-attend " +
                    ToFractionString(unable) + ", angry " + ToFractionString(angry) +
                    "; tolerance 0"};
}

}  // namespace
}  // namespace cfbounds

int main() {
  using cfbounds::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"PeptAid ACE bounds", cfbounds::Criterion1},
      {"PeptAid liability bounds", cfbounds::Criterion2},
      {"PeptAid subpopulation ACE", cfbounds::Criterion3},
      {"PeptAid sanity statistics", cfbounds::Criterion4},
      {"LP/symbolic equivalence", cfbounds::Criterion5},
      {"simplex/vertex oracle equivalence", cfbounds::Criterion6},
      {"containment of the true ACE", cfbounds::Criterion7},
      {"consistency property", cfbounds::Criterion8},
      {"party example", cfbounds::Criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
