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

#include <gtest/gtest.h>

#include <random>

#include "cfbounds/constraints.h"
#include "cfbounds/errors.h"
#include "oracle.h"

namespace cfbounds {
namespace {

CausalModel Party() {
  return CausalModel({{"A", {"a0", "a1"}, {}}, {"B", {"b0", "b1"}, {"A"}}});
}

ResponsePrior PartyPrior(const CausalModel& m, std::vector<Rational> rb) {
  return ResponsePrior(m, {{{0}, {Rational(1, 2), Rational(1, 2)}}, {{1}, std::move(rb)}});
}

TEST(ResponseFunctionTableTest, BinaryChildOfBinaryParent) {
  ResponseFunctionTable t(2, {2});
  ASSERT_EQ(t.count(), 4u);
  EXPECT_EQ(t.Outputs(0), (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(t.Outputs(1), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(t.Outputs(2), (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(t.Outputs(3), (std::vector<std::size_t>{1, 1}));
}

TEST(ResponseFunctionTableTest, BinaryRoot) {
  ResponseFunctionTable t(2, {});
  ASSERT_EQ(t.count(), 2u);
  EXPECT_EQ(t.Value(0, 0), 0u);
  EXPECT_EQ(t.Value(1, 0), 1u);
}

TEST(ResponseFunctionTableTest, CountIsDomainToTheConfigurations) {
  EXPECT_EQ(ResponseFunctionTable(3, {2, 2}).count(), 81u);
  EXPECT_EQ(ResponseFunctionTable(2, {3}).count(), 8u);
  EXPECT_EQ(ResponseFunctionTable(1, {4}).count(), 1u);
}

TEST(ResponseFunctionTableTest, CanonicalRoundTrip) {
  for (const auto& shape : std::vector<std::pair<std::size_t, std::vector<std::size_t>>>{
           {2, {2}}, {3, {2}}, {2, {3, 2}}, {3, {3}}, {4, {}}}) {
    ResponseFunctionTable t(shape.first, shape.second);
    for (std::uint64_t r = 0; r < t.count(); ++r) {
      const auto outputs = t.Outputs(r);
      EXPECT_EQ(t.IndexOf(outputs), r);
      for (std::size_t c = 0; c < t.configurations(); ++c) {
        EXPECT_EQ(outputs[c], oracle::ResponseOutput(r, shape.first, c, t.configurations()));
      }
    }
  }
}

TEST(ResponseFunctionTableTest, ConfigurationIndexIsLexicographic) {
  ResponseFunctionTable t(2, {2, 3});
  std::size_t expected = 0;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      const std::vector<std::size_t> values{a, b};
      EXPECT_EQ(t.ConfigurationIndex(values), expected);
      EXPECT_EQ(t.Configuration(expected), values);
      ++expected;
    }
  }
  const std::vector<std::size_t> bad{0, 3};
  EXPECT_THROW(t.ConfigurationIndex(bad), InvalidArgumentError);
}

TEST(ResponseFunctionTableTest, CapIsEnforcedWithCount) {
  try {
    ResponseFunctionTable(3, {3, 3}, 1000);
    FAIL() << "expected CapExceededError";
  } catch (const CapExceededError& e) {
    EXPECT_NE(std::string(e.what()).find("19683"), std::string::npos) << e.what();
  }
  EXPECT_THROW(ResponseFunctionTable(2, {2, 2, 2, 2, 2}), CapExceededError);
  EXPECT_THROW(ResponseFunctionTable(0, {}), InvalidArgumentError);
}

TEST(CausalModelTest, ValidatesStructure) {
  EXPECT_THROW(CausalModel({{"A", {"a0", "a1"}, {"B"}}, {"B", {"b0", "b1"}, {"A"}}}),
               InvalidArgumentError);
  EXPECT_THROW(CausalModel({{"A", {"a0", "a1"}, {"A"}}}), InvalidArgumentError);
  EXPECT_THROW(CausalModel({{"A", {"a0", "a0"}, {}}}), InvalidArgumentError);
  EXPECT_THROW(CausalModel(std::vector<Variable>{{"A", {"a0"}, {}}, {"A", {"a0"}, {}}}),
               InvalidArgumentError);
  EXPECT_THROW(CausalModel({{"A", {"a0", "a1"}, {"Q"}}}), InvalidArgumentError);
  EXPECT_THROW(CausalModel({{"A", {"a0", "a1"}, {}}, {"B", {"b0", "b1"}, {"A", "A"}}}),
               InvalidArgumentError);
  EXPECT_THROW(CausalModel(std::vector<Variable>{Variable{"A", {}, {}}}), InvalidArgumentError);
}

TEST(CausalModelTest, ValidatesClusters) {
  const std::vector<Variable> vars{{"A", {"a0", "a1"}, {}}, {"B", {"b0", "b1"}, {"A"}}};
  EXPECT_THROW(CausalModel(vars, {{"A"}}), InvalidArgumentError);
  EXPECT_THROW(CausalModel(vars, {{"A", "B"}, {"B"}}), InvalidArgumentError);
  EXPECT_THROW(CausalModel(vars, {{"A"}, {"C"}}), InvalidArgumentError);
  EXPECT_NO_THROW(CausalModel(vars, {{"A", "B"}}));
  EXPECT_TRUE(Party().IsComplete());
  EXPECT_FALSE(IvModel().IsComplete());
}

TEST(CausalModelTest, TopologicalOrderAllowsAnyDeclarationOrder) {
  CausalModel m({{"Y", {"y0", "y1"}, {"D"}}, {"D", {"d0", "d1"}, {"Z"}}, {"Z", {"z0", "z1"}, {}}});
  EXPECT_EQ(m.topological_order(), (std::vector<std::size_t>{2, 1, 0}));
  const Assignment v = EvaluateFactual(m, {3, 1, 1});
  EXPECT_EQ(v, (Assignment{1, 1, 1}));
}

TEST(EvaluateTest, PartyExamples) {
  const CausalModel m = Party();
  EXPECT_EQ(EvaluateFactual(m, {0, 1}), (Assignment{0, 0}));
  EXPECT_EQ(EvaluateFactual(m, {1, 2}), (Assignment{1, 0}));
  for (std::uint64_t ra = 0; ra < 2; ++ra) {
    EXPECT_EQ(EvaluateCounterfactual(m, {ra, 2}, {{0, 1}}), (Assignment{1, 0}));
  }
}

TEST(EvaluateTest, IvExamples) {
  const CausalModel m = IvModel();
  EXPECT_EQ(EvaluateFactual(m, {1, 1, 3}), (Assignment{1, 1, 1}));
  EXPECT_EQ(EvaluateCounterfactual(m, {1, 2, 1}, {{0, 0}}), (Assignment{0, 1, 1}));
}

TEST(EvaluateTest, MissingResponseNamesVariable) {
  const CausalModel m = IvModel();
  try {
    EvaluateFactual(m, {1, 1});
    FAIL();
  } catch (const InvalidArgumentError& e) {
    EXPECT_NE(std::string(e.what()).find("'Y'"), std::string::npos) << e.what();
  }
  EXPECT_THROW(EvaluateFactual(m, {1, 4, 0}), InvalidArgumentError);
  EXPECT_THROW(EvaluateCounterfactual(m, {1, 1, 1}, {{0, 2}}), InvalidArgumentError);
}

TEST(EvaluateTest, EmptyInterventionIsFactual) {
  const CausalModel m = IvModel();
  ForEachResponseState(m, [&](const ResponseState& r) {
    EXPECT_EQ(EvaluateCounterfactual(m, r, {}), EvaluateFactual(m, r));
  });
}

TEST(EvaluateTest, MatchesOracleAndInterventionLocality) {
  const CausalModel m({{"A", {"a0", "a1", "a2"}, {}},
                       {"B", {"b0", "b1"}, {"A"}},
                       {"C", {"c0", "c1"}, {"A"}},
                       {"D", {"d0", "d1"}, {"B", "C"}}});
  std::size_t visited = 0;
  ForEachResponseState(m, [&](const ResponseState& r) {
    ++visited;
    EXPECT_EQ(EvaluateFactual(m, r), oracle::Solve(m, r, {}));
    for (std::size_t v = 0; v < m.size(); ++v) {
      const PartialAssignment action{{v, 1}};
      const Assignment factual = EvaluateFactual(m, r);
      const Assignment cf = EvaluateCounterfactual(m, r, action);
      EXPECT_EQ(cf, oracle::Solve(m, r, action));
      const std::vector<bool> desc = m.Descendants(v);
      for (std::size_t w = 0; w < m.size(); ++w) {
        if (!desc[w]) EXPECT_EQ(cf[w], factual[w]);
      }
    }
  });
  EXPECT_EQ(visited, m.ResponseStateCount());
  EXPECT_EQ(visited, 3u * 8u * 8u * 16u);
}

TEST(ConsistentRegionTest, PartyAbsentPair) {
  const CausalModel m = Party();
  const auto region = ConsistentRegion(m, {{0, 0}, {1, 0}}, {{0, 1}}, {{1, 1}});
  ASSERT_EQ(region.size(), 1u);
  EXPECT_EQ(region[0], (ResponseState{0, 1}));
  EXPECT_EQ(ConsistentRegion(m, {}, {}, {}).size(), 8u);
}

TEST(ConsistentRegionTest, IvLiabilitySet) {
  const CausalModel m = IvModel();
  const auto region = ConsistentRegion(m, {{0, 1}, {1, 1}, {2, 1}}, {{0, 0}}, {{2, 1}});
  const std::vector<ResponseState> expected{{1, 1, 3}, {1, 3, 1}, {1, 3, 3}};
  EXPECT_EQ(region, expected);
}

TEST(ClusterCellTest, IvCellsAreFourJPlusK) {
  const CausalModel m = IvModel();
  const auto& dy = m.clusters()[1];
  EXPECT_EQ(ClusterCellCount(m, dy), 16u);
  EXPECT_EQ(ClusterCell(m, dy, {0, 1, 3}), 7u);
  EXPECT_EQ(ClusterCellIndices(m, dy, 13), (std::vector<std::uint64_t>{3, 1}));
}

TEST(ResponsePriorTest, Validation) {
  const CausalModel m = Party();
  EXPECT_THROW(PartyPrior(m, {Rational(1, 2), 0, 0, 0}), InvalidArgumentError);
  EXPECT_THROW(PartyPrior(m, {1, 0, 0}), InvalidArgumentError);
  EXPECT_THROW(PartyPrior(m, {2, -1, 0, 0}), InvalidArgumentError);
  const std::vector<Rational> joint(8, Rational(1, 8));
  EXPECT_THROW(ResponsePrior(m, {{{0, 1}, joint}}), InvalidArgumentError);
}

TEST(QueryExactTest, PartyEightNinths) {
  const CausalModel m = Party();
  const auto prior = PartyPrior(m, {Rational(1, 10), Rational(8, 10), 0, Rational(1, 10)});
  EXPECT_EQ(QueryExact(m, prior, {{0, 0}, {1, 0}}, {{0, 1}}, {{1, 1}}), Rational(8, 9));
}

TEST(QueryExactTest, PartyMechanismStories) {
  const CausalModel m = Party();
  // Independent potential outcomes: absent-when-Ann-goes is unrelated to the
  // evidence.
  const auto independent = PartyPrior(
      m, {Rational(9, 100), Rational(81, 100), Rational(1, 100), Rational(9, 100)});
  EXPECT_EQ(QueryExact(m, independent, {{0, 0}, {1, 0}}, {{0, 1}}, {{1, 1}}), Rational(9, 10));
  const auto angry = PartyPrior(m, {0, Rational(9, 10), Rational(1, 10), 0});
  EXPECT_EQ(QueryExact(m, angry, {{0, 0}, {1, 0}}, {{0, 1}}, {{1, 1}}), Rational(1));
}

TEST(QueryExactTest, ConsequentContradictingActionIsZero) {
  const CausalModel m = Party();
  const auto prior = PartyPrior(m, {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)});
  EXPECT_EQ(QueryExact(m, prior, {}, {{0, 1}}, {{0, 0}}), Rational(0));
}

TEST(QueryExactTest, NullConditioningThrows) {
  const CausalModel m = Party();
  const auto prior = PartyPrior(m, {1, 0, 0, 0});
  EXPECT_THROW(QueryExact(m, prior, {{1, 1}}, {}, {}), ConditioningError);
}

TEST(QueryExactTest, IvAntecedentImpliedByObservation) {
  const CausalModel m = IvModel();
  std::mt19937_64 rng(5);
  const auto q = oracle::RandomSimplexPoint(rng, 16, 1000, false);
  const ResponsePrior prior(m, {{{0}, {Rational(1, 3), Rational(2, 3)}}, {{1, 2}, q}});
  EXPECT_EQ(QueryExact(m, prior, {{0, 1}, {1, 1}, {2, 1}}, {{0, 1}}, {{2, 1}}), Rational(1));
}

TEST(QueryExactTest, PartitionSumsToOneAndMatchesOracle) {
  const CausalModel m({{"A", {"a0", "a1", "a2"}, {}},
                       {"B", {"b0", "b1"}, {"A"}},
                       {"C", {"c0", "c1", "c2"}, {"A", "B"}}});
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    oracle::IndependentPrior ip;
    std::vector<JointResponseDistribution> dists;
    for (std::size_t v = 0; v < m.size(); ++v) {
      ip.push_back(oracle::RandomSimplexPoint(rng, m.responses(v).count(), 50));
      dists.push_back({{v}, ip.back()});
    }
    const ResponsePrior prior(m, dists);
    const PartialAssignment o{{1, 1}};
    if (oracle::Counterfactual(m, ip, {}, {}, o) == 0) continue;
    Rational total = 0;
    for (std::size_t c = 0; c < 3; ++c) {
      const Rational v = QueryExact(m, prior, o, {{0, 2}}, {{2, c}});
      EXPECT_EQ(v, oracle::Counterfactual(m, ip, o, {{0, 2}}, {{2, c}}));
      EXPECT_GE(v, 0);
      EXPECT_LE(v, 1);
      total += v;
    }
    EXPECT_EQ(total, 1);
  }
}

TEST(PotentialOutcomesTest, Table) {
  EXPECT_EQ(ResponseToPotentialOutcomes(0).y0, 0);
  EXPECT_EQ(ResponseToPotentialOutcomes(0).y1, 0);
  EXPECT_EQ(ResponseToPotentialOutcomes(1).y0, 0);
  EXPECT_EQ(ResponseToPotentialOutcomes(1).y1, 1);
  EXPECT_EQ(ResponseToPotentialOutcomes(2).y0, 1);
  EXPECT_EQ(ResponseToPotentialOutcomes(2).y1, 0);
  EXPECT_EQ(ResponseToPotentialOutcomes(3).y0, 1);
  EXPECT_EQ(ResponseToPotentialOutcomes(3).y1, 1);
  EXPECT_THROW(ResponseToPotentialOutcomes(4), InvalidArgumentError);
}

}  // namespace
}  // namespace cfbounds
