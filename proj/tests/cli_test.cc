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

#include "cfbounds/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cfbounds/io.h"
#include "cfbounds/synth.h"

namespace cfbounds {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("cfbounds_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& content) {
    const auto path = dir_ / name;
    std::ofstream(path) << content;
    return path.string();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, AcePeptaid) {
  const CliRun r = Cli({"ace", "peptaid"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = Lines(r.out);
  EXPECT_EQ(lines[0], "-0.23 ≤ ACE(D→Y) ≤ -0.15");
  EXPECT_EQ(lines[1], "exact: [-23/100, -3/20]");
  EXPECT_EQ(lines[2], "method: lp");
}

TEST_F(CliTest, AceBothMethodsAgree) {
  const CliRun r = Cli({"--method", "both", "ace", "peptaid"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("lp and symbolic agree: yes"), std::string::npos);
  EXPECT_NE(r.out.find("lower term: p00.0 - p01.0 - p10.0 - p01.1 - p00.1"), std::string::npos);
}

TEST_F(CliTest, PrecisionAndJson) {
  EXPECT_EQ(Lines(Cli({"--precision", "4", "ace", "peptaid"}).out)[0],
            "-0.2300 ≤ ACE(D→Y) ≤ -0.1500");
  const CliRun r = Cli({"--json", "ace", "peptaid"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["lower"]["decimal"], "-0.23");
  EXPECT_EQ(j["lower"]["exact"], "-23/100");
  EXPECT_EQ(j["upper"]["exact"], "-3/20");
  EXPECT_EQ(j["results"][0]["method"], "lp");
}

TEST_F(CliTest, Liability) {
  for (const char* action : {"z=0", "d=0"}) {
    const CliRun r = Cli({"--method", "both", "counterfactual", "peptaid", "--given", "z=1,d=1,y=1",
                       "--do", action, "--query", "y=1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto lines = Lines(r.out);
    EXPECT_NE(lines[0].find("∈ [0.00, 0.07]"), std::string::npos) << lines[0];
    EXPECT_EQ(lines[1], "exact: [0, 1/14]");
  }
  const CliRun r = Cli({"counterfactual", "peptaid", "--given", "z=1,d=1,y=1", "--do", "z=0",
                     "--query", "y=1"});
  EXPECT_EQ(Lines(r.out)[0], "P(Y=y1* | do(Z=z0), Z=z1, D=d1, Y=y1) ∈ [0.00, 0.07]");
}

TEST_F(CliTest, ConsistencyGivesOne) {
  const CliRun r = Cli({"counterfactual", "peptaid", "--given", "Z=z1,D=d1,Y=y1", "--do", "Z=z1",
                     "--query", "Y=y1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(Lines(r.out)[0].find("∈ [1.00, 1.00]"), std::string::npos);
}

TEST_F(CliTest, SubpopulationAce) {
  for (const char* t : {"D", "Z"}) {
    const CliRun r = Cli({"--method", "both", "ace", "peptaid", "--treatment", t, "--given",
                       "z=1,d=1,y=1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(Lines(r.out)[0], std::string("0.93 ≤ ACE(") + t + "→Y | z1, d1, y1) ≤ 1.00");
  }
}

TEST_F(CliTest, PartyCounterfactualAndConstraints) {
  const CliRun r = Cli({"counterfactual", "party", "--given", "a=0,b=0", "--do", "a=1", "--query",
                     "b=1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Lines(r.out)[1], "exact: [8/9, 1]");
  const std::string c = Write("c.json", R"({"constraints": [{"terms": [{"r": {"B": 0}}], "rhs": "0"}]})");
  const CliRun narrowed = Cli({"counterfactual", "party", "--given", "a=0,b=0", "--do", "a=1",
                            "--query", "b=1", "--constraints", c});
  ASSERT_EQ(narrowed.code, 0) << narrowed.err;
  EXPECT_EQ(Lines(narrowed.out)[1], "exact: [1, 1]");
}

TEST_F(CliTest, ExactParty) {
  const std::string prior = Write("prior.json", R"({"priors": [
      {"variables": ["A"], "p": {"0": "0.5", "1": "0.5"}},
      {"variables": ["B"], "p": {"0": "0.1", "1": "0.8", "2": "0", "3": "0.1"}}]})");
  const CliRun r = Cli({"exact", "party", "--prior", prior, "--given", "a=0,b=0", "--do", "a=1",
                     "--query", "b=1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Lines(r.out)[0], "P(B=b1* | do(A=a1), A=a0, B=b0) = 0.89");
  EXPECT_EQ(Lines(r.out)[1], "exact: 8/9");
  const CliRun implied = Cli({"exact", "party", "--prior", prior, "--given", "a=1", "--do", "a=1",
                           "--query", "b=1"});
  EXPECT_EQ(Lines(implied.out)[1], "exact: 9/10");
}

TEST_F(CliTest, Datasets) {
  EXPECT_EQ(Cli({"datasets", "list"}).out, "peptaid\nparty\n");
  EXPECT_EQ(Cli({"--json", "datasets", "list"}).out, "[\"peptaid\",\"party\"]\n");
  const Json peptaid = Json::parse(Cli({"datasets", "show", "peptaid"}).out);
  EXPECT_EQ(peptaid["p_z1"], "0.1");
  EXPECT_EQ(peptaid["p"]["00.0"], "0.32");
  EXPECT_EQ(peptaid["p"]["11.1"], "0.14");
  const Json party = Json::parse(Cli({"datasets", "show", "party"}).out);
  EXPECT_EQ(party["conditionals"][1]["p"]["b0"], "0.9");
  EXPECT_EQ(party["conditionals"][2]["p"]["b1"], "0.9");
  EXPECT_EQ(Cli({"datasets", "show", "nope"}).code, 1);
  EXPECT_EQ(Cli({"datasets", "drop"}).code, 1);
}

TEST_F(CliTest, SimulateVerdicts) {
  const CliRun r = Cli({"simulate", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("true ACE inside bounds: yes"), std::string::npos);
  const CliRun witness = Cli({"simulate", "--q", "peptaid-witness"});
  ASSERT_EQ(witness.code, 0) << witness.err;
  EXPECT_NE(witness.out.find("reproduces built-in peptaid: yes"), std::string::npos);
  const CliRun sampled = Cli({"simulate", "--seed", "3", "-n", "1000000"});
  ASSERT_EQ(sampled.code, 0) << sampled.err;
  EXPECT_NE(sampled.out.find("): ok"), std::string::npos) << sampled.out;
}

TEST_F(CliTest, SimulateEmitsLoadableDataset) {
  const std::string path = (dir_ / "sim.json").string();
  const CliRun r = Cli({"simulate", "--q", "peptaid-witness", "--emit", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const CliRun ace = Cli({"ace", path});
  ASSERT_EQ(ace.code, 0) << ace.err;
  EXPECT_EQ(Lines(ace.out)[1], "exact: [-23/100, -3/20]");
  const std::string q = Write("q.json", R"({"q": {"11": "0.5", "00": "0.5"}})");
  const CliRun from_file = Cli({"simulate", "--q", q, "--p-z1", "0.25"});
  ASSERT_EQ(from_file.code, 0) << from_file.err;
  EXPECT_NE(from_file.out.find("true ACE: 0.50"), std::string::npos);
}

TEST_F(CliTest, BothMethodsAgreeOnRandomDatasets) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::string path =
        Write("r" + std::to_string(seed) + ".json", IvDatasetJson("r", RandomFeasibleP(seed)).dump());
    const CliRun r = Cli({"--method", "both", "ace", path});
    ASSERT_EQ(r.code, 0) << "seed " << seed << ": " << r.err;
  }
}

TEST_F(CliTest, ByteDeterministic) {
  const std::vector<std::vector<std::string>> commands{
      {"--json", "--method", "both", "ace", "peptaid"},
      {"counterfactual", "party", "--given", "a=0,b=0", "--do", "a=1", "--query", "b=1"},
      {"--json", "simulate", "--seed", "11", "-n", "2000"},
      {"feasible", "peptaid"}};
  for (const auto& c : commands) EXPECT_EQ(Cli(c).out, Cli(c).out);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Cli({}).code, 1);
  EXPECT_EQ(Cli({"frobnicate"}).code, 1);
  EXPECT_EQ(Cli({"--help"}).code, 0);
  EXPECT_EQ(Cli({"ace"}).code, 1);
  EXPECT_EQ(Cli({"--method", "magic", "ace", "peptaid"}).code, 1);
  EXPECT_EQ(Cli({"ace", (dir_ / "missing.json").string()}).code, 1);
  EXPECT_EQ(Cli({"ace", Write("bad.json", "{ not json")}).code, 1);
  EXPECT_EQ(Cli({"counterfactual", "peptaid", "--do", "q=1", "--query", "y=1"}).code, 1);
  EXPECT_EQ(Cli({"counterfactual", "peptaid", "--do", "z=7", "--query", "y=1"}).code, 1);

  const std::string infeasible = Write("inf.json", R"({"model": "iv-binary", "p_z1": "0.5",
      "p": {"00.0": "0", "01.0": "1", "10.0": "0", "11.0": "0",
            "00.1": "0", "01.1": "0", "10.1": "0", "11.1": "1"}})");
  const CliRun inf = Cli({"ace", infeasible});
  EXPECT_EQ(inf.code, 2);
  EXPECT_NE(inf.err.find("Farkas"), std::string::npos) << inf.err;
  EXPECT_EQ(Cli({"feasible", infeasible}).code, 2);
  EXPECT_EQ(Cli({"feasible", "peptaid"}).code, 0);

  EXPECT_EQ(Cli({"--method", "symbolic", "counterfactual", "party", "--do", "a=1", "--query",
                 "b=1"}).code,
            3);
  const std::string chain = Write("chain.json", R"({"model": {"variables": [
      {"name": "X", "domain": ["x0", "x1"]},
      {"name": "Y", "domain": ["y0", "y1"], "parents": ["X"]},
      {"name": "W", "domain": ["w0", "w1"], "parents": ["Y"]}]},
    "conditionals": [
      {"variables": ["X"], "p": {"x0": "0.5", "x1": "0.5"}},
      {"variables": ["Y"], "given": {"X": "x0"}, "p": {"y0": "0.5", "y1": "0.5"}},
      {"variables": ["Y"], "given": {"X": "x1"}, "p": {"y0": "0.5", "y1": "0.5"}},
      {"variables": ["W"], "given": {"Y": "y0"}, "p": {"w0": "0.5", "w1": "0.5"}},
      {"variables": ["W"], "given": {"Y": "y1"}, "p": {"w0": "0.5", "w1": "0.5"}}]})");
  const CliRun scope = Cli({"counterfactual", chain, "--do", "x=1", "--query", "w=1"});
  EXPECT_EQ(scope.code, 3);
  EXPECT_NE(scope.err.find("nonlinear"), std::string::npos) << scope.err;

  const CliRun zero = Cli({"counterfactual", "party", "--given", "a=0,b=0", "--do", "a=1", "--query",
                        "b=1", "--constraints",
                        Write("z.json", R"({"constraints": [{"terms": [{"r": {"A": 0}}], "rhs": "0"}]})")});
  EXPECT_EQ(zero.code, 2) << zero.err;
}

}  // namespace
}  // namespace cfbounds
