// Copyright 2026 The qobdd Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace qobdd {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qobdd");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string &name) {
  return (std::filesystem::temp_directory_path() / ("qobdd_cli_" + name)).string();
}

void write_file(const std::string &path, const std::string &content) { std::ofstream(path) << content; }

TEST(Cli, VerifyModThree) {
  const auto r = run_cli({"verify", "--function", "mod", "--m", "3", "--n", "10", "--epsilon", "0.2", "--seed", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["n"], 10);
  EXPECT_EQ(j["mode"]["kind"], "exhaustive");
  EXPECT_LT(j["max_accept_on_zeros"].get<double>(), 0.2);
}

TEST(Cli, GoodsetReportsPaddedSize) {
  const auto r = run_cli({"goodset", "--epsilon", "0.25", "--modulus", "64", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["t"], 64);
  EXPECT_EQ(j["params"].size(), 64u);
  EXPECT_TRUE(j["verified"].is_boolean());
}

TEST(Cli, GoodsetSkipsHugeModulus) {
  const auto r = run_cli({"goodset", "--epsilon", "0.5", "--modulus", "1267650600228229401496703205376"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["verified"], "skipped");
}

TEST(Cli, BuildThenEval) {
  const std::string path = temp_path("eq2.json");
  const auto built = run_cli({"build", "--function", "eq", "--n", "2", "--epsilon", "0.3", "--out", path});
  ASSERT_EQ(built.code, 0) << built.err;
  EXPECT_EQ(built.json()["out"], path);

  const auto yes = run_cli({"eval", "--program", path, "--input", "1010"});
  ASSERT_EQ(yes.code, 0) << yes.err;
  EXPECT_NEAR(yes.json()["accept_probability"].get<double>(), 1.0, 1e-9);
  const auto no = run_cli({"eval", "--program", path, "--input", "1011"});
  ASSERT_EQ(no.code, 0);
  const Json j = no.json();
  EXPECT_LT(j["accept_probability"].get<double>(), 0.3);
  EXPECT_NEAR(j["accept_probability"].get<double>(), j["closed_form"].get<double>(), 1e-9);

  const auto verified = run_cli({"verify", "--function", "eq", "--n", "2", "--program", path});
  EXPECT_EQ(verified.code, 0) << verified.err;
  std::filesystem::remove(path);
}

TEST(Cli, BuildIsReproducible) {
  const auto a = run_cli({"build", "--function", "palindrome", "--n", "5", "--seed", "4"});
  const auto b = run_cli({"build", "--function", "palindrome", "--n", "5", "--seed", "4"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.json()["kind"], "single");
}

TEST(Cli, EvalRejectsWrongLength) {
  const std::string path = temp_path("mod.json");
  ASSERT_EQ(run_cli({"build", "--function", "mod", "--m", "3", "--n", "4", "--out", path}).code, 0);
  const auto r = run_cli({"eval", "--program", path, "--input", "101"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("3 bits"), std::string::npos);
  EXPECT_EQ(run_cli({"eval", "--program", path, "--input", "10x1"}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--function", "mod", "--n", "4"}).code, 2);  // --m missing
  EXPECT_EQ(run_cli({"verify", "--function", "xor", "--n", "4"}).code, 2);
  EXPECT_EQ(run_cli({"goodset", "--epsilon", "1.5", "--modulus", "8"}).code, 2);
  EXPECT_EQ(run_cli({"eval", "--program", temp_path("missing.json"), "--input", "1"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, VerifyReportsFailure) {
  // An always-accepting program for MOD_3 on 3 bits.
  const std::string path = temp_path("const.json");
  write_file(path, R"({"m":"3","n":3,"coeffs":["0","0","0","0"]})");
  const std::string out = temp_path("const_prog.json");
  ASSERT_EQ(run_cli({"build", "--function", "char-file", "--file", path, "--out", out}).code, 0);
  const auto r = run_cli({"verify", "--function", "mod", "--m", "3", "--n", "3", "--program", out});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.json()["pass"], false);
  std::filesystem::remove(path);
  std::filesystem::remove(out);
}

TEST(Cli, SopFileBuild) {
  const std::string linear = temp_path("sop_linear.json");
  write_file(linear, R"({"n":3,"products":[[1],[2],[3]]})");
  EXPECT_EQ(run_cli({"build", "--function", "sop-file", "--file", linear}).code, 0);
  const std::string nonlinear = temp_path("sop_nonlinear.json");
  write_file(nonlinear, R"({"n":2,"products":[[1,2]]})");
  EXPECT_EQ(run_cli({"build", "--function", "sop-file", "--file", nonlinear}).code, 2);
  std::filesystem::remove(linear);
  std::filesystem::remove(nonlinear);
}

TEST(Cli, CharFileArrayCompilesGeneral) {
  const std::string path = temp_path("chi.json");
  write_file(path, R"([{"m":"4","n":2,"coeffs":["0","1","3"]},{"m":"4","n":2,"coeffs":["0","2","2"]}])");
  const auto r = run_cli({"build", "--function", "char-file", "--file", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["kind"], "general");
  std::filesystem::remove(path);
}

TEST(Cli, HsfCyclicSweep) {
  const auto info = run_cli({"hsf", "--cyclic", "4", "--subgroup-generator", "2"});
  ASSERT_EQ(info.code, 0) << info.err;
  EXPECT_EQ(info.json()["index"], 2);
  EXPECT_EQ(info.json()["n"], 4);
  const auto r = run_cli({"hsf", "--cyclic", "6", "--subgroup-generator", "3", "--sweep", "--epsilon", "0.25"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["pass"], true);
  EXPECT_EQ(r.json()["counts"]["visited"], 4096);
}

TEST(Cli, HsfTableInput) {
  const std::string path = temp_path("z2.json");
  write_file(path, R"({"order":2,"table":[[0,1],[1,0]],"subgroup":[0]})");
  const auto r = run_cli({"hsf", "--table", path, "--sweep"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["pass"], true);
  write_file(path, R"({"order":2,"table":[[0,1],[1,1]],"subgroup":[0]})");
  EXPECT_EQ(run_cli({"hsf", "--table", path}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, ReportWidthTable) {
  const auto r = run_cli({"report", "--epsilon", "0.25"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json rows = r.json()["rows"];
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0]["function"], "MOD_64");
  EXPECT_EQ(rows[0]["width"], 128);
  const auto text = run_cli({"report", "--text"});
  EXPECT_NE(text.out.find("PERM_3"), std::string::npos);
}

}  // namespace
}  // namespace qobdd
