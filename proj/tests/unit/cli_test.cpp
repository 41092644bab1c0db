// Copyright 2026 The kfx Authors
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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kfx/cli.hpp"

namespace kfx {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << contents;
  return path;
}

TEST(Cli, ComputeTriangle) {
  const auto path = temp_file("triangle.txt", "3 3\n0 1\n1 2\n0 2\n");
  const auto table = run({"compute", path});
  EXPECT_EQ(table.code, 0);
  EXPECT_NE(table.out.find("Kf = 2\n"), std::string::npos);
  const auto json = run({"compute", path, "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(json.out)["kf"], "2/1");
}

TEST(Cli, ComputePathAndVertex) {
  const auto path = temp_file("path4.txt", "4 3\n0 1\n1 2\n2 3\n");
  const auto r = run({"compute", path, "--vertex", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Kf = 10\n"), std::string::npos);
  EXPECT_NE(r.out.find("W = 10\n"), std::string::npos);
  EXPECT_NE(r.out.find("Kf_v(0) = 6\n"), std::string::npos);
  EXPECT_EQ(run({"compute", path, "--vertex", "9"}).code, 3);
}

TEST(Cli, WorkedExample) {
  const auto family = run({"family", "--name", "p3", "--n", "100", "--delta", "96"});
  ASSERT_EQ(family.code, 0);
  const auto path = temp_file("p3.txt", family.out);
  const auto r = run({"compute", path, "--decimal", "6"});
  EXPECT_NE(r.out.find("Kf = 30925/3\n"), std::string::npos);
  EXPECT_NE(r.out.find("Kf ~ 10308.333333\n"), std::string::npos);
  const auto f = run({"formula", "--name", "theorem-bound", "--n", "100", "--delta", "96", "--mixed"});
  EXPECT_EQ(f.out, "theorem-bound(n=100, delta=96) = 10308 1/3\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"compute", temp_file("bad.txt", "3 1\n0 0\n")}).code, 2);
  EXPECT_EQ(run({"compute", "/nonexistent/file"}).code, 2);
  EXPECT_EQ(run({"compute", temp_file("split.txt", "4 2\n0 1\n2 3\n")}).code, 3);
  EXPECT_EQ(run({"formula", "--name", "kf-a", "--n", "4", "--l", "3", "--delta", "4"}).code, 3);
  EXPECT_EQ(run({"formula", "--name", "kf-a", "--n", "8"}).code, 3);
  EXPECT_EQ(run({"family", "--name", "nope", "--n", "5"}).code, 3);
  EXPECT_EQ(run({"search", "--n", "11", "--cap", "10"}).code, 4);
  EXPECT_EQ(run({"verify", "--n", "6", "--delta", "3"}).code, 0);
  EXPECT_EQ(run({"conjecture", "--n", "10", "--delta", "3"}).code, 1);
  EXPECT_EQ(run({"formula", "--list"}).code, 0);
  EXPECT_EQ(run({"compute", "--help"}).code, 0);
}

TEST(Cli, CapFromEnvironment) {
  ::setenv("KFX_CAP", "10", 1);
  EXPECT_EQ(run({"search", "--n", "11"}).code, 4);
  ::unsetenv("KFX_CAP");
  EXPECT_EQ(run({"search", "--n", "7"}).code, 0);
}

TEST(Cli, JsonRoundTripIsByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"search", "--n", "7", "--delta", "3"},
           {"search", "--n", "6", "--dump-all"},
           {"verify", "--n", "8", "--delta", "4"},
           {"conjecture", "--n", "8", "--delta", "3", "--decimal", "4"},
           {"formula", "--name", "kf-b", "--n", "8", "--l", "4", "--delta", "3", "--format", "json"}}) {
    const auto r = run(args);
    ASSERT_TRUE(r.code == 0 || r.code == 1) << r.err;
    const auto parsed = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(parsed.dump(2) + "\n", r.out);
    EXPECT_EQ(run(args).out, r.out);
  }
}

TEST(Cli, CsvOutputs) {
  const auto r = run({"search", "--n", "5", "--dump-all", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "code,cycle_length,max_degree,kf");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "family_out.txt";
  EXPECT_EQ(run({"family", "--name", "cycle", "--l", "4", "--output", path}).code, 0);
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  EXPECT_EQ(s.str(), "4 4\n0 1\n0 3\n1 2\n2 3\n");
}

TEST(Cli, FormulaVariants) {
  const auto printed = run({"formula", "--name", "kf-b", "--n", "8", "--l", "4", "--delta", "3", "--variant", "as-printed"});
  const auto validated = run({"formula", "--name", "kf-b", "--n", "8", "--l", "4", "--delta", "3"});
  EXPECT_EQ(validated.out, "kf-b(n=8, l=4, delta=3) = 60\n");
  EXPECT_NE(printed.out, validated.out);
  EXPECT_EQ(run({"formula", "--name", "kf-b", "--n", "8", "--l", "4", "--delta", "3", "--variant", "x"}).code, 3);
}

}  // namespace
}  // namespace kfx
