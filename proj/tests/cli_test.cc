// Copyright 2026 The ksub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ksub/cli.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "gtest/gtest.h"
#include "json.hpp"

namespace ksub {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
  json document() const { return json::parse(out); }
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ksub_cli_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  static CliRun Invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "ksub");
    std::ostringstream out, err;
    const int code = RunCli(args, out, err);
    return CliRun{code, out.str(), err.str()};
  }

  static std::string Slurp(const fs::path& path) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  fs::path dir_;
};

constexpr const char* kLayer3 =
    R"({"kind":"layer_layout","n":2,"k":3,"edges":[[0,1]]})";

TEST_F(CliTest, CheckExitCodes) {
  const std::string layer = Write("layer.json", kLayer3);
  const CliRun ksub = Invoke({"check", layer, "--property", "ksub"});
  EXPECT_EQ(ksub.code, kExitViolation);
  const json report = ksub.document();
  EXPECT_EQ(report["property"], "k_submodular");
  EXPECT_FALSE(report["holds"].get<bool>());
  EXPECT_TRUE(report["counterexample"].is_object());
  EXPECT_TRUE(report["evals"].is_number_integer());

  EXPECT_EQ(Invoke({"check", layer, "--property", "monotone:3"}).code, kExitOk);
  EXPECT_EQ(Invoke({"check", layer, "--property", "orthant"}).code, kExitOk);
  EXPECT_EQ(Invoke({"check", layer, "--property", "pairwise"}).code,
            kExitViolation);

  const std::string coverage =
      Write("coverage.json", R"({"kind":"coverage_tight","n":2,"k":4})");
  const CliRun ch = Invoke({"check", coverage, "--property", "characterization"});
  EXPECT_EQ(ch.code, kExitOk);
  EXPECT_TRUE(ch.document()["counterexample"].is_null());
}

TEST_F(CliTest, MaximizeExamples) {
  const std::string det =
      Write("det.json", R"({"kind":"det_greedy_tight","n":2,"k":2,"r":2})");
  const CliRun greedy = Invoke({"maximize", det, "--algo", "greedy-det"});
  ASSERT_EQ(greedy.code, kExitOk) << greedy.err;
  const json result = greedy.document();
  EXPECT_NEAR(result["value"].get<double>(), 1.0 / 3.0, 1e-12);
  EXPECT_EQ(result["solution"], json::array({1, 1}));
  EXPECT_TRUE(result["trace"].is_array());

  const CliRun brute = Invoke({"maximize", det, "--algo", "brute"});
  EXPECT_EQ(brute.document()["value"].get<double>(), 1.0);

  const std::string coverage =
      Write("coverage.json", R"({"kind":"coverage_tight","n":2,"k":5})");
  const CliRun exact =
      Invoke({"maximize", coverage, "--algo", "greedy-rand", "--exact"});
  ASSERT_EQ(exact.code, kExitOk) << exact.err;
  EXPECT_NEAR(exact.document()["expectation"].get<double>(),
              (2.0 + 0.5) / (1.0 + 4 * 0.5), 1e-12);

  const std::string indicator =
      Write("ind.json", R"({"kind":"indicator","n":1,"k":3,"target":1})");
  const CliRun sampled = Invoke({"expectation", indicator, "--algo", "random"});
  ASSERT_EQ(sampled.code, kExitOk) << sampled.err;
  EXPECT_NEAR(sampled.document()["expectation"].get<double>(), 1.0 / 3.0, 1e-12);
}

TEST_F(CliTest, MaximizeSamplingIsSeeded) {
  const std::string coverage =
      Write("coverage.json", R"({"kind":"coverage_tight","n":2,"k":5})");
  const CliRun a = Invoke({"maximize", coverage, "--algo", "greedy-rand",
                        "--trials", "300", "--seed", "4"});
  const CliRun b = Invoke({"maximize", coverage, "--algo", "greedy-rand",
                        "--trials", "300", "--seed", "4"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(a.document()["mean"].is_number());

  const CliRun order = Invoke({"maximize", coverage, "--algo", "greedy-det",
                            "--order", "1,0"});
  EXPECT_EQ(order.code, kExitOk);
  EXPECT_EQ(Invoke({"maximize", coverage, "--algo", "greedy-det", "--order",
                    "0,0"}).code,
            kExitInputError);
  EXPECT_EQ(Invoke({"maximize", coverage, "--algo", "greedy-det", "--exact"}).code,
            kExitInputError);
}

TEST_F(CliTest, InputErrorsExitTwoWithOneJsonDocument) {
  const std::string bad =
      Write("bad.json", R"({"kind":"det_greedy_tight","n":2,"k":2,"r":3})");
  const CliRun run = Invoke({"check", bad, "--property", "ksub"});
  EXPECT_EQ(run.code, kExitInputError);
  EXPECT_EQ(run.document()["error"], "input_error");
  EXPECT_FALSE(run.err.empty());

  EXPECT_EQ(Invoke({"check", (dir_ / "missing.json").string(), "--property",
                    "ksub"}).code,
            kExitInputError);
  const CliRun usage = Invoke({"check"});
  EXPECT_EQ(usage.code, kExitInputError);
  EXPECT_NO_THROW(usage.document());
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(Invoke({"check", bad, "--property", "bogus"}).code, kExitInputError);
}

TEST_F(CliTest, StateCapFromFlagAndEnvironment) {
  const std::string cut = Write(
      "cut.json", R"({"kind":"max_k_cut","n":6,"k":3,"edges":[[0,1],[2,3]]})");
  EXPECT_EQ(Invoke({"check", cut, "--property", "orthant"}).code, kExitOk);
  EXPECT_EQ(Invoke({"check", cut, "--property", "orthant", "--max-states",
                    "100"}).code,
            kExitInputError);
  ::setenv("KSUB_MAX_STATES", "100", 1);
  const CliRun capped = Invoke({"check", cut, "--property", "orthant"});
  const CliRun flag = Invoke({"check", cut, "--property", "orthant",
                           "--max-states", "100000"});
  ::unsetenv("KSUB_MAX_STATES");
  EXPECT_EQ(capped.code, kExitInputError);
  EXPECT_EQ(flag.code, kExitOk);
}

TEST_F(CliTest, BenchTightSuite) {
  const fs::path out = dir_ / "tight.json";
  const CliRun run = Invoke({"bench", "--suite", "paper-tight", "--k", "2..6",
                          "--out", out.string()});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_TRUE(run.document()["all_bounds_satisfied"].get<bool>());
  const json report = json::parse(Slurp(out));
  ASSERT_FALSE(report["rows"].empty());
  for (const json& row : report["rows"]) {
    EXPECT_TRUE(row["bound_satisfied"].get<bool>()) << row.dump();
  }
  EXPECT_TRUE(fs::exists(dir_ / "tight.csv"));
}

TEST_F(CliTest, BenchRandomIsByteIdentical) {
  const fs::path a = dir_ / "a.json";
  const fs::path b = dir_ / "b.json";
  for (const fs::path& path : {a, b}) {
    const CliRun run = Invoke({"bench", "--suite", "random-ksub", "--k", "2..3",
                            "--trials", "200", "--seed", "7", "--instances",
                            "3", "--out", path.string()});
    ASSERT_EQ(run.code, kExitOk) << run.err;
  }
  EXPECT_EQ(Slurp(a), Slurp(b));
  EXPECT_EQ(Slurp(dir_ / "a.csv"), Slurp(dir_ / "b.csv"));
}

TEST_F(CliTest, BenchErrors) {
  const std::string out = (dir_ / "r.json").string();
  EXPECT_EQ(Invoke({"bench", "--suite", "paper-tight", "--k", "5..3", "--out",
                    out}).code,
            kExitInputError);
  EXPECT_EQ(Invoke({"bench", "--suite", "nope", "--k", "2", "--out", out}).code,
            kExitInputError);
  EXPECT_EQ(Invoke({"bench", "--suite", "paper-tight", "--k", "2", "--out",
                    (dir_ / "no" / "such" / "dir.json").string()}).code,
            kExitInputError);
}

}  // namespace
}  // namespace ksub
