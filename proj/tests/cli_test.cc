// Copyright 2026 The featpriv Authors
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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "featpriv_cli/commands.h"
#include "featpriv_cli/config.h"
#include "featpriv_cli/table.h"
#include "gtest/gtest.h"

namespace featpriv::cli {
namespace {

const std::string kReferenceConfig = std::string(FEATPRIV_SOURCE_DIR) + "/configs/reference.conf";

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult Invoke(Invocation inv) {
  std::ostringstream out, err;
  const int code = Execute(inv, out, err);
  return {code, out.str(), err.str()};
}

Invocation Reference(Subcommand cmd) {
  Invocation inv;
  inv.subcommand = cmd;
  inv.config_path = kReferenceConfig;
  inv.trials = 200;
  inv.overrides = {"threads=1"};
  return inv;
}

std::string FirstLine(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

TEST(ParseConfigTest, ReadsKeysAndComments) {
  const ParsedConfig p = ParseConfigText(
      "# comment\nepsilon = 2.5\n\nd=20  # trailing\nr=4\nbeta_mode=perfect_csi\n",
      {});
  EXPECT_EQ(p.config.epsilon, 2.5);
  EXPECT_EQ(p.config.d, 20);
  EXPECT_EQ(p.config.r, 4);
  EXPECT_TRUE(p.warnings.empty());
}

TEST(ParseConfigTest, OverridesWinAndPowerParses) {
  const ParsedConfig p = ParseConfigText("epsilon=1\n", {"epsilon=3", "P_dbm=30"});
  EXPECT_EQ(p.config.epsilon, 3.0);
  EXPECT_NEAR(p.config.Alpha(), std::sqrt(1000.0), 1e-9);
}

TEST(ParseConfigTest, InvalidValueNamesConstraint) {
  try {
    ParseConfigText("epsilon=0\n", {});
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("epsilon > 0"), std::string::npos);
  }
}

TEST(ParseConfigTest, DuplicateKeyWarnsLastWins) {
  const ParsedConfig p = ParseConfigText("epsilon=1\nepsilon=4\n", {});
  EXPECT_EQ(p.config.epsilon, 4.0);
  ASSERT_EQ(p.warnings.size(), 1u);
  EXPECT_NE(p.warnings[0].find("epsilon"), std::string::npos);
}

TEST(ParseConfigTest, Rejections) {
  EXPECT_THROW(ParseConfigText("epsilonn=1\n", {}), ConfigError);
  EXPECT_THROW(ParseConfigText("epsilon\n", {}), ConfigError);
  EXPECT_THROW(ParseConfigText("epsilon=abc\n", {}), ConfigError);
  EXPECT_THROW(ParseConfigText("d=5.5\n", {}), ConfigError);
  EXPECT_THROW(ParseConfigText("decoder=inverse\n", {}), ConfigError);
  EXPECT_THROW(ParseConfigText("csi_error=0.1\n", {}), ConfigError);
  EXPECT_NO_THROW(ParseConfigText("csi_error=0.1\nbeta_mode=perturbed\n", {}));
  EXPECT_THROW(ParseConfig("/nonexistent/featpriv.conf", {}), ConfigError);
}

TEST(ParseConfigTest, KnownKeysCoverReferenceFile) {
  const ParsedConfig p = ParseConfig(kReferenceConfig, {});
  EXPECT_EQ(p.config.d, 50);
  EXPECT_EQ(p.config.r, 10);
  EXPECT_EQ(p.config.clip_norm, 2.0);
  EXPECT_FALSE(KnownKeys().empty());
}

TEST(FormatNumberTest, ShortestRoundTrip) {
  EXPECT_EQ(FormatNumber(0.1), "0.1");
  EXPECT_EQ(FormatNumber(173.35316538858228), "173.35316538858228");
  EXPECT_EQ(FormatNumber(std::nan("")), "nan");
  EXPECT_EQ(std::stod(FormatNumber(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(WriteTableTest, CsvAndJson) {
  Table t;
  t.columns = {"name", "value", "count"};
  t.AddRow({std::string("a\"b"), 1.5, 3LL});
  t.AddRow({std::string("c"), std::nan(""), 4LL});
  std::ostringstream csv, json;
  WriteCsv(t, csv);
  WriteJson(t, json);
  EXPECT_EQ(FirstLine(csv.str()), "name,value,count");
  EXPECT_NE(json.str().find("\"a\\\"b\""), std::string::npos);
  EXPECT_NE(json.str().find("null"), std::string::npos);
}

TEST(ExecuteTest, CalibratePrintsSigma2) {
  const RunResult r = Invoke(Reference(Subcommand::kCalibrate));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("173.353165388582"), std::string::npos) << r.out;
}

TEST(ExecuteTest, SweepHeaderIsExact) {
  Invocation inv = Reference(Subcommand::kSweep);
  inv.values = {1, 2};
  const RunResult r = Invoke(inv);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(FirstLine(r.out), kSweepHeader);
  int lines = 0;
  for (char c : r.out) lines += c == '\n';
  EXPECT_EQ(lines, 3);
}

TEST(ExecuteTest, JsonOutput) {
  Invocation inv = Reference(Subcommand::kBound);
  inv.output = OutputFormat::kJson;
  const RunResult r = Invoke(inv);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.front(), '[');
  EXPECT_NE(r.out.find("\"bound_adv\""), std::string::npos) << r.out;
}

TEST(ExecuteTest, ExitCodes) {
  Invocation bad = Reference(Subcommand::kCalibrate);
  bad.overrides.push_back("epsilon=0");
  const RunResult config_error = Invoke(bad);
  EXPECT_EQ(config_error.code, 1);
  EXPECT_NE(config_error.err.find("epsilon > 0"), std::string::npos);

  Invocation missing = Reference(Subcommand::kCalibrate);
  missing.config_path = "/nonexistent/featpriv.conf";
  EXPECT_EQ(Invoke(missing).code, 1);

  Invocation infeasible = Reference(Subcommand::kDimension);
  infeasible.overrides.push_back("omega=3.3");
  const RunResult numeric = Invoke(infeasible);
  EXPECT_EQ(numeric.code, 2);
  EXPECT_NE(numeric.err.find("infeasible"), std::string::npos) << numeric.err;

  Invocation feasible = Reference(Subcommand::kDimension);
  feasible.overrides.push_back("omega=3");
  EXPECT_EQ(Invoke(feasible).code, 0);
}

TEST(ExecuteTest, EverySubcommandIsDeterministic) {
  const auto dir = std::filesystem::temp_directory_path() / "featpriv_cli_test";
  std::filesystem::create_directories(dir);
  for (Subcommand cmd :
       {Subcommand::kCalibrate, Subcommand::kBound, Subcommand::kSimulate,
        Subcommand::kSweep, Subcommand::kDimension, Subcommand::kMimo,
        Subcommand::kAcquireDemo}) {
    Invocation inv = Reference(cmd);
    inv.seed = 7;
    inv.overrides.push_back("omega=2");
    if (cmd == Subcommand::kSweep) inv.values = {0.5, 1};
    if (cmd == Subcommand::kMimo) inv.values = {4, 16};
    std::string contents[2];
    for (int k = 0; k < 2; ++k) {
      inv.out_path = (dir / (std::string(SubcommandName(cmd)) + std::to_string(k))).string();
      const RunResult r = Invoke(inv);
      ASSERT_EQ(r.code, 0) << SubcommandName(cmd) << ": " << r.err;
      std::ifstream in(inv.out_path, std::ios::binary);
      std::ostringstream buf;
      buf << in.rdbuf();
      contents[k] = buf.str();
    }
    EXPECT_FALSE(contents[0].empty());
    EXPECT_EQ(contents[0], contents[1]) << SubcommandName(cmd);
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace featpriv::cli
