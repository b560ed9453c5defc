/*
Copyright 2026 The EdgePlacer Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Result {
  int status = -1;
  std::string output;
};

// Runs the CLI with `args`, capturing stdout and stderr together.
Result cli(const std::string &args) {
  const std::string cmd = std::string("\"") + EDGEPLACER_CLI_PATH + "\" " + args + " 2>&1";
  Result r;
  FILE *pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const fs::path &p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("edgeplacer_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string &name, const std::string &text) {
    std::ofstream(dir_ / name) << text;
    return dir_ / name;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, NeverMigrateRunReportsZeroCost) {
  const auto cfg = write("nm.json", R"({"scenario": {"horizon": 200}, "policy": {"name": "nm"}})");
  const Result r = cli("run --config " + cfg.string());
  ASSERT_EQ(r.status, 0) << r.output;
  std::istringstream is(r.output);
  std::string header, row;
  std::getline(is, header);
  std::getline(is, row);
  EXPECT_EQ(header, "axis,policy,avg_latency_s,avg_cost,avg_queue,final_queue,negative_w_frames");
  EXPECT_EQ(row.rfind("run,nm,", 0), 0u);
  EXPECT_NE(row.find(",0,0,0,0"), std::string::npos) << row;
}

TEST_F(CliTest, VerifyReportsAllOracleMatches) {
  const Result r = cli("verify --seed 1 --instances 200");
  EXPECT_EQ(r.status, 0) << r.output;
  EXPECT_NE(r.output.find("psp frame oracle: 200/200 oracle matches"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("psp-wu frame oracle: 200/200 oracle matches"), std::string::npos) << r.output;
  EXPECT_NE(r.output.find("verify: PASS"), std::string::npos);
}

TEST_F(CliTest, MissingConfigFailsAndNamesPath) {
  const std::string missing = (dir_ / "absent.json").string();
  const Result r = cli("run --config " + missing);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.output.find(missing), std::string::npos) << r.output;
}

TEST_F(CliTest, UnknownOverrideIsConfigError) {
  const auto cfg = write("c.json", "{}");
  const Result r = cli("run --config " + cfg.string() + " --set policy.vee=3");
  EXPECT_EQ(r.status, 2) << r.output;
}

TEST_F(CliTest, BadTraceIsTraceError) {
  write("walk.csv", "slot,region\n0,1\n5,1\n");
  const auto cfg = write("c.json", R"({"trace": {"file": "walk.csv"}, "scenario": {"horizon": 2}})");
  const Result r = cli("run --config " + cfg.string());
  EXPECT_EQ(r.status, 3) << r.output;
  EXPECT_NE(r.output.find("walk.csv"), std::string::npos) << r.output;
}

TEST_F(CliTest, GeneratedTraceFeedsARun) {
  const fs::path trace = dir_ / "walk.csv";
  ASSERT_EQ(cli("gen-trace --seed 4 --set scenario.horizon=50 --out " + trace.string()).status, 0);
  const auto cfg = write("c.json", R"({"trace": {"file": "walk.csv"}, "scenario": {"horizon": 50},
                                       "policy": {"name": ["am", "psp"]}})");
  const Result r = cli("run --config " + cfg.string());
  EXPECT_EQ(r.status, 0) << r.output;
  EXPECT_NE(r.output.find("run,psp,"), std::string::npos);
}

TEST_F(CliTest, IdenticalInvocationsWriteIdenticalFiles) {
  const auto cfg = write("c.json", R"({"scenario": {"horizon": 150},
                                       "policy": {"name": ["osp", "psp-wu", "plm"]},
                                       "sweep": {"axis": "budget_avg", "values": [0.02, 0.05, 0.2]}})");
  for (const std::string cmd : {"run", "sweep"}) {
    const fs::path a = dir_ / (cmd + "_a.csv"), b = dir_ / (cmd + "_b.csv");
    ASSERT_EQ(cli(cmd + " --config " + cfg.string() + " --per-slot --out " + a.string()).status, 0);
    ASSERT_EQ(cli(cmd + " --config " + cfg.string() + " --per-slot --out " + b.string()).status, 0);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_FALSE(slurp(a).empty());
  }
  EXPECT_EQ(slurp(dir_ / "run_a.psp-wu.slots.csv"), slurp(dir_ / "run_b.psp-wu.slots.csv"));
  EXPECT_EQ(slurp(dir_ / "run_a.osp.slots.csv").rfind("t,placement,latency_s,cost,q,w\n", 0), 0u);
}

TEST_F(CliTest, SeedFlagChangesResults) {
  const auto cfg = write("c.json", R"({"scenario": {"horizon": 100}})");
  const Result a = cli("run --config " + cfg.string() + " --seed 1");
  const Result b = cli("run --config " + cfg.string() + " --seed 2");
  EXPECT_EQ(a.status, 0);
  EXPECT_NE(a.output, b.output);
}

TEST_F(CliTest, SweepWithoutAxisIsConfigError) {
  const auto cfg = write("c.json", "{}");
  EXPECT_EQ(cli("sweep --config " + cfg.string()).status, 2);
}
