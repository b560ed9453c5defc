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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "edgeplacer/config.hpp"
#include "edgeplacer/csv.hpp"

using namespace edgeplacer;
using nlohmann::json;

TEST(Config, DefaultsProduceValidExperiment) {
  const ExperimentConfig cfg = config_from_json(default_config_json());
  EXPECT_EQ(cfg.generator.node_count, 6u);
  EXPECT_EQ(cfg.horizon, 1400u);
  EXPECT_EQ(cfg.frame_len, 3u);
  EXPECT_EQ(cfg.policy.theta, 50.0);
  EXPECT_EQ(cfg.policy.beta, 0.65);
  EXPECT_EQ(cfg.predictor.accuracies, accuracy_presets::lstm);
  EXPECT_EQ(cfg.policies, (std::vector<PolicyKind>{PolicyKind::osp}));
}

TEST(Config, MergeKeepsDefaultsAndRejectsUnknownKeys) {
  const json doc = merge_config(json::parse(R"({"policy": {"v": 900}})"));
  EXPECT_EQ(doc["policy"]["v"], 900);
  EXPECT_EQ(doc["policy"]["theta"], 50.0);
  EXPECT_THROW(merge_config(json::parse(R"({"policy": {"vv": 1}})")), ConfigError);
  EXPECT_THROW(merge_config(json::parse(R"({"extra": {}})")), ConfigError);
}

TEST(Config, OverridesParseJsonValuesOrFallBackToStrings) {
  json doc = default_config_json();
  apply_override(doc, "policy.v=4000");
  apply_override(doc, "policy.name=psp-wu");
  apply_override(doc, "sweep.values=[1,2,3]");
  apply_override(doc, "sweep.axis=beta");
  const ExperimentConfig cfg = config_from_json(doc);
  EXPECT_EQ(cfg.policy.v, 4000.0);
  EXPECT_EQ(cfg.policies, (std::vector<PolicyKind>{PolicyKind::psp_wu}));
  EXPECT_EQ(cfg.axis, SweepAxis::beta);
  EXPECT_EQ(cfg.axis_values, (std::vector<double>{1, 2, 3}));
  EXPECT_THROW(apply_override(doc, "policy.nope=1"), ConfigError);
  EXPECT_THROW(apply_override(doc, "novalue"), ConfigError);
}

TEST(Config, InvalidValuesRaiseConfigError) {
  for (const char *bad : {R"({"policy": {"beta": 2}})", R"({"policy": {"name": "greedy"}})",
                          R"({"scenario": {"horizon": -5}})", R"({"scenario": {"nodes": 0}})",
                          R"({"predictor": {"preset": "gru"}})", R"({"policy": {"v": "high"}})",
                          R"({"sweep": {"axis": "gamma"}})"}) {
    EXPECT_THROW(config_from_json(merge_config(json::parse(bad))), ConfigError) << bad;
  }
}

TEST(Config, ExplicitAccuraciesOverridePreset) {
  const ExperimentConfig cfg =
      config_from_json(merge_config(json::parse(R"({"predictor": {"preset": "sma", "accuracies": [0.7]}})")));
  EXPECT_EQ(cfg.predictor.accuracies, (std::vector<double>{0.7}));
}

TEST(Config, MissingFileNamesThePath) {
  try {
    load_config("/nonexistent/cfg.json", {});
    FAIL() << "expected ConfigError";
  } catch (const ConfigError &e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/cfg.json"), std::string::npos);
  }
}

TEST(Config, RelativeTracePathResolvesAgainstConfigDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "edgeplacer_config_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "cfg.json") << R"({"trace": {"file": "walk.csv"}})";
  }
  const json doc = load_config_json((dir / "cfg.json").string());
  EXPECT_EQ(doc["trace"]["file"], (dir / "walk.csv").string());
  std::filesystem::remove_all(dir);
}

TEST(Csv, FormatDoubleRoundTrips) {
  for (double x : {0.0, 0.1, 1.0 / 3.0, 9.820243268369193, 1e-300, 12345678.9}) {
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(Csv, TraceRoundTrip) {
  const MobilityTrace tr{{0, 3, 3, 1, 5}};
  std::stringstream ss;
  write_trace_csv(ss, tr);
  EXPECT_EQ(read_trace_csv(ss).regions, tr.regions);
  std::istringstream crlf("slot,region\r\n0,2\r\n1,4\r\n");
  EXPECT_EQ(read_trace_csv(crlf).regions, (std::vector<NodeIndex>{2, 4}));
}

TEST(Csv, MalformedTracesAreRejected) {
  for (const char *bad : {"", "time,region\n0,1\n", "slot,region\n", "slot,region\n0,1\n2,1\n",
                          "slot,region\n0,x\n", "slot,region\n0;1\n", "slot,region\n0,-1\n"}) {
    std::istringstream is(bad);
    EXPECT_THROW(read_trace_csv(is), TraceFormatError) << bad;
  }
  EXPECT_THROW(read_trace_file("/nonexistent/trace.csv"), TraceFormatError);
}

TEST(Csv, SummaryAndPerSlotLayouts) {
  RunRecord rec;
  rec.policy = PolicyKind::psp_wu;
  rec.avg_latency = 1.5;
  rec.per_slot = {{.t = 0, .placement = 2, .latency = 1.25, .cost = 0.0, .q = 0.0, .w = 0.0}};
  std::ostringstream summary, slots;
  write_run_summary_csv(summary, std::vector<RunRecord>{rec});
  write_per_slot_csv(slots, rec);
  EXPECT_EQ(summary.str(), std::string(kSummaryHeader) + "\nrun,psp-wu,1.5,0,0,0,0\n");
  EXPECT_EQ(slots.str(), std::string(kPerSlotHeader) + "\n0,2,1.25,0,0,0\n");
}
