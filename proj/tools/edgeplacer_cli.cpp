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

// edgeplacer: run single experiments, sweeps, oracle verification and
// synthetic trace generation from a JSON config.
//
// Exit codes: 0 ok, 1 usage or runtime error, 2 config error, 3 trace format
// error, 4 verification failure.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "edgeplacer/config.hpp"
#include "edgeplacer/csv.hpp"
#include "edgeplacer/harness.hpp"
#include "edgeplacer/verify.hpp"

namespace {

using namespace edgeplacer;

enum ExitCode : int {
  kOk = 0,
  kRuntimeError = 1,
  kConfigError = 2,
  kTraceError = 3,
  kVerifyFailed = 4,
};

struct CommonOptions {
  std::string config;
  std::string out;
  std::vector<std::string> sets;
  bool per_slot = false;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App *cmd, CommonOptions &o, bool config_required) {
  auto *c = cmd->add_option("--config", o.config, "JSON experiment config");
  if (config_required) c->required();
  cmd->add_option("--out", o.out, "Output CSV path (stdout when omitted)");
  cmd->add_option("--set", o.sets, "Override a config value, e.g. policy.v=900")->take_all()->allow_extra_args(false);
  cmd->add_flag("--per-slot", o.per_slot, "Also dump per-slot CSVs next to --out");
  cmd->add_option("--seed", o.seed, "Seed for scenario, trace and predictor");
}

nlohmann::json load_doc(const CommonOptions &o) {
  nlohmann::json doc = o.config.empty() ? default_config_json() : load_config_json(o.config);
  for (const auto &s : o.sets) apply_override(doc, s);
  if (o.seed) {
    doc["scenario"]["seed"] = *o.seed;
    doc["trace"]["seed"] = *o.seed;
    doc["predictor"]["seed"] = *o.seed;
  }
  return doc;
}

ExperimentConfig load_experiment(const CommonOptions &o) {
  ExperimentConfig cfg = config_from_json(load_doc(o));
  if (!o.out.empty()) cfg.output_path = o.out;
  cfg.per_slot = cfg.per_slot || o.per_slot;
  return cfg;
}

/// Writes via `emit` to cfg.output_path, or stdout when it is empty.
template <typename Emit>
void write_output(const std::string &path, Emit &&emit) {
  if (path.empty()) {
    emit(std::cout);
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write '" + path + "'");
  emit(os);
}

std::string per_slot_path(const std::string &out, PolicyKind policy) {
  std::filesystem::path p(out);
  const std::string stem = p.stem().string();
  return (p.parent_path() / (stem + "." + std::string(to_string(policy)) + ".slots.csv")).string();
}

int cmd_run(const CommonOptions &o) {
  const ExperimentConfig cfg = load_experiment(o);
  if (cfg.per_slot && cfg.output_path.empty()) {
    throw ConfigError("--per-slot needs --out (or output.path) to name the dump files");
  }
  const std::vector<RunRecord> records = run(cfg);
  write_output(cfg.output_path, [&](std::ostream &os) { write_run_summary_csv(os, records); });
  if (cfg.per_slot) {
    for (const RunRecord &rec : records) {
      write_output(per_slot_path(cfg.output_path, rec.policy),
                   [&](std::ostream &os) { write_per_slot_csv(os, rec); });
    }
  }
  for (const RunRecord &rec : records) {
    if (!rec.budget_inequality_holds()) {
      std::cerr << "warning: " << to_string(rec.policy) << " violates the telescoped budget inequality\n";
    }
  }
  return kOk;
}

int cmd_sweep(const CommonOptions &o) {
  const ExperimentConfig cfg = load_experiment(o);
  if (cfg.axis == SweepAxis::none) throw ConfigError("sweep needs sweep.axis and sweep.values");
  const std::vector<SweepRow> rows = sweep(cfg);
  write_output(cfg.output_path, [&](std::ostream &os) { write_summary_csv(os, rows); });
  return kOk;
}

int cmd_verify(std::uint64_t seed, std::size_t instances, std::size_t horizon_instances) {
  bool ok = true;
  auto report = [&](const std::string &label, const OracleTally &t, const char *what) {
    std::cout << label << ": " << t.passed << "/" << t.total << " " << what << "\n";
    for (const auto &f : t.failures) std::cout << "  " << f << "\n";
  };

  const OracleTally psp = verify_frame_oracle(seed, instances, false);
  report("psp frame oracle", psp, "oracle matches");
  const OracleTally wu = verify_frame_oracle(seed + 1, instances, true);
  report("psp-wu frame oracle", wu, "oracle matches");
  ok = ok && psp.all_passed() && wu.all_passed();

  for (double v : {10.0, 100.0}) {
    const OracleTally h = verify_horizon_bound(seed, horizon_instances, v);
    report("osp horizon bound (V=" + format_double(v) + ")", h, "within bound");
    // The bound holds in expectation; up to 10% of tiny instances may miss it.
    if (static_cast<double>(h.total - h.passed) >= 0.10 * static_cast<double>(h.total)) ok = false;
  }
  std::cout << (ok ? "verify: PASS" : "verify: FAIL") << "\n";
  return ok ? kOk : kVerifyFailed;
}

int cmd_gen_trace(const CommonOptions &o) {
  const ExperimentConfig cfg = load_experiment(o);
  const MobilityTrace trace =
      synthetic_trace(cfg.trace.seed, cfg.generator.node_count, cfg.horizon, cfg.trace.stickiness);
  write_output(cfg.output_path, [&](std::ostream &os) { write_trace_csv(os, trace); });
  return kOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"edgeplacer: online service placement simulator for mobile edge computing"};
  app.require_subcommand(1);

  CommonOptions run_opts, sweep_opts, trace_opts;
  auto *run_cmd = app.add_subcommand("run", "Run the configured policies once and write a summary CSV");
  add_common(run_cmd, run_opts, true);
  auto *sweep_cmd = app.add_subcommand("sweep", "Sweep one config axis and write a summary CSV");
  add_common(sweep_cmd, sweep_opts, true);
  auto *trace_cmd = app.add_subcommand("gen-trace", "Write a synthetic mobility trace CSV");
  add_common(trace_cmd, trace_opts, false);

  auto *verify_cmd = app.add_subcommand("verify", "Check frame plans and OSP against brute-force oracles");
  std::uint64_t verify_seed = 1;
  std::size_t instances = 200;
  std::size_t horizon_instances = 20;
  verify_cmd->add_option("--seed", verify_seed, "Base seed")->capture_default_str();
  verify_cmd->add_option("--instances", instances, "Random frame instances per suite")->capture_default_str();
  verify_cmd->add_option("--horizon-instances", horizon_instances, "Tiny horizon instances per V")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return cmd_run(run_opts);
    if (*sweep_cmd) return cmd_sweep(sweep_opts);
    if (*trace_cmd) return cmd_gen_trace(trace_opts);
    if (*verify_cmd) return cmd_verify(verify_seed, instances, horizon_instances);
  } catch (const ConfigError &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const TraceFormatError &e) {
    std::cerr << "trace error: " << e.what() << "\n";
    return kTraceError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kRuntimeError;
}
