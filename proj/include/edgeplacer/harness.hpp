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

/**
 * @file harness.hpp
 *
 * Time-slotted simulation engine. A run wires a placement policy to the
 * virtual cost queue and (for predictive policies) a mobility predictor,
 * steps through the horizon and records realized latency, cost, Q(t) and
 * W(t) per slot. Decisions may be taken on predicted user locations, but
 * every recorded metric uses the true trace.
 *
 * Runs are single-threaded and fully determined by the configuration and
 * its seeds. sweep() runs independent configurations in parallel with
 * OpenMP; sweep_serial() is the reference it must agree with.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "edgeplacer/model.hpp"
#include "edgeplacer/policies.hpp"
#include "edgeplacer/predict.hpp"
#include "edgeplacer/queue.hpp"

namespace edgeplacer {

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

/// Distribution of the time-varying system state. Defaults follow the
/// simulation ranges used for the single-user study: six regions/nodes,
/// task input [5,10] MB, workload [2,20] Gcycles, cellular bandwidth
/// [5,10] MHz, node capacity [5,10] GHz, container [25,50] MB and unit
/// migration cost [2,10] per GB.
struct GeneratorConfig {
  std::size_t node_count = 6;
  Range input_size_mb{5.0, 10.0};
  Range workload_gcycles{2.0, 20.0};
  Range bandwidth_mhz{5.0, 10.0};
  Range capacity_ghz{5.0, 10.0};
  Range container_size_mb{25.0, 50.0};
  Range unit_migration_cost{2.0, 10.0};
  /// Bits per second per Hz; converts cellular bandwidth into a data rate.
  double spectral_efficiency = 1.0;
  /// Uniform inter-node rate. 20 Mbps keeps co-location latency-optimal over
  /// the default ranges (backhaul of 5 MB >= largest compute gap of 2 s).
  double backhaul_mbps = 20.0;
  /// Optional full node_count x node_count override (row-major).
  std::vector<double> backhaul_matrix;

  double max_migration_cost() const {
    return container_size_mb.hi / kMegabytesPerGigabyte * unit_migration_cost.hi;
  }
  void validate() const;
};

struct GeneratedScenario {
  Scenario scenario;
  std::vector<SlotObservation> slots;
};

/// Draws every slot's task profile, per-node capacities, container size and
/// unit cost uniformly from the configured ranges; user nodes come from
/// `trace`. Deterministic in `seed`.
GeneratedScenario generate_scenario(const GeneratorConfig &gen, const MobilityTrace &trace,
                                    std::size_t horizon, double budget_avg, std::size_t frame_len,
                                    std::uint64_t seed);

/// First-order Markov mobility: stay with probability `stickiness`, else move
/// to a uniformly chosen other region. Starts in region 0.
MobilityTrace synthetic_trace(std::uint64_t seed, std::size_t n_regions, std::size_t length,
                              double stickiness);

enum class SweepAxis { none, v, budget_avg, frame_len, theta, beta };

std::string_view to_string(SweepAxis axis);
SweepAxis parse_axis(std::string_view name);

struct TraceSource {
  /// Empty for a synthetic trace.
  std::string file;
  std::uint64_t seed = 1;
  double stickiness = 0.5;
};

struct ExperimentConfig {
  GeneratorConfig generator;
  std::uint64_t scenario_seed = 1;
  std::size_t horizon = 1400;
  std::size_t frame_len = 3;
  double budget_avg = 0.05;
  std::vector<PolicyKind> policies{PolicyKind::osp};
  PolicyConfig policy;
  PredictorSpec predictor;
  TraceSource trace;
  SweepAxis axis = SweepAxis::none;
  std::vector<double> axis_values;
  std::string output_path;
  bool per_slot = false;

  void validate() const;
};

struct SlotRecord {
  std::size_t t = 0;
  NodeIndex placement = 0;
  double latency = 0.0;
  double cost = 0.0;
  double q = 0.0;
  double w = 0.0;
  /// This slot's term of the frame objective that chose it (0 for
  /// reactive policies).
  double objective_term = 0.0;
};

struct RunRecord {
  PolicyKind policy = PolicyKind::osp;
  std::vector<SlotRecord> per_slot;
  double avg_latency = 0.0;
  double avg_cost = 0.0;
  double avg_queue = 0.0;
  double final_queue = 0.0;
  double total_cost = 0.0;
  double budget_avg = 0.0;
  std::size_t horizon = 0;
  std::size_t negative_w_frames = 0;

  /// Largest |Q(tau) - Q(kT)| seen inside any frame (frame policies only).
  double max_frame_deviation = 0.0;
  /// T * max(E_avg, E_max) with the scenario's theoretical E_max.
  double frame_deviation_bound = 0.0;
  /// True when every in-frame deviation obeyed (tau - kT) * w_Q.
  bool frame_bound_ok = true;
  /// Largest |Q(t+1) - Q(t)|.
  double max_step_change = 0.0;
  double e_max_observed = 0.0;

  /// Sum E(t) <= horizon * E_avg + Q(horizon), evaluated exactly.
  bool budget_inequality_holds() const {
    return total_cost <= static_cast<double>(horizon) * budget_avg + final_queue;
  }
};

/// Everything a run consumes, materialised once.
struct SimulationInputs {
  Scenario scenario;
  std::vector<SlotObservation> slots;
  MobilityTrace trace;
};

/// Loads or synthesises the trace, then generates the scenario. Trace file
/// problems raise TraceFormatError.
SimulationInputs prepare_inputs(const ExperimentConfig &cfg);

/// One policy over the whole horizon.
RunRecord simulate(PolicyKind policy, const PolicyConfig &cfg, const PredictorSpec &predictor,
                   const SimulationInputs &inputs);

/// One RunRecord per configured policy.
std::vector<RunRecord> run(const ExperimentConfig &cfg);

struct SweepRow {
  double axis_value = 0.0;
  PolicyKind policy = PolicyKind::osp;
  double avg_latency = 0.0;
  double avg_cost = 0.0;
  double avg_queue = 0.0;
  double final_queue = 0.0;
  std::size_t negative_w_frames = 0;
};

SweepRow summarize(double axis_value, const RunRecord &rec);

/// Copy of `cfg` with the swept field set to `value`.
ExperimentConfig with_axis_value(ExperimentConfig cfg, SweepAxis axis, double value);

/// Rows ordered by (axis value, policy) as configured, independent of thread
/// scheduling. `max_threads` <= 0 uses sweep_thread_limit().
std::vector<SweepRow> sweep(const ExperimentConfig &cfg, int max_threads = 0);
std::vector<SweepRow> sweep_serial(const ExperimentConfig &cfg);

/// EDGEPLACER_THREADS if set and positive, else the OpenMP default.
int sweep_thread_limit();

}  // namespace edgeplacer
