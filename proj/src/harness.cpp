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

#include "edgeplacer/harness.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <random>
#include <stdexcept>
#include <string>

#include "edgeplacer/csv.hpp"

namespace edgeplacer {

namespace {

void check_range(const Range &r, const char *name, bool strictly_positive) {
  const bool ok = std::isfinite(r.lo) && std::isfinite(r.hi) && r.lo <= r.hi &&
                  (strictly_positive ? r.lo > 0.0 : r.lo >= 0.0);
  if (!ok) throw std::invalid_argument(std::string("invalid range for ") + name);
}

double draw(std::mt19937_64 &rng, const Range &r) {
  if (r.lo == r.hi) return r.lo;
  return std::uniform_real_distribution<double>(r.lo, r.hi)(rng);
}

std::size_t frame_count(std::size_t horizon, std::size_t frame_len) {
  return (horizon + frame_len - 1) / frame_len;
}

}  // namespace

void GeneratorConfig::validate() const {
  if (node_count < 1) throw std::invalid_argument("generator needs at least one node");
  check_range(input_size_mb, "input_size_mb", false);
  check_range(workload_gcycles, "workload_gcycles", false);
  check_range(bandwidth_mhz, "bandwidth_mhz", true);
  check_range(capacity_ghz, "capacity_ghz", true);
  check_range(container_size_mb, "container_size_mb", false);
  check_range(unit_migration_cost, "unit_migration_cost", false);
  if (!(spectral_efficiency > 0.0)) throw std::invalid_argument("spectral_efficiency must be > 0");
  if (backhaul_matrix.empty()) {
    if (!(backhaul_mbps > 0.0)) throw std::invalid_argument("backhaul_mbps must be > 0");
  } else if (backhaul_matrix.size() != node_count * node_count) {
    throw std::invalid_argument("backhaul_matrix must have node_count^2 entries");
  }
}

GeneratedScenario generate_scenario(const GeneratorConfig &gen, const MobilityTrace &trace,
                                    std::size_t horizon, double budget_avg, std::size_t frame_len,
                                    std::uint64_t seed) {
  gen.validate();
  if (trace.regions.size() < horizon) {
    throw std::invalid_argument("trace has " + std::to_string(trace.regions.size()) +
                                " slots, horizon needs " + std::to_string(horizon));
  }
  trace.validate(gen.node_count);

  GeneratedScenario out;
  out.scenario = Scenario::uniform(gen.node_count, gen.backhaul_mbps, budget_avg, horizon,
                                   frame_len, gen.max_migration_cost());
  if (!gen.backhaul_matrix.empty()) out.scenario.backhaul_rate = gen.backhaul_matrix;
  out.scenario.validate();

  std::mt19937_64 rng(seed);
  out.slots.resize(horizon);
  for (std::size_t t = 0; t < horizon; ++t) {
    SlotObservation &obs = out.slots[t];
    obs.slot = t;
    obs.user_node = trace.regions[t];
    obs.input_size_mb = draw(rng, gen.input_size_mb);
    obs.workload_gcycles = draw(rng, gen.workload_gcycles);
    obs.access_rate_mbps = draw(rng, gen.bandwidth_mhz) * gen.spectral_efficiency;
    obs.compute_capacity_ghz.resize(gen.node_count);
    for (double &d : obs.compute_capacity_ghz) d = draw(rng, gen.capacity_ghz);
    obs.container_size_mb = draw(rng, gen.container_size_mb);
    obs.unit_migration_cost = draw(rng, gen.unit_migration_cost);
  }
  return out;
}

MobilityTrace synthetic_trace(std::uint64_t seed, std::size_t n_regions, std::size_t length,
                              double stickiness) {
  if (n_regions < 1) throw std::invalid_argument("synthetic_trace needs at least one region");
  if (!(stickiness >= 0.0 && stickiness <= 1.0)) {
    throw std::invalid_argument("stickiness must lie in [0, 1]");
  }
  MobilityTrace trace;
  trace.regions.reserve(length);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution stay(stickiness);
  NodeIndex current = 0;
  for (std::size_t t = 0; t < length; ++t) {
    if (t > 0 && n_regions > 1 && !stay(rng)) {
      const NodeIndex r = std::uniform_int_distribution<std::size_t>(0, n_regions - 2)(rng);
      current = r >= current ? r + 1 : r;
    }
    trace.regions.push_back(current);
  }
  return trace;
}

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::none: return "none";
    case SweepAxis::v: return "v";
    case SweepAxis::budget_avg: return "budget_avg";
    case SweepAxis::frame_len: return "frame_len";
    case SweepAxis::theta: return "theta";
    case SweepAxis::beta: return "beta";
  }
  return "?";
}

SweepAxis parse_axis(std::string_view name) {
  if (name == "none" || name.empty()) return SweepAxis::none;
  if (name == "v") return SweepAxis::v;
  if (name == "budget_avg" || name == "e_avg") return SweepAxis::budget_avg;
  if (name == "frame_len" || name == "T") return SweepAxis::frame_len;
  if (name == "theta") return SweepAxis::theta;
  if (name == "beta") return SweepAxis::beta;
  throw std::invalid_argument("unknown sweep axis '" + std::string(name) + "'");
}

void ExperimentConfig::validate() const {
  generator.validate();
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (frame_len < 1) throw std::invalid_argument("frame_len must be >= 1");
  if (!(budget_avg >= 0.0) || !std::isfinite(budget_avg)) {
    throw std::invalid_argument("budget_avg must be >= 0");
  }
  if (policies.empty()) throw std::invalid_argument("at least one policy is required");
  policy.validate();
  predictor.validate();
  if (!(trace.stickiness >= 0.0 && trace.stickiness <= 1.0)) {
    throw std::invalid_argument("trace.stickiness must lie in [0, 1]");
  }
  if (axis != SweepAxis::none && axis_values.empty()) {
    throw std::invalid_argument("sweep values must be non-empty");
  }
}

SimulationInputs prepare_inputs(const ExperimentConfig &cfg) {
  cfg.validate();
  SimulationInputs in;
  if (cfg.trace.file.empty()) {
    in.trace = synthetic_trace(cfg.trace.seed, cfg.generator.node_count, cfg.horizon,
                               cfg.trace.stickiness);
  } else {
    in.trace = read_trace_file(cfg.trace.file);
    if (in.trace.regions.size() < cfg.horizon) {
      throw TraceFormatError("trace '" + cfg.trace.file + "' has " +
                             std::to_string(in.trace.regions.size()) + " slots, horizon needs " +
                             std::to_string(cfg.horizon));
    }
    try {
      in.trace.validate(cfg.generator.node_count);
    } catch (const std::invalid_argument &e) {
      throw TraceFormatError("trace '" + cfg.trace.file + "': " + e.what());
    }
    in.trace.regions.resize(cfg.horizon);
  }
  GeneratedScenario gen = generate_scenario(cfg.generator, in.trace, cfg.horizon, cfg.budget_avg,
                                            cfg.frame_len, cfg.scenario_seed);
  in.scenario = std::move(gen.scenario);
  in.slots = std::move(gen.slots);
  return in;
}

namespace {

class RunRecorder {
 public:
  RunRecorder(PolicyKind policy, const Scenario &scn, double beta) : scn_(scn) {
    rec_.policy = policy;
    rec_.horizon = scn.horizon;
    rec_.budget_avg = scn.budget_avg;
    rec_.per_slot.reserve(scn.horizon);
    rec_.frame_deviation_bound =
        static_cast<double>(scn.frame_len) * queue_step_bound(scn.budget_avg, scn.max_migration_cost);
    state_.beta = beta;
  }

  const CostQueueState &state() const { return state_; }

  void step(std::size_t t, Placement cur, SlotOutcome out, double objective_term) {
    rec_.per_slot.push_back({t, cur.node, out.latency, out.cost, state_.q, state_.w, objective_term});
    const double q_before = state_.q;
    state_ = advance(state_, out.cost, scn_.budget_avg);
    rec_.max_step_change = std::max(rec_.max_step_change, std::abs(state_.q - q_before));
    rec_.e_max_observed = std::max(rec_.e_max_observed, out.cost);
  }

  void begin_frame() { frame_anchor_ = state_.q; }

  /// After `slots_done` slots of the current frame.
  void check_frame(std::size_t slots_done) {
    const double dev = std::abs(state_.q - frame_anchor_);
    rec_.max_frame_deviation = std::max(rec_.max_frame_deviation, dev);
    const double w_q = queue_step_bound(scn_.budget_avg, scn_.max_migration_cost);
    if (dev > static_cast<double>(slots_done) * w_q) rec_.frame_bound_ok = false;
  }

  void note_negative_anchor() { ++rec_.negative_w_frames; }

  RunRecord finish() {
    double lat = 0.0, cost = 0.0, queue = 0.0;
    for (const SlotRecord &s : rec_.per_slot) {
      lat += s.latency;
      cost += s.cost;
      queue += s.q;
    }
    const auto n = static_cast<double>(rec_.per_slot.size());
    rec_.total_cost = cost;
    rec_.avg_latency = lat / n;
    rec_.avg_cost = cost / n;
    rec_.avg_queue = queue / n;
    rec_.final_queue = state_.q;
    return std::move(rec_);
  }

 private:
  const Scenario &scn_;
  RunRecord rec_;
  CostQueueState state_;
  double frame_anchor_ = 0.0;
};

std::span<const NodeIndex> trace_prefix(const MobilityTrace &trace, std::size_t through) {
  return std::span<const NodeIndex>(trace.regions).first(through + 1);
}

std::span<const NodeIndex> trace_window(const MobilityTrace &trace, std::size_t from,
                                        std::size_t count) {
  return std::span<const NodeIndex>(trace.regions).subspan(from, count);
}

RunRecord simulate_frames(PolicyKind policy, const PolicyConfig &cfg,
                          const PredictorSpec &predictor_spec, const SimulationInputs &in) {
  const Scenario &scn = in.scenario;
  const bool weighted = policy == PolicyKind::psp_wu;
  RunRecorder rec(policy, scn, weighted ? cfg.beta : 0.0);
  Predictor predictor(predictor_spec, scn.node_count);

  Placement prev{in.slots.front().user_node};
  const std::size_t frames = frame_count(scn.horizon, scn.frame_len);
  for (std::size_t k = 0; k < frames; ++k) {
    const std::size_t start = k * scn.frame_len;
    const std::size_t len = std::min(scn.frame_len, scn.horizon - start);

    FrameInput frame;
    frame.frame_index = k;
    frame.prev = prev;
    frame.slots.assign(in.slots.begin() + static_cast<std::ptrdiff_t>(start),
                       in.slots.begin() + static_cast<std::ptrdiff_t>(start + len));
    if (len > 1) {
      const auto predicted = predictor.predict(trace_prefix(in.trace, start),
                                               trace_window(in.trace, start + 1, len - 1), len - 1);
      for (std::size_t p = 1; p < len; ++p) frame.slots[p].user_node = predicted[p - 1];
    }

    FramePlan plan;
    if (weighted) {
      frame.q_anchor = rec.state().w;
      if (frame.q_anchor < 0.0) rec.note_negative_anchor();
      plan = pspwu_frame_decide(cfg, frame, scn, scn.budget_avg);
    } else {
      frame.q_anchor = rec.state().q;
      plan = psp_frame_decide(cfg, frame, scn, scn.budget_avg);
    }

    rec.begin_frame();
    for (std::size_t p = 0; p < len; ++p) {
      const std::size_t t = start + p;
      const Placement cur = plan.placements[p];
      rec.step(t, cur, slot_outcome(scn, in.slots[t], prev, cur), plan.slot_terms[p]);
      rec.check_frame(p + 1);
      prev = cur;
    }
  }
  return rec.finish();
}

RunRecord simulate_slots(PolicyKind policy, const PolicyConfig &cfg,
                         const PredictorSpec &predictor_spec, const SimulationInputs &in) {
  const Scenario &scn = in.scenario;
  RunRecorder rec(policy, scn, 0.0);
  Predictor predictor(predictor_spec, scn.node_count);

  const Placement initial{in.slots.front().user_node};
  Placement prev = initial;
  LazyMigrationState lazy;
  for (std::size_t t = 0; t < scn.horizon; ++t) {
    const SlotObservation &obs = in.slots[t];
    Placement cur;
    switch (policy) {
      case PolicyKind::osp: cur = osp_decide(cfg, rec.state().q, obs, prev, scn); break;
      case PolicyKind::am: cur = am_decide(obs); break;
      case PolicyKind::nm: cur = nm_decide(initial); break;
      case PolicyKind::lm: std::tie(cur, lazy) = lm_decide(lazy, obs, prev, scn, cfg); break;
      case PolicyKind::plm: {
        std::optional<SlotObservation> next;
        if (t + 1 < scn.horizon) {
          next = in.slots[t + 1];
          next->user_node = predictor.predict(trace_prefix(in.trace, t),
                                              trace_window(in.trace, t + 1, 1), 1)[0];
        }
        cur = plm_decide(obs, next, prev, scn, cfg);
        break;
      }
      default: throw std::logic_error("frame policy routed to slot loop");
    }
    rec.step(t, cur, slot_outcome(scn, obs, prev, cur), 0.0);
    prev = cur;
  }
  return rec.finish();
}

}  // namespace

RunRecord simulate(PolicyKind policy, const PolicyConfig &cfg, const PredictorSpec &predictor,
                   const SimulationInputs &inputs) {
  cfg.validate();
  inputs.scenario.validate();
  if (inputs.slots.size() != inputs.scenario.horizon) {
    throw std::invalid_argument("observation stream length must equal the horizon");
  }
  if (inputs.trace.regions.size() < inputs.scenario.horizon) {
    throw std::invalid_argument("trace shorter than the horizon");
  }
  for (const SlotObservation &obs : inputs.slots) obs.validate(inputs.scenario);
  return is_frame_policy(policy) ? simulate_frames(policy, cfg, predictor, inputs)
                                 : simulate_slots(policy, cfg, predictor, inputs);
}

std::vector<RunRecord> run(const ExperimentConfig &cfg) {
  const SimulationInputs inputs = prepare_inputs(cfg);
  std::vector<RunRecord> out;
  out.reserve(cfg.policies.size());
  for (PolicyKind p : cfg.policies) out.push_back(simulate(p, cfg.policy, cfg.predictor, inputs));
  return out;
}

SweepRow summarize(double axis_value, const RunRecord &rec) {
  return {axis_value,    rec.policy,      rec.avg_latency,      rec.avg_cost,
          rec.avg_queue, rec.final_queue, rec.negative_w_frames};
}

ExperimentConfig with_axis_value(ExperimentConfig cfg, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::none: break;
    case SweepAxis::v: cfg.policy.v = value; break;
    case SweepAxis::budget_avg: cfg.budget_avg = value; break;
    case SweepAxis::frame_len:
      if (!(value >= 1.0) || value != std::floor(value)) {
        throw std::invalid_argument("frame_len sweep values must be positive integers");
      }
      cfg.frame_len = static_cast<std::size_t>(value);
      break;
    case SweepAxis::theta: cfg.policy.theta = value; break;
    case SweepAxis::beta: cfg.policy.beta = value; break;
  }
  cfg.axis = SweepAxis::none;
  cfg.axis_values.clear();
  return cfg;
}

namespace {

void check_sweep(const ExperimentConfig &cfg) {
  cfg.validate();
  if (cfg.axis == SweepAxis::none) throw std::invalid_argument("sweep needs an axis");
}

SweepRow sweep_point(const ExperimentConfig &cfg, std::size_t job) {
  const std::size_t n_pol = cfg.policies.size();
  const double value = cfg.axis_values[job / n_pol];
  const PolicyKind policy = cfg.policies[job % n_pol];
  const ExperimentConfig point = with_axis_value(cfg, cfg.axis, value);
  const SimulationInputs inputs = prepare_inputs(point);
  return summarize(value, simulate(policy, point.policy, point.predictor, inputs));
}

}  // namespace

std::vector<SweepRow> sweep_serial(const ExperimentConfig &cfg) {
  check_sweep(cfg);
  const std::size_t jobs = cfg.axis_values.size() * cfg.policies.size();
  std::vector<SweepRow> rows;
  rows.reserve(jobs);
  for (std::size_t j = 0; j < jobs; ++j) rows.push_back(sweep_point(cfg, j));
  return rows;
}

std::vector<SweepRow> sweep(const ExperimentConfig &cfg, int max_threads) {
  check_sweep(cfg);
  const std::size_t jobs = cfg.axis_values.size() * cfg.policies.size();
  const int threads = max_threads > 0 ? max_threads : sweep_thread_limit();
  std::vector<SweepRow> rows(jobs);
  std::vector<std::exception_ptr> errors(jobs);

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::size_t j = 0; j < jobs; ++j) {
    try {
      rows[j] = sweep_point(cfg, j);
    } catch (...) {
      errors[j] = std::current_exception();
    }
  }
  for (const auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

int sweep_thread_limit() {
  if (const char *env = std::getenv("EDGEPLACER_THREADS")) {
    char *end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<int>(n);
  }
  return omp_get_max_threads();
}

}  // namespace edgeplacer
