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

#include "edgeplacer/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "edgeplacer/queue.hpp"

namespace edgeplacer {

namespace {

double uniform(std::mt19937_64 &rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::size_t pick(std::mt19937_64 &rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::mt19937_64 instance_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

std::string sequence_string(const std::vector<Placement> &seq) {
  std::string s;
  for (const Placement &p : seq) s += std::to_string(p.node);
  return s;
}

template <typename Check>
OracleTally tally(std::size_t instances, int max_threads, Check &&check) {
  std::vector<std::string> message(instances);
  std::vector<double> rel(instances, 0.0);
  std::vector<char> ok(instances, 0);
  const int threads = max_threads > 0 ? max_threads : sweep_thread_limit();

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::size_t i = 0; i < instances; ++i) {
    try {
      ok[i] = check(i, rel[i], message[i]) ? 1 : 0;
    } catch (const std::exception &e) {
      message[i] = e.what();
    }
  }

  OracleTally t;
  t.total = instances;
  for (std::size_t i = 0; i < instances; ++i) {
    t.max_rel_error = std::max(t.max_rel_error, rel[i]);
    if (ok[i]) {
      ++t.passed;
    } else {
      t.failures.push_back("instance " + std::to_string(i) + ": " + message[i]);
    }
  }
  return t;
}

}  // namespace

double relative_difference(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

FrameInstance random_frame_instance(std::mt19937_64 &rng, std::size_t nodes, std::size_t frame_len,
                                    double anchor) {
  const GeneratorConfig gen;
  FrameInstance inst;
  inst.scenario = Scenario::uniform(nodes, gen.backhaul_mbps, 0.0, frame_len, frame_len,
                                    gen.max_migration_cost());
  for (NodeIndex j = 0; j < nodes; ++j) {
    for (NodeIndex i = 0; i < nodes; ++i) {
      if (i != j) inst.scenario.backhaul_rate[j * nodes + i] = uniform(rng, 10.0, 100.0);
    }
  }
  inst.e_avg = uniform(rng, 0.0, 0.5);
  inst.scenario.budget_avg = inst.e_avg;
  inst.cfg.v = uniform(rng, 0.1, 20.0);
  inst.cfg.theta = uniform(rng, 0.0, 100.0);

  inst.frame.q_anchor = anchor;
  inst.frame.prev = {pick(rng, 0, nodes - 1)};
  for (std::size_t p = 0; p < frame_len; ++p) {
    SlotObservation obs;
    obs.slot = p;
    obs.user_node = pick(rng, 0, nodes - 1);
    obs.input_size_mb = uniform(rng, gen.input_size_mb.lo, gen.input_size_mb.hi);
    obs.workload_gcycles = uniform(rng, gen.workload_gcycles.lo, gen.workload_gcycles.hi);
    obs.access_rate_mbps = uniform(rng, gen.bandwidth_mhz.lo, gen.bandwidth_mhz.hi);
    obs.compute_capacity_ghz.resize(nodes);
    for (double &d : obs.compute_capacity_ghz) d = uniform(rng, gen.capacity_ghz.lo, gen.capacity_ghz.hi);
    obs.container_size_mb = uniform(rng, gen.container_size_mb.lo, gen.container_size_mb.hi);
    obs.unit_migration_cost = uniform(rng, gen.unit_migration_cost.lo, gen.unit_migration_cost.hi);
    inst.frame.slots.push_back(std::move(obs));
  }
  return inst;
}

OracleTally verify_frame_oracle(std::uint64_t seed, std::size_t instances, bool weight_update,
                                int max_threads) {
  return tally(instances, max_threads, [&](std::size_t i, double &rel, std::string &msg) {
    std::mt19937_64 rng = instance_rng(seed, i);
    const std::size_t nodes = pick(rng, 2, 5);
    const std::size_t len = pick(rng, 2, 4);
    const double anchor = weight_update ? uniform(rng, -20.0, 50.0) : uniform(rng, 0.0, 50.0);
    const FrameInstance inst = random_frame_instance(rng, nodes, len, anchor);

    const FramePlan dp = weight_update
                             ? pspwu_frame_decide(inst.cfg, inst.frame, inst.scenario, inst.e_avg)
                             : psp_frame_decide(inst.cfg, inst.frame, inst.scenario, inst.e_avg);
    const FramePlan oracle = brute_force_frame(inst.frame, inst.scenario, inst.e_avg, inst.cfg);
    rel = relative_difference(dp.objective, oracle.objective);
    const bool same_seq = dp.placements == oracle.placements;
    if (rel <= kOracleRelTolerance && same_seq) return true;
    std::ostringstream os;
    os << "N=" << nodes << " T=" << len << " dp=" << dp.objective << " [" << sequence_string(dp.placements)
       << "] oracle=" << oracle.objective << " [" << sequence_string(oracle.placements) << "]";
    msg = os.str();
    return false;
  });
}

HorizonCheck check_horizon_instance(std::uint64_t seed, double v, double slack) {
  constexpr std::size_t kNodes = 3;
  constexpr std::size_t kSlots = 6;
  std::mt19937_64 rng(seed);
  GeneratorConfig gen;
  gen.node_count = kNodes;
  const double e_avg = uniform(rng, 0.02, 0.2);
  const MobilityTrace trace = synthetic_trace(rng(), kNodes, kSlots, 0.5);
  GeneratedScenario g = generate_scenario(gen, trace, kSlots, e_avg, 1, rng());

  SimulationInputs in{g.scenario, g.slots, trace};
  PolicyConfig cfg;
  cfg.v = v;
  const RunRecord osp = simulate(PolicyKind::osp, cfg, PredictorSpec{}, in);
  const auto opt = brute_force_horizon(in.scenario, in.slots, Placement{in.slots.front().user_node}, e_avg);

  HorizonCheck c;
  c.osp_latency = osp.avg_latency;
  if (!opt) return c;  // every instance has the never-migrate sequence, so unreachable
  c.optimum_latency = opt->avg_latency;
  const double b = bound_constant_b(e_avg, in.scenario.max_migration_cost);
  c.bound = opt->avg_latency + b / v + slack * opt->avg_latency;
  c.within = osp.avg_latency <= c.bound;
  return c;
}

OracleTally verify_horizon_bound(std::uint64_t seed, std::size_t instances, double v, double slack,
                                 int max_threads) {
  return tally(instances, max_threads, [&](std::size_t i, double &rel, std::string &msg) {
    std::mt19937_64 rng = instance_rng(seed, i);
    const HorizonCheck c = check_horizon_instance(rng(), v, slack);
    rel = c.optimum_latency > 0.0 ? (c.osp_latency - c.optimum_latency) / c.optimum_latency : 0.0;
    if (c.within) return true;
    std::ostringstream os;
    os << "osp=" << c.osp_latency << " optimum=" << c.optimum_latency << " bound=" << c.bound;
    msg = os.str();
    return false;
  });
}

}  // namespace edgeplacer
