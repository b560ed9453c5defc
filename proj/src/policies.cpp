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

#include "edgeplacer/policies.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "edgeplacer/layered_path.hpp"

namespace edgeplacer {

namespace {

std::uint64_t checked_power(std::size_t base, std::size_t exponent) {
  std::uint64_t result = 1;
  for (std::size_t k = 0; k < exponent; ++k) {
    if (base != 0 && result > kEnumerationGuard / base + 1) return kEnumerationGuard + 1;
    result *= base;
  }
  return result;
}

void check_frame(const FrameInput &frame, const Scenario &scn) {
  if (frame.slots.empty()) throw std::invalid_argument("frame has no slots");
  if (frame.prev.node >= scn.node_count) throw std::out_of_range("previous placement outside node range");
}

// Layered-graph plan for an arbitrary anchor (Q or W).
FramePlan solve_frame(const PolicyConfig &cfg, const FrameInput &frame, const Scenario &scn,
                      double e_avg) {
  check_frame(frame, scn);
  const std::size_t n = scn.node_count;
  const std::size_t len = frame.slots.size();

  std::vector<double> latency(len * n);
  for (std::size_t p = 0; p < len; ++p) {
    for (NodeIndex i = 0; i < n; ++i) latency[p * n + i] = service_latency(scn, frame.slots[p], {i});
  }

  auto weight = [&](std::size_t p, NodeIndex from, NodeIndex to) {
    const double move = migration_cost(frame.slots[p], {from}, {to});
    return frame_edge_weight(cfg, frame.q_anchor, e_avg, len, p, move, latency[p * n + to]);
  };
  LayeredPath path = shortest_layered_path(n, len, frame.prev.node, weight);

  FramePlan plan;
  plan.placements.reserve(len);
  for (NodeIndex i : path.nodes) plan.placements.push_back({i});
  plan.objective = path.total;
  plan.slot_terms = std::move(path.step_cost);
  return plan;
}

}  // namespace

std::string_view to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::osp: return "osp";
    case PolicyKind::psp: return "psp";
    case PolicyKind::psp_wu: return "psp-wu";
    case PolicyKind::am: return "am";
    case PolicyKind::nm: return "nm";
    case PolicyKind::lm: return "lm";
    case PolicyKind::plm: return "plm";
  }
  return "?";
}

PolicyKind parse_policy(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "osp") return PolicyKind::osp;
  if (lower == "psp") return PolicyKind::psp;
  if (lower == "psp-wu" || lower == "pspwu" || lower == "psp_wu") return PolicyKind::psp_wu;
  if (lower == "am") return PolicyKind::am;
  if (lower == "nm") return PolicyKind::nm;
  if (lower == "lm") return PolicyKind::lm;
  if (lower == "plm") return PolicyKind::plm;
  throw std::invalid_argument("unknown policy '" + std::string(name) + "'");
}

bool is_frame_policy(PolicyKind kind) {
  return kind == PolicyKind::psp || kind == PolicyKind::psp_wu;
}

void PolicyConfig::validate() const {
  if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("policy.v must be >= 0");
  if (!(theta >= 0.0) || !std::isfinite(theta)) throw std::invalid_argument("policy.theta must be >= 0");
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("policy.beta must lie in [0, 1]");
  if (!(lm_gamma > 0.0)) throw std::invalid_argument("policy.lm_gamma must be > 0");
  if (!(plm_weight > 0.0)) throw std::invalid_argument("policy.plm_weight must be > 0");
}

NodeIndex osp_argmin(std::span<const double> latency, std::span<const double> move_cost, double v,
                     double q) {
  if (latency.empty() || latency.size() != move_cost.size()) {
    throw std::invalid_argument("osp_argmin: latency and move cost must be non-empty and aligned");
  }
  NodeIndex best = 0;
  double best_score = v * latency[0] + q * move_cost[0];
  for (NodeIndex i = 1; i < latency.size(); ++i) {
    const double score = v * latency[i] + q * move_cost[i];
    if (score < best_score) {
      best_score = score;
      best = i;
    }
  }
  return best;
}

Placement osp_decide(const PolicyConfig &cfg, double q, const SlotObservation &obs, Placement prev,
                     const Scenario &scn) {
  if (!(q >= 0.0)) throw std::invalid_argument("osp_decide: queue must be nonnegative");
  std::vector<double> latency(scn.node_count), move(scn.node_count);
  for (NodeIndex i = 0; i < scn.node_count; ++i) {
    latency[i] = service_latency(scn, obs, {i});
    move[i] = migration_cost(obs, prev, {i});
  }
  return {osp_argmin(latency, move, cfg.v, q)};
}

double frame_edge_weight(const PolicyConfig &cfg, double anchor, double e_avg,
                         std::size_t frame_len, std::size_t pos, double move_cost,
                         double latency) {
  const double remaining = static_cast<double>(frame_len - pos);
  return anchor * (move_cost - e_avg + cfg.theta * remaining) + cfg.v * latency;
}

FramePlan psp_frame_decide(const PolicyConfig &cfg, const FrameInput &frame, const Scenario &scn,
                           double e_avg) {
  if (!(frame.q_anchor >= 0.0)) throw std::invalid_argument("psp_frame_decide: Q(kT) must be >= 0");
  return solve_frame(cfg, frame, scn, e_avg);
}

FramePlan pspwu_frame_decide(const PolicyConfig &cfg, const FrameInput &frame,
                             const Scenario &scn, double e_avg) {
  return solve_frame(cfg, frame, scn, e_avg);
}

Placement am_decide(const SlotObservation &obs) { return {obs.user_node}; }

Placement nm_decide(Placement initial) { return initial; }

std::pair<Placement, LazyMigrationState> lm_decide(LazyMigrationState state,
                                                    const SlotObservation &obs, Placement prev,
                                                    const Scenario &scn, const PolicyConfig &cfg) {
  if (!(state.accumulated >= 0.0)) throw std::invalid_argument("lm_decide: accumulator must be >= 0");
  const Placement nearest{obs.user_node};
  if (prev == nearest) return {prev, LazyMigrationState{}};

  const double gap = service_latency(scn, obs, prev) - service_latency(scn, obs, nearest);
  state.accumulated += std::max(0.0, gap);
  if (state.accumulated >= cfg.lm_gamma * migration_cost(obs, prev, nearest)) {
    return {nearest, LazyMigrationState{}};
  }
  return {prev, state};
}

Placement plm_decide(const SlotObservation &obs, const std::optional<SlotObservation> &predicted_next,
                     Placement prev, const Scenario &scn, const PolicyConfig &cfg) {
  const Placement nearest{obs.user_node};
  if (prev == nearest) return prev;

  double stay = service_latency(scn, obs, prev);
  double move = service_latency(scn, obs, nearest);
  if (predicted_next) {
    stay += service_latency(scn, *predicted_next, prev);
    move += service_latency(scn, *predicted_next, nearest);
  }
  const double saving = stay - move;
  if (migration_cost(obs, prev, nearest) < cfg.plm_weight * saving) return nearest;
  return prev;
}

FramePlan brute_force_frame(const FrameInput &frame, const Scenario &scn, double e_avg,
                            const PolicyConfig &cfg) {
  check_frame(frame, scn);
  const std::size_t n = scn.node_count;
  const std::size_t len = frame.slots.size();
  if (checked_power(n, len) > kEnumerationGuard) {
    throw std::invalid_argument("brute_force_frame: N^T exceeds the enumeration guard");
  }

  std::vector<NodeIndex> seq(len, 0);
  FramePlan best;
  best.objective = std::numeric_limits<double>::infinity();
  std::vector<double> terms(len);
  for (;;) {
    double total = 0.0;
    NodeIndex from = frame.prev.node;
    for (std::size_t p = 0; p < len; ++p) {
      const SlotObservation &obs = frame.slots[p];
      terms[p] = frame_edge_weight(cfg, frame.q_anchor, e_avg, len, p,
                                   migration_cost(obs, {from}, {seq[p]}),
                                   service_latency(scn, obs, {seq[p]}));
      total += terms[p];
      from = seq[p];
    }
    if (total < best.objective) {
      best.objective = total;
      best.slot_terms = terms;
      best.placements.assign(seq.size(), Placement{});
      for (std::size_t p = 0; p < len; ++p) best.placements[p].node = seq[p];
    }
    // Odometer with the last slot varying fastest: lexicographic order.
    std::size_t pos = len;
    while (pos > 0) {
      --pos;
      if (++seq[pos] < n) break;
      seq[pos] = 0;
      if (pos == 0) return best;
    }
  }
}

std::optional<HorizonOptimum> brute_force_horizon(const Scenario &scn,
                                                  std::span<const SlotObservation> slots,
                                                  std::optional<Placement> initial, double e_avg) {
  const std::size_t n = scn.node_count;
  const std::size_t len = slots.size();
  if (len == 0) throw std::invalid_argument("brute_force_horizon: empty horizon");
  if (checked_power(n, len) > kEnumerationGuard) {
    throw std::invalid_argument("brute_force_horizon: N^T exceeds the enumeration guard");
  }

  const double budget_total = static_cast<double>(len) * e_avg;
  std::vector<NodeIndex> seq(len, 0);
  std::optional<HorizonOptimum> best;
  double best_latency = std::numeric_limits<double>::infinity();
  for (;;) {
    double latency = 0.0;
    double cost = 0.0;
    for (std::size_t t = 0; t < len; ++t) {
      latency += service_latency(scn, slots[t], {seq[t]});
      if (t > 0) {
        cost += migration_cost(slots[t], {seq[t - 1]}, {seq[t]});
      } else if (initial) {
        cost += migration_cost(slots[t], *initial, {seq[t]});
      }
    }
    if (cost <= budget_total && latency < best_latency) {
      best_latency = latency;
      HorizonOptimum opt;
      for (NodeIndex i : seq) opt.placements.push_back({i});
      opt.avg_latency = latency / static_cast<double>(len);
      opt.avg_cost = cost / static_cast<double>(len);
      best = std::move(opt);
    }
    std::size_t pos = len;
    while (pos > 0) {
      --pos;
      if (++seq[pos] < n) break;
      seq[pos] = 0;
      if (pos == 0) return best;
    }
  }
}

}  // namespace edgeplacer
