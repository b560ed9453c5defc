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

#include "edgeplacer/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace edgeplacer {

namespace {

void require(bool ok, const char *what) {
  if (!ok) throw std::invalid_argument(what);
}

bool positive(double x) { return std::isfinite(x) && x > 0.0; }
bool nonnegative(double x) { return std::isfinite(x) && x >= 0.0; }

void check_node(const Scenario &scn, Placement p) {
  if (p.node >= scn.node_count) {
    throw std::out_of_range("placement node " + std::to_string(p.node) + " outside [0, " +
                            std::to_string(scn.node_count) + ")");
  }
}

}  // namespace

std::vector<int> Placement::indicator(std::size_t node_count) const {
  if (node >= node_count) throw std::out_of_range("placement node outside node range");
  std::vector<int> x(node_count, 0);
  x[node] = 1;
  return x;
}

void Scenario::validate() const {
  require(node_count >= 1, "scenario needs at least one node");
  require(horizon >= 1, "horizon must be at least one slot");
  require(frame_len >= 1, "frame length must be at least one slot");
  require(nonnegative(budget_avg), "budget_avg must be nonnegative");
  require(nonnegative(max_migration_cost), "max_migration_cost must be nonnegative");
  require(backhaul_rate.size() == node_count * node_count,
          "backhaul matrix must be node_count x node_count");
  for (NodeIndex j = 0; j < node_count; ++j) {
    for (NodeIndex i = 0; i < node_count; ++i) {
      if (i != j) require(positive(backhaul(j, i)), "off-diagonal backhaul rates must be > 0");
    }
  }
}

Scenario Scenario::uniform(std::size_t node_count, double backhaul_mbps, double budget_avg,
                           std::size_t horizon, std::size_t frame_len,
                           double max_migration_cost) {
  Scenario scn;
  scn.node_count = node_count;
  scn.backhaul_rate.assign(node_count * node_count, backhaul_mbps);
  for (NodeIndex i = 0; i < node_count; ++i) scn.backhaul_rate[i * node_count + i] = 0.0;
  scn.budget_avg = budget_avg;
  scn.horizon = horizon;
  scn.frame_len = frame_len;
  scn.max_migration_cost = max_migration_cost;
  return scn;
}

void SlotObservation::validate(const Scenario &scn) const {
  require(user_node < scn.node_count, "user_node outside node range");
  require(nonnegative(input_size_mb), "input size must be nonnegative");
  require(nonnegative(workload_gcycles), "workload must be nonnegative");
  require(positive(access_rate_mbps), "access rate must be > 0");
  require(compute_capacity_ghz.size() == scn.node_count,
          "compute capacity vector must have one entry per node");
  for (double d : compute_capacity_ghz) require(positive(d), "compute capacity must be > 0");
  require(nonnegative(container_size_mb), "container size must be nonnegative");
  require(nonnegative(unit_migration_cost), "unit migration cost must be nonnegative");
}

double service_latency(const Scenario &scn, const SlotObservation &obs, Placement placed_at) {
  check_node(scn, placed_at);
  const double megabits = obs.input_size_mb * kMegabitsPerMegabyte;
  const double access = megabits / obs.access_rate_mbps;
  const double backhaul =
      placed_at.node == obs.user_node ? 0.0 : megabits / scn.backhaul(obs.user_node, placed_at.node);
  const double compute = obs.workload_gcycles / obs.compute_capacity_ghz[placed_at.node];
  return access + backhaul + compute;
}

double migration_cost(const SlotObservation &obs, Placement from, Placement to) {
  if (from == to) return 0.0;
  return obs.container_size_mb / kMegabytesPerGigabyte * obs.unit_migration_cost;
}

SlotOutcome slot_outcome(const Scenario &scn, const SlotObservation &obs, Placement prev,
                         Placement cur) {
  check_node(scn, prev);
  return {service_latency(scn, obs, cur), migration_cost(obs, prev, cur)};
}

}  // namespace edgeplacer
