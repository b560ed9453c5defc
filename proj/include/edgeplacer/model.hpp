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
 * @file model.hpp
 *
 * Per-slot arithmetic of the single-user MEC system: service latency of a
 * placement, migration cost between two placements, and the validity rules
 * for scenarios and slot observations.
 *
 * Units: sizes in megabytes, rates in megabits/second, workloads in giga
 * CPU cycles, capacities in GHz, latency in seconds. 1 MB = 8 Mb and
 * 1 GB = 1000 MB (decimal).
 */

#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace edgeplacer {

using NodeIndex = std::size_t;

inline constexpr double kMegabitsPerMegabyte = 8.0;
inline constexpr double kMegabytesPerGigabyte = 1000.0;

/// One-hot placement decision x(t), stored as the index of the hosting node.
struct Placement {
  NodeIndex node = 0;

  auto operator<=>(const Placement &) const = default;

  /// Expands to the indicator vector x_i(t); exactly one entry is 1.
  std::vector<int> indicator(std::size_t node_count) const;
};

/// Static description of the edge system.
struct Scenario {
  std::size_t node_count = 1;
  /// Row-major node_count x node_count backhaul rates in Mbps; diagonal unused.
  std::vector<double> backhaul_rate;
  double budget_avg = 0.0;
  std::size_t horizon = 1;
  std::size_t frame_len = 1;
  /// Largest migration cost any slot can produce (theoretical E_max).
  double max_migration_cost = 0.0;

  double backhaul(NodeIndex from, NodeIndex to) const {
    return backhaul_rate[from * node_count + to];
  }

  /// Throws std::invalid_argument when an invariant does not hold.
  void validate() const;

  /// Scenario with the same backhaul rate between every pair of nodes.
  static Scenario uniform(std::size_t node_count, double backhaul_mbps, double budget_avg,
                          std::size_t horizon, std::size_t frame_len,
                          double max_migration_cost = 0.0);
};

/// Everything time-varying at one slot.
struct SlotObservation {
  std::size_t slot = 0;
  NodeIndex user_node = 0;
  double input_size_mb = 0.0;
  double workload_gcycles = 0.0;
  double access_rate_mbps = 1.0;
  std::vector<double> compute_capacity_ghz;
  double container_size_mb = 0.0;
  /// Cost units per gigabyte moved.
  double unit_migration_cost = 0.0;

  /// Throws std::invalid_argument when the observation does not fit `scn`.
  void validate(const Scenario &scn) const;
};

struct SlotOutcome {
  double latency = 0.0;
  double cost = 0.0;
};

/// H_i(t): access transfer + backhaul transfer (zero when co-located with the
/// user's node) + compute time. Throws std::out_of_range for a bad node.
double service_latency(const Scenario &scn, const SlotObservation &obs, Placement placed_at);

/// P_ji(t): zero when the service stays put, else container GB x unit cost.
double migration_cost(const SlotObservation &obs, Placement from, Placement to);

/// L(t) and E(t) for moving from `prev` to `cur` at this slot.
SlotOutcome slot_outcome(const Scenario &scn, const SlotObservation &obs, Placement prev,
                         Placement cur);

}  // namespace edgeplacer
