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
 * @file verify.hpp
 *
 * Randomised oracle suites: layered-graph frame plans against exhaustive
 * enumeration, and the reactive policy's realised latency against the
 * budget-constrained hindsight optimum on tiny horizons. Instances are
 * independent, seeded per index, and evaluated with an OpenMP parallel
 * loop; results are reported in index order.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "edgeplacer/harness.hpp"

namespace edgeplacer {

inline constexpr double kOracleRelTolerance = 1e-9;

struct OracleTally {
  std::size_t passed = 0;
  std::size_t total = 0;
  double max_rel_error = 0.0;
  std::vector<std::string> failures;

  bool all_passed() const { return passed == total; }
};

struct FrameInstance {
  Scenario scenario;
  FrameInput frame;
  PolicyConfig cfg;
  double e_avg = 0.0;
};

/// Random frame problem: node and slot values from the default generator
/// ranges, random user nodes, random backhaul matrix, and `anchor` as
/// Q(kT) or W(kT).
FrameInstance random_frame_instance(std::mt19937_64 &rng, std::size_t nodes, std::size_t frame_len,
                                    double anchor);

/// Relative difference |a - b| / max(|a|, |b|), 0 when both are 0.
double relative_difference(double a, double b);

/// N in {2..5}, T in {2..4}; anchor from [0, 50] (weight_update = false) or
/// [-20, 50] (weight_update = true). Objectives must agree within
/// kOracleRelTolerance and the sequences must be identical.
OracleTally verify_frame_oracle(std::uint64_t seed, std::size_t instances, bool weight_update,
                                int max_threads = 0);

struct HorizonCheck {
  double osp_latency = 0.0;
  double optimum_latency = 0.0;
  double bound = 0.0;
  bool within = false;
};

/// One tiny instance (N = 3, 6 slots): OSP's realised average latency
/// against L* + B/V + slack * L*.
HorizonCheck check_horizon_instance(std::uint64_t seed, double v, double slack);

/// OSP latency vs the hindsight optimum plus B/V over `instances` tiny problems.
OracleTally verify_horizon_bound(std::uint64_t seed, std::size_t instances, double v,
                                 double slack = 0.10, int max_threads = 0);

}  // namespace edgeplacer
