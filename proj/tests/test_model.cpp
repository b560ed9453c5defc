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

#include <numeric>
#include <random>
#include <stdexcept>

#include "edgeplacer/model.hpp"

using namespace edgeplacer;

namespace {

// Two nodes, 64 Mbps backhaul, user at node 0, 8 MB over 8 Mbps, 4 Gcycles on 8 GHz.
struct TwoNodeFixture : ::testing::Test {
  Scenario scn = Scenario::uniform(2, 64.0, 0.0, 10, 1);
  SlotObservation obs = [] {
    SlotObservation o;
    o.user_node = 0;
    o.input_size_mb = 8.0;
    o.workload_gcycles = 4.0;
    o.access_rate_mbps = 8.0;
    o.compute_capacity_ghz = {8.0, 8.0};
    o.container_size_mb = 50.0;
    o.unit_migration_cost = 2.0;
    return o;
  }();
};

}  // namespace

TEST_F(TwoNodeFixture, LatencyAtUserNodeHasNoBackhaulTerm) {
  // 64 Mb / 8 Mbps + 0 + 4 / 8
  EXPECT_DOUBLE_EQ(service_latency(scn, obs, {0}), 8.5);
}

TEST_F(TwoNodeFixture, LatencyAtRemoteNodeAddsBackhaulTransfer) {
  // 8 + 64 Mb / 64 Mbps + 0.5
  EXPECT_DOUBLE_EQ(service_latency(scn, obs, {1}), 9.5);
}

TEST_F(TwoNodeFixture, ZeroWorkAndInputGivesZeroLatency) {
  obs.input_size_mb = 0.0;
  obs.workload_gcycles = 0.0;
  EXPECT_EQ(service_latency(scn, obs, {0}), 0.0);
  EXPECT_EQ(service_latency(scn, obs, {1}), 0.0);
}

TEST_F(TwoNodeFixture, LatencyRejectsOutOfRangeNode) {
  EXPECT_THROW(service_latency(scn, obs, {2}), std::out_of_range);
}

TEST_F(TwoNodeFixture, MigrationCostExamples) {
  EXPECT_EQ(migration_cost(obs, {1}, {1}), 0.0);
  EXPECT_DOUBLE_EQ(migration_cost(obs, {0}, {1}), 0.1);  // 0.050 GB x 2
  obs.container_size_mb = 25.0;
  obs.unit_migration_cost = 10.0;
  EXPECT_DOUBLE_EQ(migration_cost(obs, {1}, {0}), 0.25);
}

TEST_F(TwoNodeFixture, SlotOutcomeCombinesLatencyAndCost) {
  const SlotOutcome stay = slot_outcome(scn, obs, {0}, {0});
  EXPECT_EQ(stay.cost, 0.0);
  EXPECT_DOUBLE_EQ(stay.latency, 8.5);

  const SlotOutcome move = slot_outcome(scn, obs, {1}, {0});
  EXPECT_DOUBLE_EQ(move.cost, 0.1);
  EXPECT_DOUBLE_EQ(move.latency, 8.5);
  EXPECT_THROW(slot_outcome(scn, obs, {5}, {0}), std::out_of_range);
}

TEST_F(TwoNodeFixture, ValidationCatchesBadObservations) {
  EXPECT_NO_THROW(obs.validate(scn));
  SlotObservation bad = obs;
  bad.user_node = 2;
  EXPECT_THROW(bad.validate(scn), std::invalid_argument);
  bad = obs;
  bad.access_rate_mbps = 0.0;
  EXPECT_THROW(bad.validate(scn), std::invalid_argument);
  bad = obs;
  bad.compute_capacity_ghz = {8.0};
  EXPECT_THROW(bad.validate(scn), std::invalid_argument);
}

TEST(Scenario, ValidationRules) {
  EXPECT_NO_THROW(Scenario::uniform(3, 20.0, 1.0, 5, 2).validate());
  EXPECT_THROW(Scenario::uniform(0, 20.0, 1.0, 5, 2).validate(), std::invalid_argument);
  EXPECT_THROW(Scenario::uniform(3, 20.0, -1.0, 5, 2).validate(), std::invalid_argument);
  EXPECT_THROW(Scenario::uniform(3, 20.0, 1.0, 0, 2).validate(), std::invalid_argument);
  EXPECT_THROW(Scenario::uniform(3, 20.0, 1.0, 5, 0).validate(), std::invalid_argument);
  EXPECT_THROW(Scenario::uniform(3, 0.0, 1.0, 5, 1).validate(), std::invalid_argument);
}

TEST(Placement, IndicatorIsOneHot) {
  for (std::size_t n = 1; n < 8; ++n) {
    for (NodeIndex i = 0; i < n; ++i) {
      const auto x = Placement{i}.indicator(n);
      EXPECT_EQ(std::accumulate(x.begin(), x.end(), 0), 1);
      EXPECT_EQ(x[i], 1);
    }
  }
  EXPECT_THROW(Placement{3}.indicator(3), std::out_of_range);
}

TEST(ModelProperties, RandomInstancesSatisfyInvariants) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.5, 20.0);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 6;
    Scenario scn = Scenario::uniform(n, u(rng), 0.0, 1, 1);
    SlotObservation obs;
    obs.user_node = trial % n;
    obs.input_size_mb = u(rng);
    obs.workload_gcycles = u(rng);
    obs.access_rate_mbps = u(rng);
    obs.container_size_mb = u(rng);
    obs.unit_migration_cost = u(rng);
    double d_max = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      obs.compute_capacity_ghz.push_back(u(rng));
      d_max = std::max(d_max, obs.compute_capacity_ghz.back());
    }
    for (NodeIndex i = 0; i < n; ++i) {
      const double h = service_latency(scn, obs, {i});
      EXPECT_GE(h, obs.workload_gcycles / d_max);
      EXPECT_GT(h, 0.0);
      for (NodeIndex j = 0; j < n; ++j) {
        const SlotOutcome a = slot_outcome(scn, obs, {j}, {i});
        const SlotOutcome b = slot_outcome(scn, obs, {j}, {i});
        EXPECT_EQ(a.latency, b.latency);
        EXPECT_EQ(a.cost, b.cost);
        EXPECT_GE(a.cost, 0.0);
        // P_ji = 0 iff j == i, and symmetric.
        EXPECT_EQ(a.cost == 0.0, i == j);
        EXPECT_EQ(migration_cost(obs, {j}, {i}), migration_cost(obs, {i}, {j}));
      }
    }
  }
}
