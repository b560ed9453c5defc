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

#include <random>
#include <stdexcept>
#include <vector>

#include "edgeplacer/predict.hpp"

using namespace edgeplacer;

namespace {

PredictorSpec oracle(std::vector<double> acc, std::uint64_t seed = 1) {
  return PredictorSpec{.kind = PredictorKind::oracle_noisy, .accuracies = std::move(acc), .seed = seed};
}

}  // namespace

TEST(Predictor, PerfectAccuracyReturnsTruth) {
  Predictor p(oracle({1.0}), 6);
  const std::vector<NodeIndex> history{0, 1};
  const std::vector<NodeIndex> truth{3, 5, 2, 4};
  EXPECT_EQ(p.predict(history, truth, 4), truth);
  EXPECT_EQ(p.predict(history, truth, 2), (std::vector<NodeIndex>{3, 5}));
}

TEST(Predictor, ZeroAccuracyWithTwoRegionsReturnsComplement) {
  Predictor p(oracle({0.0}), 2);
  const std::vector<NodeIndex> history{0};
  const std::vector<NodeIndex> truth{0, 1, 1, 0, 1};
  EXPECT_EQ(p.predict(history, truth, 5), (std::vector<NodeIndex>{1, 0, 0, 1, 0}));
}

TEST(Predictor, WrongGuessesNeverHitTheTruth) {
  Predictor p(oracle({0.0}), 6);
  const std::vector<NodeIndex> history{0};
  std::mt19937_64 rng(3);
  std::vector<std::size_t> seen(6, 0);
  for (int i = 0; i < 2000; ++i) {
    const std::vector<NodeIndex> truth{rng() % 6};
    const auto g = p.predict(history, truth, 1);
    EXPECT_NE(g[0], truth[0]);
    ++seen[g[0]];
  }
  for (std::size_t c : seen) EXPECT_GT(c, 0u);
}

TEST(Predictor, MarkovOnAlternatingHistory) {
  Predictor p(PredictorSpec{.kind = PredictorKind::markov1}, 3);
  std::vector<NodeIndex> history;
  for (int i = 0; i < 9; ++i) history.push_back(i % 2);
  ASSERT_EQ(history.back(), 0u);
  EXPECT_EQ(p.predict(history, {}, 2), (std::vector<NodeIndex>{1, 0}));
}

TEST(Predictor, MovingModePrefersLowestIndexOnTies) {
  Predictor p(PredictorSpec{.kind = PredictorKind::moving_mode, .window = 4}, 4);
  const std::vector<NodeIndex> history{3, 3, 3, 2, 2, 1, 1};
  // Last four: 2, 2, 1, 1 -> tie between 1 and 2.
  EXPECT_EQ(p.predict(history, {}, 3), (std::vector<NodeIndex>{1, 1, 1}));
}

TEST(Predictor, DeterministicGivenSeed) {
  const std::vector<NodeIndex> history{0, 1, 2};
  std::mt19937_64 rng(4);
  std::vector<NodeIndex> truth(3000);
  for (NodeIndex &r : truth) r = rng() % 6;
  Predictor a(oracle(accuracy_presets::arima, 17), 6);
  Predictor b(oracle(accuracy_presets::arima, 17), 6);
  EXPECT_EQ(a.predict(history, truth, truth.size()), b.predict(history, truth, truth.size()));
}

TEST(Predictor, EmpiricalAccuracyMatchesPresets) {
  constexpr int kTrials = 10000;
  const std::vector<NodeIndex> history{0};
  for (const char *name : {"lstm", "arima", "sma"}) {
    const auto &acc = accuracy_presets::by_name(name);
    Predictor p(oracle(acc, 5), 6);
    std::mt19937_64 rng(6);
    std::vector<int> hits(acc.size(), 0);
    std::vector<NodeIndex> truth(acc.size());
    for (int i = 0; i < kTrials; ++i) {
      for (NodeIndex &r : truth) r = rng() % 6;
      const auto g = p.predict(history, truth, truth.size());
      for (std::size_t k = 0; k < acc.size(); ++k) hits[k] += g[k] == truth[k];
    }
    for (std::size_t k = 0; k < acc.size(); ++k) {
      EXPECT_NEAR(static_cast<double>(hits[k]) / kTrials, acc[k], 0.02) << name << " step " << k + 1;
    }
  }
}

TEST(Predictor, DeeperStepsReuseLastAccuracy) {
  Predictor p(oracle({1.0, 0.0}), 2);
  const std::vector<NodeIndex> history{0};
  const std::vector<NodeIndex> truth{0, 0, 0, 0};
  EXPECT_EQ(p.predict(history, truth, 4), (std::vector<NodeIndex>{0, 1, 1, 1}));
}

TEST(Predictor, RejectsBadArguments) {
  Predictor p(oracle({1.0}), 3);
  const std::vector<NodeIndex> history{0};
  const std::vector<NodeIndex> truth{1, 2};
  EXPECT_THROW(p.predict(history, truth, 0), std::invalid_argument);
  EXPECT_THROW(p.predict({}, truth, 1), std::invalid_argument);
  EXPECT_THROW(p.predict(history, truth, 3), std::invalid_argument);
  EXPECT_THROW(Predictor(oracle({1.5}), 3), std::invalid_argument);
  EXPECT_THROW(Predictor(oracle({}), 3), std::invalid_argument);
}

TEST(Predictor, NamesRoundTrip) {
  for (PredictorKind k : {PredictorKind::oracle_noisy, PredictorKind::moving_mode, PredictorKind::markov1}) {
    EXPECT_EQ(parse_predictor(to_string(k)), k);
  }
  EXPECT_THROW(parse_predictor("lstm"), std::invalid_argument);
  EXPECT_EQ(accuracy_presets::by_name("perfect"), accuracy_presets::perfect);
  EXPECT_THROW(accuracy_presets::by_name("gru"), std::invalid_argument);
}

TEST(MobilityTrace, ValidateRejectsOutOfRangeRegions) {
  MobilityTrace t{{0, 1, 2}};
  EXPECT_NO_THROW(t.validate(3));
  EXPECT_THROW(t.validate(2), std::invalid_argument);
}
