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

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "edgeplacer/model.hpp"

namespace edgeplacer {

/// Region index (= associated MEC node) per slot.
struct MobilityTrace {
  std::vector<NodeIndex> regions;

  /// Throws std::invalid_argument if any region is >= n_regions.
  void validate(std::size_t n_regions) const;
};

enum class PredictorKind { oracle_noisy, moving_mode, markov1 };

std::string_view to_string(PredictorKind kind);
PredictorKind parse_predictor(std::string_view name);

struct PredictorSpec {
  PredictorKind kind = PredictorKind::oracle_noisy;
  /// Per-step accuracy for oracle_noisy; entry s-1 applies at look-ahead s.
  /// Steps deeper than the vector reuse its last entry.
  std::vector<double> accuracies{1.0};
  /// History length for moving_mode.
  std::size_t window = 5;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Per-step accuracy presets at look-ahead 1, 2, 3.
namespace accuracy_presets {
inline const std::vector<double> lstm{0.904, 0.839, 0.548};
inline const std::vector<double> arima{0.885, 0.808, 0.509};
inline const std::vector<double> sma{0.355, 0.102, 0.002};
inline const std::vector<double> perfect{1.0};

/// "lstm", "arima", "sma" or "perfect"; throws otherwise.
const std::vector<double> &by_name(std::string_view name);
}  // namespace accuracy_presets

/// A seeded mobility predictor. Each simulation run owns its own instance;
/// the generator state advances with every oracle_noisy call.
class Predictor {
 public:
  Predictor(PredictorSpec spec, std::size_t n_regions);

  /// Next `w` regions after `history`. `true_future` is only read by
  /// oracle_noisy and must then hold at least `w` entries.
  std::vector<NodeIndex> predict(std::span<const NodeIndex> history,
                                 std::span<const NodeIndex> true_future, std::size_t w);

  const PredictorSpec &spec() const { return spec_; }
  std::size_t region_count() const { return n_regions_; }

 private:
  std::vector<NodeIndex> oracle_noisy(std::span<const NodeIndex> true_future, std::size_t w);
  std::vector<NodeIndex> moving_mode(std::span<const NodeIndex> history, std::size_t w) const;
  std::vector<NodeIndex> markov1(std::span<const NodeIndex> history, std::size_t w) const;

  PredictorSpec spec_;
  std::size_t n_regions_;
  std::mt19937_64 rng_;
};

}  // namespace edgeplacer
