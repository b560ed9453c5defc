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

#include "edgeplacer/predict.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace edgeplacer {

void MobilityTrace::validate(std::size_t n_regions) const {
  for (std::size_t t = 0; t < regions.size(); ++t) {
    if (regions[t] >= n_regions) {
      throw std::invalid_argument("trace slot " + std::to_string(t) + " has region " +
                                  std::to_string(regions[t]) + " outside [0, " +
                                  std::to_string(n_regions) + ")");
    }
  }
}

std::string_view to_string(PredictorKind kind) {
  switch (kind) {
    case PredictorKind::oracle_noisy: return "oracle_noisy";
    case PredictorKind::moving_mode: return "moving_mode";
    case PredictorKind::markov1: return "markov1";
  }
  return "?";
}

PredictorKind parse_predictor(std::string_view name) {
  if (name == "oracle_noisy") return PredictorKind::oracle_noisy;
  if (name == "moving_mode") return PredictorKind::moving_mode;
  if (name == "markov1") return PredictorKind::markov1;
  throw std::invalid_argument("unknown predictor kind '" + std::string(name) + "'");
}

void PredictorSpec::validate() const {
  if (kind == PredictorKind::oracle_noisy) {
    if (accuracies.empty()) throw std::invalid_argument("oracle_noisy needs at least one accuracy");
    for (double a : accuracies) {
      if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("accuracies must lie in [0, 1]");
    }
  }
  if (window < 1) throw std::invalid_argument("predictor window must be >= 1");
}

const std::vector<double> &accuracy_presets::by_name(std::string_view name) {
  if (name == "lstm") return lstm;
  if (name == "arima") return arima;
  if (name == "sma") return sma;
  if (name == "perfect") return perfect;
  throw std::invalid_argument("unknown accuracy preset '" + std::string(name) + "'");
}

Predictor::Predictor(PredictorSpec spec, std::size_t n_regions)
    : spec_(std::move(spec)), n_regions_(n_regions), rng_(spec_.seed) {
  spec_.validate();
  if (n_regions_ == 0) throw std::invalid_argument("predictor needs at least one region");
}

std::vector<NodeIndex> Predictor::predict(std::span<const NodeIndex> history,
                                          std::span<const NodeIndex> true_future, std::size_t w) {
  if (w == 0) throw std::invalid_argument("prediction window must be >= 1");
  if (history.empty()) throw std::invalid_argument("prediction needs a non-empty history");
  switch (spec_.kind) {
    case PredictorKind::oracle_noisy: return oracle_noisy(true_future, w);
    case PredictorKind::moving_mode: return moving_mode(history, w);
    case PredictorKind::markov1: return markov1(history, w);
  }
  return {};
}

std::vector<NodeIndex> Predictor::oracle_noisy(std::span<const NodeIndex> true_future,
                                               std::size_t w) {
  if (true_future.size() < w) throw std::invalid_argument("oracle_noisy needs w true future regions");
  std::vector<NodeIndex> out(w);
  for (std::size_t s = 0; s < w; ++s) {
    const double accuracy = spec_.accuracies[std::min(s, spec_.accuracies.size() - 1)];
    const NodeIndex truth = true_future[s];
    std::bernoulli_distribution hit(accuracy);
    if (hit(rng_) || n_regions_ == 1) {
      out[s] = truth;
      continue;
    }
    // Uniform over the other regions: draw from n-1 slots and skip the truth.
    std::uniform_int_distribution<std::size_t> pick(0, n_regions_ - 2);
    const NodeIndex r = pick(rng_);
    out[s] = r >= truth ? r + 1 : r;
  }
  return out;
}

std::vector<NodeIndex> Predictor::moving_mode(std::span<const NodeIndex> history,
                                              std::size_t w) const {
  const std::size_t take = std::min(spec_.window, history.size());
  std::vector<std::size_t> counts(n_regions_, 0);
  for (NodeIndex r : history.last(take)) {
    if (r >= n_regions_) throw std::invalid_argument("history region outside range");
    ++counts[r];
  }
  const auto mode = static_cast<NodeIndex>(
      std::distance(counts.begin(), std::max_element(counts.begin(), counts.end())));
  return std::vector<NodeIndex>(w, mode);
}

std::vector<NodeIndex> Predictor::markov1(std::span<const NodeIndex> history,
                                          std::size_t w) const {
  const std::size_t n = n_regions_;
  for (NodeIndex r : history) {
    if (r >= n) throw std::invalid_argument("history region outside range");
  }
  // Laplace-smoothed transition log-probabilities.
  std::vector<double> counts(n * n, 1.0);
  for (std::size_t t = 1; t < history.size(); ++t) counts[history[t - 1] * n + history[t]] += 1.0;
  std::vector<double> log_p(n * n);
  for (NodeIndex a = 0; a < n; ++a) {
    double row = 0.0;
    for (NodeIndex b = 0; b < n; ++b) row += counts[a * n + b];
    for (NodeIndex b = 0; b < n; ++b) log_p[a * n + b] = std::log(counts[a * n + b] / row);
  }

  // Most likely path of length w starting from the last observed region.
  const NodeIndex start = history.back();
  std::vector<double> score(n);
  std::vector<std::vector<NodeIndex>> back(w, std::vector<NodeIndex>(n, 0));
  for (NodeIndex b = 0; b < n; ++b) {
    score[b] = log_p[start * n + b];
    back[0][b] = start;
  }
  for (std::size_t s = 1; s < w; ++s) {
    std::vector<double> next(n, -std::numeric_limits<double>::infinity());
    for (NodeIndex b = 0; b < n; ++b) {
      for (NodeIndex a = 0; a < n; ++a) {
        const double cand = score[a] + log_p[a * n + b];
        if (cand > next[b]) {
          next[b] = cand;
          back[s][b] = a;
        }
      }
    }
    score = std::move(next);
  }
  auto last = static_cast<NodeIndex>(
      std::distance(score.begin(), std::max_element(score.begin(), score.end())));
  std::vector<NodeIndex> path(w);
  for (std::size_t s = w; s-- > 0;) {
    path[s] = last;
    last = back[s][last];
  }
  return path;
}

}  // namespace edgeplacer
