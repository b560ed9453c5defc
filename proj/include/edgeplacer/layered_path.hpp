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
 * @file layered_path.hpp
 *
 * Shortest path through a layered graph: a source vertex (the placement
 * before the frame), one layer of `node_count` vertices per slot, and a
 * zero-cost sink behind the last layer. Solved by forward dynamic
 * programming in O(node_count^2 * layers) edge evaluations.
 *
 * Costs accumulate left to right (slot 0 first), the same order a naive
 * enumeration would use, so equal paths compare bit-identically. Exact
 * ties are resolved in favour of the lexicographically smaller partial
 * path; the result is therefore the lexicographically smallest minimiser.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "edgeplacer/model.hpp"

namespace edgeplacer {

struct LayeredPath {
  std::vector<NodeIndex> nodes;
  /// Edge weight taken at each layer along `nodes`.
  std::vector<double> step_cost;
  double total = 0.0;
};

/// `edge_weight(layer, from, to)` gives the weight of entering vertex `to` of
/// `layer` from vertex `from` of the previous layer (or from `source` when
/// layer == 0).
template <typename EdgeWeight>
LayeredPath shortest_layered_path(std::size_t node_count, std::size_t layers, NodeIndex source,
                                  EdgeWeight &&edge_weight) {
  LayeredPath best;
  if (layers == 0 || node_count == 0) return best;

  // pi[i] / phi[i]: best partial path ending at i and its cost.
  std::vector<std::vector<NodeIndex>> pi(node_count), zeta(node_count);
  std::vector<std::vector<double>> steps(node_count), zeta_steps(node_count);
  std::vector<double> phi(node_count), varphi(node_count);

  for (NodeIndex i = 0; i < node_count; ++i) {
    const double w = edge_weight(std::size_t{0}, source, i);
    phi[i] = w;
    pi[i] = {i};
    steps[i] = {w};
  }

  for (std::size_t layer = 1; layer < layers; ++layer) {
    std::swap(pi, zeta);
    std::swap(phi, varphi);
    std::swap(steps, zeta_steps);
    for (NodeIndex i = 0; i < node_count; ++i) {
      NodeIndex j_opt = 0;
      double w_opt = edge_weight(layer, NodeIndex{0}, i);
      double best_cost = varphi[0] + w_opt;
      for (NodeIndex j = 1; j < node_count; ++j) {
        const double w = edge_weight(layer, j, i);
        const double cost = varphi[j] + w;
        if (cost < best_cost || (cost == best_cost && zeta[j] < zeta[j_opt])) {
          best_cost = cost;
          j_opt = j;
          w_opt = w;
        }
      }
      pi[i] = zeta[j_opt];
      pi[i].push_back(i);
      steps[i] = zeta_steps[j_opt];
      steps[i].push_back(w_opt);
      phi[i] = best_cost;
    }
  }

  NodeIndex i_opt = 0;
  for (NodeIndex i = 1; i < node_count; ++i) {
    if (phi[i] < phi[i_opt] || (phi[i] == phi[i_opt] && pi[i] < pi[i_opt])) i_opt = i;
  }
  best.nodes = std::move(pi[i_opt]);
  best.step_cost = std::move(steps[i_opt]);
  best.total = phi[i_opt];
  return best;
}

}  // namespace edgeplacer
