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

#include "edgeplacer/queue.hpp"

#include <algorithm>
#include <stdexcept>

namespace edgeplacer {

double update_queue(double q, double e, double e_avg) {
  if (!(q >= 0.0) || !(e >= 0.0) || !(e_avg >= 0.0)) {
    throw std::invalid_argument("update_queue: q, e and e_avg must be nonnegative");
  }
  return std::max(q + e - e_avg, 0.0);
}

double lyapunov(double q) { return 0.5 * q * q; }

double bound_constant_b(double e_avg, double e_max) {
  return 0.5 * (e_avg * e_avg + e_max * e_max);
}

CostQueueState update_weight(CostQueueState state, double delta_q) {
  const double momentum = std::max(state.w - state.w_prev, 0.0);
  const double next = state.w + delta_q + state.beta * momentum;
  state.w_prev = state.w;
  state.w = next;
  return state;
}

CostQueueState advance(CostQueueState state, double e, double e_avg) {
  // Same recursion as update_weight, written as W = Q + (accumulated momentum)
  // so that beta = 0 keeps W bit-identical to Q.
  const double q_next = update_queue(state.q, e, e_avg);
  const double momentum = std::max(state.w - state.w_prev, 0.0);
  const double w_next = q_next + ((state.w - state.q) + state.beta * momentum);
  state.w_prev = state.w;
  state.w = w_next;
  state.q = q_next;
  return state;
}

std::vector<double> frame_queue_approximation(double q_at_frame_start, std::size_t frame_len) {
  return std::vector<double>(frame_len, q_at_frame_start);
}

}  // namespace edgeplacer
