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
#include <vector>

namespace edgeplacer {

/// Virtual migration-cost queue plus the weight history used by the
/// weight-update variant. q >= 0 always; w is unclamped.
struct CostQueueState {
  double q = 0.0;
  double w = 0.0;
  double w_prev = 0.0;
  double beta = 0.0;
};

/// Q(t+1) = max(Q(t) + E(t) - E_avg, 0). Throws on negative inputs.
double update_queue(double q, double e, double e_avg);

/// Quadratic Lyapunov function Q^2 / 2.
double lyapunov(double q);

/// Drift bound constant (E_avg^2 + E_max^2) / 2.
double bound_constant_b(double e_avg, double e_max);

/// W(t+1) = W(t) + delta_q + beta * max(W(t) - W(t-1), 0); shifts history.
/// `q` is left untouched.
CostQueueState update_weight(CostQueueState state, double delta_q);

/// One slot of bookkeeping: queue update followed by the weight update
/// driven by the resulting queue change.
CostQueueState advance(CostQueueState state, double e, double e_avg);

/// Frame-start approximation: every slot of the frame sees Q(kT).
std::vector<double> frame_queue_approximation(double q_at_frame_start, std::size_t frame_len);

/// Largest one-slot queue change, max(E_avg, E_max).
inline double queue_step_bound(double e_avg, double e_max) { return e_avg > e_max ? e_avg : e_max; }

}  // namespace edgeplacer
