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
 * @file policies.hpp
 *
 * Placement decision procedures. Every function here is pure: it sees the
 * queue value, observations and previous placement it is handed and
 * nothing else. Ties are always resolved towards the lowest node index
 * (lexicographically smallest sequence for multi-slot plans).
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edgeplacer/model.hpp"

namespace edgeplacer {

enum class PolicyKind { osp, psp, psp_wu, am, nm, lm, plm };

std::string_view to_string(PolicyKind kind);
/// Accepts "osp", "psp", "psp-wu" (or "pspwu"), "am", "nm", "lm", "plm";
/// case-insensitive. Throws std::invalid_argument otherwise.
PolicyKind parse_policy(std::string_view name);
bool is_frame_policy(PolicyKind kind);

struct PolicyConfig {
  double v = 1.0;
  double theta = 0.0;
  double beta = 0.0;
  double lm_gamma = 1.0;
  double plm_weight = 1.0;

  void validate() const;
};

/// Inputs for one frame decision. `slots[0]` is the frame-start slot with
/// the true user node; later entries may carry predicted user nodes.
struct FrameInput {
  std::size_t frame_index = 0;
  std::vector<SlotObservation> slots;
  /// Q(kT) for the plain predictive policy, W(kT) for the weight-update one.
  double q_anchor = 0.0;
  Placement prev;
};

struct FramePlan {
  std::vector<Placement> placements;
  /// Frame objective including the placement-independent constant terms.
  double objective = 0.0;
  /// Per-slot contribution to `objective` along the chosen placements.
  std::vector<double> slot_terms;
};

/// argmin_i V*H_i(t) + Q(t)*P_{prev,i}(t).
Placement osp_decide(const PolicyConfig &cfg, double q, const SlotObservation &obs, Placement prev,
                     const Scenario &scn);

/// The same rule on precomputed per-node latency and move-cost vectors.
NodeIndex osp_argmin(std::span<const double> latency, std::span<const double> move_cost, double v,
                     double q);

/// Edge weight of the frame graph: anchor*(P_ji - E_avg + theta*(len - pos)) + V*H_i.
double frame_edge_weight(const PolicyConfig &cfg, double anchor, double e_avg,
                         std::size_t frame_len, std::size_t pos, double move_cost,
                         double latency);

/// Frame plan minimising the drift-plus-penalty objective with the queue
/// frozen at Q(kT), via the layered shortest path.
FramePlan psp_frame_decide(const PolicyConfig &cfg, const FrameInput &frame, const Scenario &scn,
                           double e_avg);

/// Same program with W(kT) (possibly negative) in place of Q(kT).
FramePlan pspwu_frame_decide(const PolicyConfig &cfg, const FrameInput &frame,
                             const Scenario &scn, double e_avg);

/// Always follow the user.
Placement am_decide(const SlotObservation &obs);

/// Never move away from the initial placement.
Placement nm_decide(Placement initial);

struct LazyMigrationState {
  double accumulated = 0.0;
};

/// Lazy migration: accumulate the per-slot latency penalty of not following
/// the user; migrate once it reaches lm_gamma times the migration cost.
std::pair<Placement, LazyMigrationState> lm_decide(LazyMigrationState state,
                                                    const SlotObservation &obs, Placement prev,
                                                    const Scenario &scn, const PolicyConfig &cfg);

/// Predictive lazy migration: migrate to the user's node when the two-slot
/// latency saving (this slot plus the predicted next one) times plm_weight
/// exceeds the migration cost. `predicted_next` may be empty at the end of
/// the horizon, in which case only this slot's saving counts.
Placement plm_decide(const SlotObservation &obs, const std::optional<SlotObservation> &predicted_next,
                     Placement prev, const Scenario &scn, const PolicyConfig &cfg);

inline constexpr std::uint64_t kEnumerationGuard = 1'000'000;

/// Exhaustive minimiser of the frame objective, enumerating sequences in
/// lexicographic order. Throws std::invalid_argument above the guard.
FramePlan brute_force_frame(const FrameInput &frame, const Scenario &scn, double e_avg,
                            const PolicyConfig &cfg);

struct HorizonOptimum {
  std::vector<Placement> placements;
  double avg_latency = 0.0;
  double avg_cost = 0.0;
};

/// Best budget-feasible placement sequence over the whole horizon. With
/// `initial` set, slot 0 pays migration from it; without, the first
/// placement is free. Returns nullopt when no sequence meets the budget.
std::optional<HorizonOptimum> brute_force_horizon(const Scenario &scn,
                                                  std::span<const SlotObservation> slots,
                                                  std::optional<Placement> initial, double e_avg);

}  // namespace edgeplacer
