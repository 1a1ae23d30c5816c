#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aoi/channel.hpp"
#include "aoi/model.hpp"
#include "aoi/rng.hpp"

namespace aoi {

enum class PolicyKind { DriftPlusPenalty, DeadlineFirst, AoiGreedy, UniformRandom };

std::string_view to_string(PolicyKind kind);
/// Accepts the names produced by to_string(PolicyKind); throws std::invalid_argument otherwise.
PolicyKind parse_policy_kind(std::string_view name);

struct SimulationOptions {
  /// Slots excluded from the histogram, schedule fractions and mean statistics.
  std::int64_t warmup_slots = 0;
  /// Keep a per-slot record (t, A, Q, Z, action, d1, d2).
  bool record_trace = false;
  /// > 0: reuse frame policies for Z(t_m) in the same bucket of this width.
  double z_cache_bucket = 0.0;
  /// First-slot channel memory; drawn from the stationary law when empty.
  std::optional<ChannelState> initial_memory;
};

struct SlotRecord {
  std::int64_t t;
  int aoi;
  int queue;
  double z;
  Action action;
  bool d1;
  bool d2;
};

struct Metrics {
  std::vector<double> avg_aoi_running;     ///< entry t: mean of A(0..t)
  std::vector<int> per_frame_deliveries;   ///< completed frames only
  std::vector<double> z_trajectory;        ///< Z(0..horizon), one entry past the last slot
  std::vector<std::int64_t> aoi_histogram; ///< entry a - 1: slots with A(t) = a (after warm-up)
  /// Per slot-in-frame counts of {user 1, user 2, idle} (after warm-up).
  std::vector<std::array<std::int64_t, 3>> schedule_counts;
  int frame_length = 0;
  std::int64_t slots = 0;
  std::int64_t frames = 0;
  std::int64_t warmup_slots = 0;
  std::vector<SlotRecord> trace;
  std::vector<std::string> warnings;

  /// Row j: fractions of {user 1, user 2, idle} in slot j of the frame.
  std::vector<std::array<double, 3>> schedule_fractions() const;
  /// Mean AoI over post-warm-up slots.
  double mean_aoi() const;
  /// Mean deliveries over completed frames that start at or after the warm-up.
  double mean_deliveries_per_frame() const;
  /// Mean of Z at frame starts t_m = mT, m = 0..frames-1.
  double mean_frame_start_z() const;
};

/// Decision of a non-optimizing policy. Throws std::invalid_argument for
/// DriftPlusPenalty, which needs the frame solver.
Action baseline_decision(PolicyKind policy, const SystemState& state, int slot_in_frame,
                         const FrameConfig& cfg, Rng& rng);

/// Closed-loop run. The drift-plus-penalty controller solves the frame MDP at
/// every frame start with Z(t_m) frozen, while Z itself is updated each slot.
/// Channel draws come from stream derive_seed(seed, 0) and policy randomness
/// from derive_seed(seed, 1), so different policies see the same channel path.
Metrics run_simulation(const FrameConfig& cfg, const ChannelModel& model, PolicyKind policy,
                       std::int64_t horizon_slots, std::uint64_t seed,
                       const SimulationOptions& options = {});

}  // namespace aoi
