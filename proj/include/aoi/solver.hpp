#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "aoi/channel.hpp"
#include "aoi/model.hpp"

namespace aoi {

/// Dense indexing of {1..A_max} x {0..K} x channel memory.
class StateSpace {
 public:
  StateSpace(int aoi_cap, int packets_per_frame, bool with_memory);

  std::size_t size() const { return size_; }
  bool with_memory() const { return memories_ == 4; }

  std::optional<std::size_t> find(const SystemState& s) const;
  /// Throws UnknownState when `s` is outside the space.
  std::size_t index(const SystemState& s) const;
  SystemState state(std::size_t index) const;

 private:
  int aoi_cap_;
  int queue_levels_;
  int memories_;
  std::size_t size_;
};

struct TransitionEntry {
  SystemState next;
  double probability;
};

/// One-slot transition law inside a frame (no refill; the frame boundary is
/// handled by the simulator). Both users' channel memories evolve every slot
/// and the scheduled user's delivery coincides with its channel landing Good.
/// Zero-probability outcomes are omitted and identical next states merged.
/// Throws InfeasibleAction for user 2 on an empty queue.
std::vector<TransitionEntry> build_kernel(const SystemState& state, Action action,
                                          const ChannelModel& model, const FrameConfig& cfg);

/// Expected cost of the slot: Z(t_m) * (rho - E[d2]) + V * E[A(t+1)].
double stage_cost(const SystemState& state, Action action, double frozen_z, const FrameConfig& cfg,
                  const ChannelModel& model);

/// Output of the backward solve for one frame: value-to-go for slots 0..T and
/// the chosen action for slots 0..T-1. Immutable once returned by a solver.
class PolicyTable {
 public:
  PolicyTable(const FrameConfig& cfg, StateSpace space, double frozen_z);

  int horizon() const { return cfg_.frame_length; }
  double frozen_z() const { return frozen_z_; }
  const FrameConfig& config() const { return cfg_; }
  const StateSpace& states() const { return space_; }

  double value(int slot, const SystemState& s) const;
  /// Same as policy_lookup(); throws UnknownState outside [0, T) x states.
  Action action(int slot, const SystemState& s) const;

  std::span<const double> values_at(int slot) const;
  std::span<const Action> actions_at(int slot) const;
  std::span<double> values_at(int slot);
  std::span<Action> actions_at(int slot);

 private:
  FrameConfig cfg_;
  StateSpace space_;
  double frozen_z_;
  std::vector<double> values_;   // (T + 1) x |S|
  std::vector<Action> actions_;  // T x |S|
};

Action policy_lookup(const PolicyTable& table, int slot_in_frame, const SystemState& state);

/// Writes `slot,aoi,queue,h1,h2,action,value` rows (h1/h2 empty for i.i.d.).
void write_policy_dump(const PolicyTable& table, std::ostream& out);

/// Per-frame MDP with the transition kernel and cost coefficients compiled
/// once. Stage costs are affine in (Z, V), so the compiled form serves every
/// frame of a run.
class FrameProblem {
 public:
  FrameProblem(const FrameConfig& cfg, const ChannelModel& model);

  const FrameConfig& config() const { return cfg_; }
  const ChannelModel& channel() const { return model_; }
  const StateSpace& states() const { return space_; }

  /// Backward DP; states within a slot are solved in parallel (OpenMP).
  PolicyTable solve(double frozen_z) const;

  /// Serial reference that rebuilds every kernel and cost through
  /// build_kernel() / stage_cost(). Produces the same table as solve().
  PolicyTable solve_reference(double frozen_z) const;

 private:
  FrameConfig cfg_;
  ChannelModel model_;
  StateSpace space_;
  // Row k = state * 3 + preference rank (0: user 2, 1: user 1, 2: idle).
  // An empty row marks an infeasible action.
  std::vector<std::uint32_t> row_begin_;
  std::vector<std::uint32_t> next_;
  std::vector<double> prob_;
  std::vector<double> z_coef_;
  std::vector<double> v_coef_;
};

/// Convenience wrapper: FrameProblem(cfg, model).solve(frozen_z).
PolicyTable backward_solve(const FrameConfig& cfg, double frozen_z, const ChannelModel& model);

}  // namespace aoi
