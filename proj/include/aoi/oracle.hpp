#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "aoi/channel.hpp"
#include "aoi/model.hpp"
#include "aoi/solver.hpp"

namespace aoi::oracle {

// Ground truth for the solver. Everything here works from the model
// primitives (success probabilities, step_aoi, the queue rule) by enumerating
// per-slot channel realizations; it never calls build_kernel, stage_cost or
// the solver, and keeps its own tie-break order.

/// Decision rule for one frame: (slot in frame, state) -> action.
using DecisionRule = std::function<Action(int, const SystemState&)>;

DecisionRule rule_from_table(const PolicyTable& table);

struct EvaluationResult {
  double expected_cost = 0.0;
  /// Slot t (0..T) -> distribution of the state at the start of slot t.
  std::vector<std::map<SystemState, double>> state_distribution_by_slot;
};

/// Exact forward propagation of the state distribution under `rule`,
/// accumulating discounted expected slot costs.
EvaluationResult evaluate_policy_exact(const DecisionRule& rule, const SystemState& initial,
                                       double frozen_z, const FrameConfig& cfg,
                                       const ChannelModel& model);

struct OptimalSolution {
  double value = 0.0;
  DecisionRule rule;  ///< throws UnknownState for (slot, state) pairs never reached
};

/// Exhaustive backward induction over every reachable (slot, state).
/// Throws TooLarge when |S| * T > 1e5.
OptimalSolution brute_force_optimal(const SystemState& initial, double frozen_z,
                                    const FrameConfig& cfg, const ChannelModel& model);

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Sample mean of realized frame costs over independent seeded frames. Run i
/// uses the stream derive_seed(seed, i); runs execute in parallel and are
/// reduced in index order, so the result does not depend on thread count.
MonteCarloEstimate monte_carlo_value(const DecisionRule& rule, const SystemState& initial,
                                     double frozen_z, const FrameConfig& cfg,
                                     const ChannelModel& model, std::int64_t n_runs,
                                     std::uint64_t seed);

/// Serial version of monte_carlo_value(), kept as its reference.
MonteCarloEstimate monte_carlo_value_serial(const DecisionRule& rule, const SystemState& initial,
                                            double frozen_z, const FrameConfig& cfg,
                                            const ChannelModel& model, std::int64_t n_runs,
                                            std::uint64_t seed);

/// Exact long-run mean AoI when user 1 is scheduled every slot: stationary
/// solve of the chain on (A, previous channel of user 1).
double always_user1_mean_aoi(const ChannelModel& model, int aoi_cap);

}  // namespace aoi::oracle
