#pragma once

#include <optional>
#include <variant>

#include "aoi/model.hpp"
#include "aoi/rng.hpp"

namespace aoi {

struct IidChannel {
  double p1 = 0.5;  ///< per-slot success probability, user 1
  double p2 = 0.5;
  bool operator==(const IidChannel&) const = default;
};

/// Two independent Good/Bad Markov chains. p11_i = P(Good -> Good),
/// p01_i = P(Bad -> Good) for user i.
struct GilbertElliotChannel {
  double p11_1 = 0.9;
  double p01_1 = 0.6;
  double p11_2 = 0.9;
  double p01_2 = 0.6;
  bool operator==(const GilbertElliotChannel&) const = default;
};

class ChannelModel {
 public:
  using Params = std::variant<IidChannel, GilbertElliotChannel>;

  /// Both factories throw std::invalid_argument on probabilities outside [0, 1].
  static ChannelModel iid(double p1, double p2);
  static ChannelModel gilbert_elliot(double p11_1, double p01_1, double p11_2, double p01_2);

  bool has_memory() const { return std::holds_alternative<GilbertElliotChannel>(params_); }
  const Params& params() const { return params_; }

  /// P(user's channel is Good next slot | its current state).
  double good_after(int user, Link current) const;

  bool operator==(const ChannelModel&) const = default;

 private:
  explicit ChannelModel(Params p) : params_(p) {}
  Params params_;
};

/// Success probability of scheduling `user` this slot given the previous
/// slot's channel memory. Memory must be present iff the model has memory.
double success_prob(const ChannelModel& model, int user, const std::optional<ChannelState>& memory);

/// One Gilbert-Elliot step for both users (user 1 drawn first).
ChannelState step_channel(const ChannelModel& model, ChannelState state, Rng& rng);

/// Stationary probability of Good for a two-state chain.
/// Throws NoUniqueStationary when p11 = 1 and p01 = 0.
double stationary_good_prob(double p11, double p01);

/// Long-run per-slot success probability of `user` when always scheduled.
double long_run_success_prob(const ChannelModel& model, int user);

/// Realizes this slot's channel for both users. For i.i.d. channels Good is
/// drawn with probability p_i; for Gilbert-Elliot it is a step from memory.
/// Always consumes exactly two draws.
ChannelState draw_slot_channel(const ChannelModel& model, const std::optional<ChannelState>& memory,
                               Rng& rng);

/// Draws each user's state from its stationary distribution.
ChannelState draw_stationary(const ChannelModel& model, Rng& rng);

}  // namespace aoi
