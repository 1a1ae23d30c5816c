#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace aoi {

/// Scalars describing one scheduling scenario.
struct FrameConfig {
  int frame_length = 20;         ///< T, slots per frame
  int packets_per_frame = 15;    ///< K, deadline packets arriving at each frame start
  double required_per_frame = 12.0;  ///< q, expected deliveries required per frame
  int aoi_cap = 20;              ///< A_max
  double penalty_weight = 5.0;   ///< V
  double discount = 1.0;         ///< Bellman discount, in (0, 1]

  /// Per-slot delivery target q / T.
  double rho() const { return required_per_frame / frame_length; }

  /// Throws std::invalid_argument naming the first violated field.
  void validate() const;

  bool operator==(const FrameConfig&) const = default;
};

enum class Action : std::uint8_t { ScheduleUser1, ScheduleUser2, Idle };

std::string_view to_string(Action action);

enum class Link : std::uint8_t { Bad = 0, Good = 1 };

/// Per-user channel state (Gilbert-Elliot). Also used for the realized
/// per-slot channel in the i.i.d. model, where Good means "would succeed".
struct ChannelState {
  Link user1 = Link::Good;
  Link user2 = Link::Good;

  Link of(int user) const { return user == 1 ? user1 : user2; }
  auto operator<=>(const ChannelState&) const = default;
};

struct SystemState {
  int aoi = 1;
  int queue = 0;
  std::optional<ChannelState> memory;  ///< previous slot's channel; empty for i.i.d.

  auto operator<=>(const SystemState&) const = default;
};

struct Outcome {
  bool user1_delivered = false;
  bool user2_delivered = false;
};

/// Feasible actions, stored in tie-break preference order: user 2, user 1, idle.
class ActionSet {
 public:
  void add(Action a) { items_[size_++] = a; }
  bool contains(Action a) const;
  std::size_t size() const { return size_; }
  const Action* begin() const { return items_.data(); }
  const Action* end() const { return items_.data() + size_; }

 private:
  std::array<Action, 3> items_{};
  std::size_t size_ = 0;
};

/// Offset of slot t inside its frame; 0 marks a frame start.
int frame_offset(std::int64_t t, int frame_length);

int step_aoi(int aoi, bool delivered, int aoi_cap);

/// Queue after one slot. When the next slot opens a new frame the residual
/// packets are dropped and K fresh ones arrive.
int step_queue(int queue, bool delivered, bool next_slot_is_frame_start, int packets_per_frame);

ActionSet feasible_actions(const SystemState& state);

}  // namespace aoi
