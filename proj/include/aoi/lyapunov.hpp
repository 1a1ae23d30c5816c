#pragma once

#include <span>

#include "aoi/channel.hpp"
#include "aoi/model.hpp"

namespace aoi {

/// Virtual queue update for the timely-throughput constraint:
/// Z(t+1) = max(Z(t) - d2(t), 0) + rho.
double update_virtual_queue(double z, bool delivered, double rho);

/// Constant B of the frame drift bound.
struct DriftConstant {
  double nominal;      ///< (T q^2 + T (T - 1)) / 2, with q per frame
  double consistent;  ///< T (rho^2 + 1) / 2 + T (T - 1) / 2, with per-slot arrival rho = q / T
};

DriftConstant drift_bound_B(int frame_length, double required_per_frame);

/// Slack of the always-serve-user-2 policy: (T * pbar2 - q) / T.
struct Slackness {
  double epsilon = 0.0;
  bool feasible() const { return epsilon > 0.0; }
};

Slackness slackness_epsilon(const ChannelModel& model, int frame_length, double required_per_frame);

/// Slack of always-serve-user-2 when at most K packets exist per frame:
/// (E[deliveries] - q) / T, with the expectation computed exactly and taken
/// at the worst first-slot channel memory of user 2.
Slackness capped_slackness_epsilon(const ChannelModel& model, const FrameConfig& cfg);

struct TheoremBounds {
  double z_bound = 0.0;           ///< bound on the mean of Z over frame starts
  double aoi_bound_offset = 0.0;  ///< AoI bound minus the (1 - gamma_mix) * A_opt term
  double gamma_mix = 0.0;         ///< delta / (eps T)

  double aoi_bound(double a_opt) const { return aoi_bound_offset + (1.0 - gamma_mix) * a_opt; }
};

/// Throws BoundHypothesisViolated unless eps * T > delta. With V = 0 the AoI
/// bound is vacuous and aoi_bound_offset is +infinity.
TheoremBounds theorem2_bounds(double B, double C, double delta, double epsilon, int frame_length,
                              double weight, int aoi_cap);

/// Everything above for one scenario, as reported in run summaries.
struct BoundsReport {
  double b_nominal = 0.0;
  double b_consistent = 0.0;
  double epsilon = 0.0;
  double z_bound = 0.0;
  double aoi_bound_offset = 0.0;
  double gamma_mix = 0.0;
  bool hypothesis_holds = false;  ///< false: z_bound / aoi_bound_offset are NaN
  double epsilon_capped = 0.0;    ///< capped_slackness_epsilon()
  double z_bound_capped = 0.0;    ///< z_bound recomputed with epsilon_capped (NaN if not positive)
};

/// Uses B_consistent. C = delta = 0 corresponds to the exact per-frame solve.
BoundsReport make_bounds_report(const FrameConfig& cfg, const ChannelModel& model, double C = 0.0,
                                double delta = 0.0);

/// Z(t_end) / t_end for a trajectory indexed by slot (z[t] = Z(t)).
double rate_stability_stat(std::span<const double> z_trajectory);

/// Per-frame Lyapunov increment and the realized G term.
struct FrameDrift {
  double lyapunov_increment;  ///< Z(t_m + T)^2 / 2 - Z(t_m)^2 / 2
  double g_hat;               ///< Z(t_m) * sum over the frame of (rho - d2)
};

FrameDrift frame_drift(double z_start, double z_end, double rho, int frame_length, int deliveries);

}  // namespace aoi
