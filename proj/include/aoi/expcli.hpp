#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "aoi/channel.hpp"
#include "aoi/lyapunov.hpp"
#include "aoi/model.hpp"
#include "aoi/sim.hpp"

namespace aoi::expcli {

/// Everything one experiment invocation needs. `frame.penalty_weight` is
/// unused here; each run takes its V from `weights`.
struct ExperimentConfig {
  FrameConfig frame;
  std::vector<double> weights{5.0};
  ChannelModel channel = ChannelModel::gilbert_elliot(0.9, 0.6, 0.9, 0.6);
  std::int64_t horizon_slots = 500000;
  std::uint64_t seed = 1;
  int replications = 1;
  PolicyKind policy = PolicyKind::DriftPlusPenalty;
  double z_cache_bucket = 0.0;
  std::int64_t warmup_slots = 0;
  std::string out_dir = "out";

  /// Throws ConfigError naming the offending key.
  void validate() const;
  bool operator==(const ExperimentConfig&) const = default;
};

/// Parses the `key = value` format (`#` starts a comment, channel keys are
/// dotted, V may be a comma-separated list). Unknown or repeated keys are
/// rejected. Throws ConfigError.
ExperimentConfig parse_config(std::string_view text);

/// Reads and parses a config file; a missing file is a ConfigError.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Canonical text form; parse_config(echo_config(c)) == c.
std::string echo_config(const ExperimentConfig& config);

/// Figure presets: fig4a, fig4bc, fig5, fig6, fig7. Throws ConfigError for
/// unknown names.
ExperimentConfig preset(std::string_view name);
const std::vector<std::string>& preset_names();

/// Shortest decimal text that parses back to the same double.
std::string format_number(double x);

struct RunSummary {
  std::string config_echo;  ///< config of this single run (one V, its own seed)
  double weight = 0.0;
  std::uint64_t seed = 0;
  std::string policy;
  double mean_aoi = 0.0;
  double mean_deliveries_per_frame = 0.0;
  double rate_stability = 0.0;
  double mean_frame_start_z = 0.0;
  BoundsReport bounds;
  double wall_clock_seconds = 0.0;
  std::vector<std::string> warnings;
};

RunSummary summarize_run(const ExperimentConfig& run_config, const Metrics& metrics,
                         double wall_clock_seconds);

/// summary.json contents. Wall-clock time is left out so that output files
/// depend only on (config, seed).
std::string summary_json(const RunSummary& summary);

/// One human-readable line, including wall-clock time.
std::string summary_line(const RunSummary& summary);

/// Writes slots.csv (every `thin`-th slot), frames.csv, aoi_hist.csv,
/// sched_fractions.csv and summary.json into `dir`, creating it if needed.
/// slots.csv needs a run with SimulationOptions::record_trace set.
/// Throws std::runtime_error with the path on I/O failure.
void emit_outputs(const Metrics& metrics, const RunSummary& summary,
                  const std::filesystem::path& dir, std::int64_t thin = 1);

/// Command-line entry point. Exit codes: 0 success, 1 usage/config/I-O
/// error, 2 infeasible requirement under --strict-feasibility.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aoi::expcli
