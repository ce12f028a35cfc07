#pragma once

// Experiment configuration and the Monte Carlo trial runner.

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "wsnloc/core.hpp"
#include "wsnloc/deployment.hpp"
#include "wsnloc/energy.hpp"
#include "wsnloc/localization.hpp"
#include "wsnloc/network.hpp"

namespace wsnloc {

/// Malformed configuration text.
struct ConfigParseError : Error {
  using Error::Error;
};

/// Well-formed configuration with an invalid or unknown field.
struct ConfigValidationError : Error {
  ConfigValidationError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

struct ExperimentConfig {
  FieldSpec field{100.0, 100.0};
  /// 100 deployed nodes = 90 unknowns + 10 anchors.
  std::size_t n_unknowns = 90;
  std::size_t n_anchors = 10;
  double base_range_r = 10.0;
  /// Indexed by Algorithm.
  std::array<AnchorLayout, 3> anchor_layout{SunflowerLayout{}, RandomLayout{}, RandomLayout{}};
  BaselineRange baseline_range = BaselineRange::PhiScaled;
  HopSizeMode dvhop_hop_size = HopSizeMode::Global;
  EnergyParams energy;
  std::size_t trials = 50;
  std::uint64_t master_seed = 42;
  /// Algorithms evaluated (and emitted) in this order.
  std::vector<Algorithm> algorithms{kAllAlgorithms.begin(), kAllAlgorithms.end()};

  const AnchorLayout& layout(Algorithm a) const {
    return anchor_layout[static_cast<std::size_t>(a)];
  }
  double comm_range(Algorithm a) const;
  /// Throws ConfigValidationError naming the first offending field.
  void validate() const;
};

/// Parses the JSON schema; missing keys take their defaults, unknown keys
/// are rejected.
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::filesystem::path& path);
/// Canonical JSON form with every field spelled out.
std::string config_to_json(const ExperimentConfig& config);

/// One algorithm's view of one trial.
struct TrialDetail {
  std::size_t trial_index = 0;
  Algorithm algorithm = Algorithm::Grl;
  FieldSpec field;
  double comm_range_m = 0.0;
  std::vector<Point2D> anchors;
  std::vector<Point2D> unknowns;
  /// One entry per unknown, in unknown order.
  std::vector<NodeMetrics> nodes;
};

struct TrialResult {
  std::vector<TrialSummary> summaries;
  std::vector<TrialDetail> details;
};

struct ResultsBundle {
  ExperimentConfig config;
  /// Ordered by (trial, position in config.algorithms).
  std::vector<TrialSummary> summaries;
  /// Same order as `summaries`; empty when details were not kept.
  std::vector<TrialDetail> details;
};

struct RunOptions {
  /// Worker threads; 0 means hardware concurrency.
  unsigned threads = 1;
  bool keep_details = true;
};

/// Every configured algorithm on one trial's deployment.
TrialResult run_trial(const ExperimentConfig& config, std::size_t trial_index);

ResultsBundle run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

/// Mean over trials of each per-trial metric, skipping empty trials.
struct AlgorithmAggregate {
  Algorithm algorithm;
  double mean_error_m = 0.0;
  double mean_hops = 0.0;
  double mean_energy_uj = 0.0;
  double mean_coverage = 0.0;
  std::size_t trials_with_estimates = 0;
};

std::vector<AlgorithmAggregate> aggregate(const ResultsBundle& bundle);

}  // namespace wsnloc
