#pragma once

// Per-localization energy model and per-trial aggregation.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "wsnloc/core.hpp"

namespace wsnloc {

struct EnergyParams {
  double e_tx_uj = 50.0;
  double e_rx_uj = 50.0;
  /// Indexed by Algorithm. GRL sends 25% less per hop; Centroid pays 20%
  /// more on reception.
  std::array<double, 3> tx_multiplier{0.75, 1.0, 1.0};
  std::array<double, 3> rx_multiplier{1.0, 1.0, 1.20};

  double tx(Algorithm a) const { return tx_multiplier[static_cast<std::size_t>(a)]; }
  double rx(Algorithm a) const { return rx_multiplier[static_cast<std::size_t>(a)]; }
  /// Throws std::invalid_argument unless every value is finite and > 0.
  void validate() const;

  friend bool operator==(const EnergyParams&, const EnergyParams&) = default;
};

/// tx_mult * e_tx * h + rx_mult * e_rx * n, in microjoules.
double localization_energy(const EnergyParams& params, Algorithm algorithm, double mean_hops,
                           std::size_t anchors_used);

struct NodeMetrics {
  std::size_t node_id = 0;
  Point2D true_position;
  std::optional<Point2D> estimate;
  /// Present iff `estimate` is.
  std::optional<double> error_m;
  double hops = 0.0;
  std::size_t anchors_used = 0;
  double energy_uj = 0.0;

  bool localized() const { return error_m.has_value(); }
};

struct TrialSummary {
  Algorithm algorithm = Algorithm::Grl;
  std::uint64_t seed = 0;
  std::size_t trial_index = 0;
  double coverage = 0.0;
  /// Absent when no node was localized.
  std::optional<double> mean_error_m;
  std::optional<double> error_std_m;
  std::optional<double> mean_hops;
  std::optional<double> mean_energy_uj;

  /// True when no node was localized.
  bool empty() const { return !mean_error_m.has_value(); }
};

/// Means and population standard deviation over localized nodes only.
/// Throws std::invalid_argument on an empty metrics list.
TrialSummary summarize_trial(std::span<const NodeMetrics> metrics, Algorithm algorithm,
                             std::uint64_t seed, std::size_t trial_index);

struct EnergySweepRow {
  Algorithm algorithm;
  double hops;
  double energy_uj;
};

/// Rows ordered by algorithm (input order), then by h.
std::vector<EnergySweepRow> energy_hop_sweep(const EnergyParams& params,
                                             std::span<const Algorithm> algorithms,
                                             std::span<const double> h_values,
                                             std::size_t anchors_used);

}  // namespace wsnloc
