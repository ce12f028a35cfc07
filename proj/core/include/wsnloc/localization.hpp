#pragma once

// Position estimators: plain centroid, DV-Hop with least-squares
// multilateration, and the golden-ratio weighted centroid (GRL).
// Everything here is deterministic and free of side effects.

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "wsnloc/core.hpp"
#include "wsnloc/network.hpp"

namespace wsnloc {

struct CollinearAnchors : Error {
  using Error::Error;
};
struct ArityError : Error {
  using Error::Error;
};
struct DisconnectedAnchors : Error {
  using Error::Error;
};
struct DegenerateHops : Error {
  using Error::Error;
};

struct Estimate {
  Point2D position;
  std::size_t anchors_used = 0;
  /// Arithmetic mean of the hop counts to the anchors actually used.
  double mean_hops = 0.0;
};

struct Unlocalizable {
  enum class Reason : std::uint8_t { NoAnchorInRange, TooFewAnchors, CollinearAnchors, NoHopSize };
  Reason reason;
};

using LocalizeResult = std::variant<Estimate, Unlocalizable>;

inline bool localized(const LocalizeResult& r) { return std::holds_alternative<Estimate>(r); }

/// Meters per hop.
struct AvgHopSize {
  double meters_per_hop;
};

/// Coordinate mean of the anchors at hop 1 from `node`.
LocalizeResult centroid_localize(std::size_t node, std::span<const Point2D> anchors,
                                 const HopTable& hops);

/// Square matrix of anchor-to-anchor hop counts; HopTable::kUnreachable marks
/// pairs without a path.
using AnchorHopMatrix = std::vector<std::vector<std::int32_t>>;

AnchorHopMatrix anchor_hop_matrix(const HopTable& hops);

/// Sum of anchor-pair distances over sum of anchor-pair hop counts, taken
/// over all ordered pairs. Throws DisconnectedAnchors if any pair is
/// unreachable, DegenerateHops on a zero hop sum, ArityError for < 2 anchors.
AvgHopSize dvhop_avg_hop_size(std::span<const Point2D> anchors, const AnchorHopMatrix& hops);
AvgHopSize dvhop_avg_hop_size(std::span<const Point2D> anchors, const HopTable& hops);

/// Same ratio restricted to the mutually reachable pairs; nullopt if there
/// are none. Used when a random topology splits into components.
std::optional<AvgHopSize> dvhop_avg_hop_size_reachable(std::span<const Point2D> anchors,
                                                       const AnchorHopMatrix& hops);

/// Hop size computed by each anchor from its own reachable peers.
std::vector<std::optional<AvgHopSize>> dvhop_per_anchor_hop_sizes(
    std::span<const Point2D> anchors, const AnchorHopMatrix& hops);

struct MultilaterationOptions {
  /// Rows are divided by 2 * scale_length_m before the normal equations are
  /// formed; use the field diagonal.
  double scale_length_m = 100.0 * std::numbers::sqrt2;
  /// Threshold on the determinant of the scaled normal matrix.
  double collinear_tolerance = 1e-9;
};

/// Linear least squares after subtracting the last anchor's circle equation.
/// Throws ArityError (< 3 anchors or length mismatch) or CollinearAnchors.
Point2D multilaterate(std::span<const Point2D> anchors, std::span<const double> distances,
                      const MultilaterationOptions& options = {});

enum class HopSizeMode : std::uint8_t { Global, PerAnchorNearest };

/// Hop-size information DV-Hop needs for a whole network.
struct DvHopContext {
  HopSizeMode mode = HopSizeMode::Global;
  std::optional<AvgHopSize> global;
  std::vector<std::optional<AvgHopSize>> per_anchor;

  static DvHopContext build(std::span<const Point2D> anchors, const HopTable& hops,
                            HopSizeMode mode);
};

/// Hop size a node should use under `context`.
std::optional<AvgHopSize> hop_size_for_node(std::size_t node, const HopTable& hops,
                                            const DvHopContext& context);

LocalizeResult dvhop_localize(std::size_t node, std::span<const Point2D> anchors,
                              const HopTable& hops, AvgHopSize hop_size,
                              const MultilaterationOptions& options = {});
LocalizeResult dvhop_localize(std::size_t node, std::span<const Point2D> anchors,
                              const HopTable& hops, const DvHopContext& context,
                              const MultilaterationOptions& options = {});

/// w_i = phi^(-h_i), not normalized.
std::vector<double> grl_weights(std::span<const std::int32_t> hop_counts);

/// phi-weighted mean over every reachable anchor.
LocalizeResult grl_localize(std::size_t node, std::span<const Point2D> anchors,
                            const HopTable& hops);

}  // namespace wsnloc
