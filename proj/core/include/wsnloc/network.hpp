#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "wsnloc/core.hpp"
#include "wsnloc/deployment.hpp"

namespace wsnloc {

/// R = phi * r.
double scaled_range(double base_range_m);

/// Undirected unit-disk graph. Node ids follow Deployment::position.
class Graph {
public:
  explicit Graph(std::size_t node_count) : adjacency_(node_count) {}

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const;
  const std::vector<std::size_t>& neighbors(std::size_t u) const { return adjacency_.at(u); }
  bool has_edge(std::size_t u, std::size_t v) const;
  /// Ignores self-loops and duplicates. Keeps neighbor lists sorted.
  void add_edge(std::size_t u, std::size_t v);

private:
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Edge (u, v) iff distance(u, v) <= comm_range.
Graph build_graph(const Deployment& deployment, double comm_range_m);
Graph build_graph(std::span<const Point2D> positions, double comm_range_m);

/// Minimum hop counts, one column per anchor.
class HopTable {
public:
  static constexpr std::int32_t kUnreachable = -1;

  HopTable(std::size_t node_count, std::vector<std::size_t> anchor_ids);

  std::size_t node_count() const { return node_count_; }
  std::size_t anchor_count() const { return anchor_ids_.size(); }
  const std::vector<std::size_t>& anchor_ids() const { return anchor_ids_; }

  /// std::nullopt when the anchor cannot be reached from the node.
  std::optional<std::int32_t> hops(std::size_t node, std::size_t anchor_index) const;
  std::int32_t raw(std::size_t node, std::size_t anchor_index) const {
    return hops_[node * anchor_ids_.size() + anchor_index];
  }
  void set(std::size_t node, std::size_t anchor_index, std::int32_t value) {
    hops_[node * anchor_ids_.size() + anchor_index] = value;
  }

private:
  std::size_t node_count_;
  std::vector<std::size_t> anchor_ids_;
  std::vector<std::int32_t> hops_;
};

/// One breadth-first search per anchor.
HopTable compute_hops(const Graph& graph, std::span<const std::size_t> anchor_ids);

/// Which communication range the baselines (DV-Hop, Centroid) use.
enum class BaselineRange : std::uint8_t { PhiScaled, BaseR };

/// Deployment plus the global communication range of each algorithm.
struct Topology {
  Deployment deployment;
  std::map<Algorithm, double> comm_range;
};

/// Ranges for every algorithm: GRL always phi * r; baselines per `mode`.
std::map<Algorithm, double> algorithm_ranges(double base_range_m, BaselineRange mode);

}  // namespace wsnloc
