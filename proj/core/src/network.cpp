#include "wsnloc/network.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace wsnloc {

double scaled_range(double base_range_m) {
  if (!(std::isfinite(base_range_m) && base_range_m > 0.0)) {
    throw std::invalid_argument("scaled_range: r must be finite and > 0");
  }
  return kPhi * base_range_m;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& n : adjacency_) twice += n.size();
  return twice / 2;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  const auto& n = adjacency_.at(u);
  return std::binary_search(n.begin(), n.end(), v);
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  auto insert_sorted = [](std::vector<std::size_t>& list, std::size_t id) {
    auto it = std::lower_bound(list.begin(), list.end(), id);
    if (it == list.end() || *it != id) list.insert(it, id);
  };
  insert_sorted(adjacency_.at(u), v);
  insert_sorted(adjacency_.at(v), u);
}

Graph build_graph(std::span<const Point2D> positions, double comm_range_m) {
  if (!(comm_range_m > 0.0)) throw std::invalid_argument("build_graph: range must be > 0");
  Graph g(positions.size());
  for (std::size_t u = 0; u < positions.size(); ++u) {
    for (std::size_t v = u + 1; v < positions.size(); ++v) {
      if (distance(positions[u], positions[v]) <= comm_range_m) g.add_edge(u, v);
    }
  }
  return g;
}

Graph build_graph(const Deployment& deployment, double comm_range_m) {
  std::vector<Point2D> all;
  all.reserve(deployment.node_count());
  all.insert(all.end(), deployment.anchors.begin(), deployment.anchors.end());
  all.insert(all.end(), deployment.unknowns.begin(), deployment.unknowns.end());
  return build_graph(all, comm_range_m);
}

HopTable::HopTable(std::size_t node_count, std::vector<std::size_t> anchor_ids)
    : node_count_(node_count),
      anchor_ids_(std::move(anchor_ids)),
      hops_(node_count * anchor_ids_.size(), kUnreachable) {}

std::optional<std::int32_t> HopTable::hops(std::size_t node, std::size_t anchor_index) const {
  if (node >= node_count_ || anchor_index >= anchor_ids_.size()) {
    throw std::out_of_range("HopTable::hops index out of range");
  }
  const std::int32_t h = raw(node, anchor_index);
  if (h == kUnreachable) return std::nullopt;
  return h;
}

HopTable compute_hops(const Graph& graph, std::span<const std::size_t> anchor_ids) {
  if (anchor_ids.empty()) throw std::invalid_argument("compute_hops: no anchors");
  for (std::size_t a : anchor_ids) {
    if (a >= graph.node_count()) throw std::out_of_range("compute_hops: anchor id out of range");
  }
  HopTable table(graph.node_count(), {anchor_ids.begin(), anchor_ids.end()});
  std::deque<std::size_t> frontier;
  for (std::size_t k = 0; k < anchor_ids.size(); ++k) {
    table.set(anchor_ids[k], k, 0);
    frontier.assign(1, anchor_ids[k]);
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop_front();
      const std::int32_t next = table.raw(u, k) + 1;
      for (std::size_t v : graph.neighbors(u)) {
        if (table.raw(v, k) == HopTable::kUnreachable) {
          table.set(v, k, next);
          frontier.push_back(v);
        }
      }
    }
  }
  return table;
}

std::map<Algorithm, double> algorithm_ranges(double base_range_m, BaselineRange mode) {
  const double phi_range = scaled_range(base_range_m);
  const double baseline = mode == BaselineRange::PhiScaled ? phi_range : base_range_m;
  return {{Algorithm::Grl, phi_range},
          {Algorithm::DvHop, baseline},
          {Algorithm::Centroid, baseline}};
}

}  // namespace wsnloc
