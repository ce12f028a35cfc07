#include "wsnloc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace wsnloc {

namespace {

NodeMetrics to_metrics(std::size_t unknown_index, const Point2D& truth,
                       const LocalizeResult& result, const EnergyParams& energy,
                       Algorithm algorithm) {
  NodeMetrics m;
  m.node_id = unknown_index;
  m.true_position = truth;
  if (const auto* est = std::get_if<Estimate>(&result)) {
    m.estimate = est->position;
    m.error_m = distance(truth, est->position);
    m.hops = est->mean_hops;
    m.anchors_used = est->anchors_used;
    m.energy_uj = localization_energy(energy, algorithm, est->mean_hops, est->anchors_used);
  }
  return m;
}

TrialDetail localize_all(const ExperimentConfig& config, std::size_t trial_index,
                         Algorithm algorithm, const Deployment& deployment) {
  TrialDetail d;
  d.trial_index = trial_index;
  d.algorithm = algorithm;
  d.field = deployment.field;
  d.comm_range_m = config.comm_range(algorithm);
  d.anchors = deployment.anchors;
  d.unknowns = deployment.unknowns;

  const Graph graph = build_graph(deployment, d.comm_range_m);
  std::vector<std::size_t> anchor_ids(deployment.anchors.size());
  for (std::size_t i = 0; i < anchor_ids.size(); ++i) anchor_ids[i] = i;
  const HopTable hops = compute_hops(graph, anchor_ids);

  MultilaterationOptions mopts;
  mopts.scale_length_m = deployment.field.diagonal();
  DvHopContext dv;
  if (algorithm == Algorithm::DvHop) {
    dv = DvHopContext::build(deployment.anchors, hops, config.dvhop_hop_size);
  }

  d.nodes.reserve(deployment.unknowns.size());
  for (std::size_t u = 0; u < deployment.unknowns.size(); ++u) {
    const std::size_t node = deployment.unknown_node_id(u);
    LocalizeResult r = [&]() -> LocalizeResult {
      switch (algorithm) {
        case Algorithm::Grl: return grl_localize(node, deployment.anchors, hops);
        case Algorithm::DvHop: return dvhop_localize(node, deployment.anchors, hops, dv, mopts);
        case Algorithm::Centroid: return centroid_localize(node, deployment.anchors, hops);
      }
      return Unlocalizable{Unlocalizable::Reason::NoAnchorInRange};
    }();
    d.nodes.push_back(to_metrics(u, deployment.unknowns[u], r, config.energy, algorithm));
  }
  return d;
}

}  // namespace

TrialResult run_trial(const ExperimentConfig& config, std::size_t trial_index) {
  RngStream rng = derive_trial_stream(config.master_seed, trial_index);

  // Fixed draw order on the trial stream: unknowns, then anchors for every
  // algorithm in enum order, whether or not that algorithm is evaluated.
  const auto unknowns = deploy_unknowns_uniform(config.field, config.n_unknowns, rng);
  std::array<std::vector<Point2D>, 3> anchors;
  for (Algorithm a : kAllAlgorithms) {
    anchors[static_cast<std::size_t>(a)] =
        place_anchors(config.layout(a), config.field, config.n_anchors, rng);
  }

  TrialResult out;
  for (Algorithm a : config.algorithms) {
    Deployment dep{config.field, anchors[static_cast<std::size_t>(a)], unknowns};
    TrialDetail detail = localize_all(config, trial_index, a, dep);
    out.summaries.push_back(summarize_trial(detail.nodes, a, config.master_seed, trial_index));
    out.details.push_back(std::move(detail));
  }
  return out;
}

ResultsBundle run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  config.validate();
  std::vector<TrialResult> results(config.trials);

  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                          : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, config.trials));

  if (threads <= 1) {
    for (std::size_t t = 0; t < config.trials; ++t) {
      results[t] = run_trial(config, t);
      if (!options.keep_details) results[t].details.clear();
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < config.trials; t = next++) {
          try {
            results[t] = run_trial(config, t);
            if (!options.keep_details) results[t].details.clear();
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  }

  ResultsBundle bundle;
  bundle.config = config;
  bundle.summaries.reserve(config.trials * config.algorithms.size());
  for (auto& r : results) {
    bundle.summaries.insert(bundle.summaries.end(), r.summaries.begin(), r.summaries.end());
    for (auto& d : r.details) bundle.details.push_back(std::move(d));
  }
  return bundle;
}

std::vector<AlgorithmAggregate> aggregate(const ResultsBundle& bundle) {
  std::vector<AlgorithmAggregate> out;
  for (Algorithm a : bundle.config.algorithms) {
    AlgorithmAggregate agg{a};
    std::size_t all = 0;
    for (const auto& s : bundle.summaries) {
      if (s.algorithm != a) continue;
      ++all;
      agg.mean_coverage += s.coverage;
      if (s.empty()) continue;
      ++agg.trials_with_estimates;
      agg.mean_error_m += *s.mean_error_m;
      agg.mean_hops += *s.mean_hops;
      agg.mean_energy_uj += *s.mean_energy_uj;
    }
    if (all > 0) agg.mean_coverage /= static_cast<double>(all);
    if (agg.trials_with_estimates > 0) {
      const double k = static_cast<double>(agg.trials_with_estimates);
      agg.mean_error_m /= k;
      agg.mean_hops /= k;
      agg.mean_energy_uj /= k;
    }
    out.push_back(agg);
  }
  return out;
}

}  // namespace wsnloc
