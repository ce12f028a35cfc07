#include "wsnloc/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wsnloc {

void EnergyParams::validate() const {
  auto ok = [](double v) { return std::isfinite(v) && v > 0.0; };
  bool good = ok(e_tx_uj) && ok(e_rx_uj);
  for (double m : tx_multiplier) good = good && ok(m);
  for (double m : rx_multiplier) good = good && ok(m);
  if (!good) throw std::invalid_argument("EnergyParams: all values must be finite and > 0");
}

double localization_energy(const EnergyParams& params, Algorithm algorithm, double mean_hops,
                           std::size_t anchors_used) {
  if (!(mean_hops >= 0.0) || !std::isfinite(mean_hops)) {
    throw std::invalid_argument("localization_energy: h must be finite and >= 0");
  }
  if (anchors_used == 0) throw std::invalid_argument("localization_energy: n must be >= 1");
  return params.tx(algorithm) * params.e_tx_uj * mean_hops +
         params.rx(algorithm) * params.e_rx_uj * static_cast<double>(anchors_used);
}

TrialSummary summarize_trial(std::span<const NodeMetrics> metrics, Algorithm algorithm,
                             std::uint64_t seed, std::size_t trial_index) {
  if (metrics.empty()) throw std::invalid_argument("summarize_trial: no node metrics");
  TrialSummary s;
  s.algorithm = algorithm;
  s.seed = seed;
  s.trial_index = trial_index;

  // Welford running means: k identical inputs give back that value exactly.
  std::size_t k = 0;
  double mean_err = 0.0;
  double m2 = 0.0;
  double mean_hops = 0.0;
  double mean_energy = 0.0;
  for (const auto& m : metrics) {
    if (!m.localized()) continue;
    ++k;
    const double n = static_cast<double>(k);
    const double delta = *m.error_m - mean_err;
    mean_err += delta / n;
    m2 += delta * (*m.error_m - mean_err);
    mean_hops += (m.hops - mean_hops) / n;
    mean_energy += (m.energy_uj - mean_energy) / n;
  }
  s.coverage = static_cast<double>(k) / static_cast<double>(metrics.size());
  if (k == 0) return s;

  s.mean_error_m = mean_err;
  s.error_std_m = std::sqrt(std::max(0.0, m2 / static_cast<double>(k)));
  s.mean_hops = mean_hops;
  s.mean_energy_uj = mean_energy;
  return s;
}

std::vector<EnergySweepRow> energy_hop_sweep(const EnergyParams& params,
                                             std::span<const Algorithm> algorithms,
                                             std::span<const double> h_values,
                                             std::size_t anchors_used) {
  if (h_values.empty()) throw std::invalid_argument("energy_hop_sweep: no h values");
  std::vector<EnergySweepRow> rows;
  rows.reserve(algorithms.size() * h_values.size());
  for (Algorithm a : algorithms) {
    for (double h : h_values) {
      rows.push_back({a, h, localization_energy(params, a, h, anchors_used)});
    }
  }
  return rows;
}

}  // namespace wsnloc
