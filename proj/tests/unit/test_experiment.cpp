#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "wsnloc/experiment.hpp"
#include "wsnloc/output.hpp"

using namespace wsnloc;
namespace fs = std::filesystem;

namespace {

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream b;
  b << in.rdbuf();
  return b.str();
}

ExperimentConfig small_config(std::size_t trials) {
  ExperimentConfig c;
  c.trials = trials;
  c.master_seed = 2024;
  return c;
}

}  // namespace

TEST_CASE("summary row count") {
  auto c = small_config(3);
  c.algorithms = {Algorithm::Grl, Algorithm::DvHop};
  const auto b = run_experiment(c);
  CHECK(b.summaries.size() == 6);
  CHECK(b.summaries[0].algorithm == Algorithm::Grl);
  CHECK(b.summaries[1].algorithm == Algorithm::DvHop);
  CHECK(b.summaries[2].trial_index == 1);
  CHECK(line_count(format_summary_csv(b.summaries)) == 7);
}

TEST_CASE("runs are deterministic") {
  const auto c = small_config(2);
  const auto a = run_experiment(c);
  const auto b = run_experiment(c);
  CHECK(format_summary_csv(a.summaries) == format_summary_csv(b.summaries));
  CHECK(format_pernode_csv(a.details) == format_pernode_csv(b.details));
  CHECK(format_field_svg(a.details[0]) == format_field_svg(b.details[0]));

  auto other = c;
  other.master_seed = 2025;
  CHECK(format_summary_csv(run_experiment(other).summaries) != format_summary_csv(a.summaries));
}

TEST_CASE("parallel execution matches sequential") {
  const auto c = small_config(9);
  RunOptions seq;
  RunOptions par;
  par.threads = 4;
  const auto a = run_experiment(c, seq);
  const auto b = run_experiment(c, par);
  CHECK(format_summary_csv(a.summaries) == format_summary_csv(b.summaries));
  CHECK(format_pernode_csv(a.details) == format_pernode_csv(b.details));
}

TEST_CASE("algorithm subset does not perturb draws") {
  const auto all = run_experiment(small_config(2));
  auto c = small_config(2);
  c.algorithms = {Algorithm::Centroid};
  const auto only = run_experiment(c);
  for (const auto& s : only.summaries) {
    const auto it = std::find_if(all.summaries.begin(), all.summaries.end(), [&](const auto& x) {
      return x.trial_index == s.trial_index && x.algorithm == s.algorithm;
    });
    REQUIRE(it != all.summaries.end());
    CHECK(format_summary_csv(std::vector<TrialSummary>{*it}) ==
          format_summary_csv(std::vector<TrialSummary>{s}));
  }
}

TEST_CASE("algorithms share unknown positions within a trial") {
  const auto b = run_experiment(small_config(1));
  REQUIRE(b.details.size() == 3);
  CHECK(b.details[0].unknowns == b.details[1].unknowns);
  CHECK(b.details[1].unknowns == b.details[2].unknowns);
  CHECK(b.details[0].anchors != b.details[1].anchors);
  CHECK(b.details[0].unknowns.size() == 90);
  CHECK(b.details[0].anchors.size() == 10);
}

TEST_CASE("per-node metrics are consistent with the energy model") {
  const auto b = run_experiment(small_config(1));
  for (const auto& d : b.details) {
    for (const auto& n : d.nodes) {
      if (!n.localized()) continue;
      CHECK(*n.error_m == distance(n.true_position, *n.estimate));
      CHECK(n.energy_uj == localization_energy(b.config.energy, d.algorithm, n.hops, n.anchors_used));
      if (d.algorithm == Algorithm::Centroid) CHECK(n.hops == 1.0);
    }
  }
}

TEST_CASE("summary CSV") {
  CHECK(format_summary_csv({}) == std::string(kSummaryHeader) + "\n");

  const auto b = run_experiment(small_config(1));
  const auto csv = format_summary_csv(b.summaries);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == kSummaryHeader);
  std::getline(in, line);
  CHECK(line.rfind("0,GRL,2024,", 0) == 0);
  std::getline(in, line);
  CHECK(line.rfind("0,DV-Hop,2024,", 0) == 0);
  std::getline(in, line);
  CHECK(line.rfind("0,Centroid,2024,", 0) == 0);

  TrialSummary empty;
  empty.algorithm = Algorithm::Centroid;
  empty.seed = 9;
  CHECK(format_summary_csv(std::vector<TrialSummary>{empty}) ==
        std::string(kSummaryHeader) + "\n0,Centroid,9,,,0.000000,,\n");
}

TEST_CASE("summary CSV round-trips at six decimals") {
  const auto b = run_experiment(small_config(4));
  const auto csv = format_summary_csv(b.summaries);
  const auto parsed = parse_summary_csv(csv);
  REQUIRE(parsed.size() == b.summaries.size());
  auto same6 = [](const std::optional<double>& a, const std::optional<double>& c) {
    if (a.has_value() != c.has_value()) return false;
    return !a || format_fixed6(*a) == format_fixed6(*c);
  };
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    CHECK(parsed[i].trial_index == b.summaries[i].trial_index);
    CHECK(parsed[i].algorithm == b.summaries[i].algorithm);
    CHECK(parsed[i].seed == b.summaries[i].seed);
    CHECK(same6(parsed[i].mean_error_m, b.summaries[i].mean_error_m));
    CHECK(same6(parsed[i].error_std_m, b.summaries[i].error_std_m));
    CHECK(same6(parsed[i].coverage, b.summaries[i].coverage));
    CHECK(same6(parsed[i].mean_hops, b.summaries[i].mean_hops));
    CHECK(same6(parsed[i].mean_energy_uj, b.summaries[i].mean_energy_uj));
  }
  CHECK(format_summary_csv(parsed) == csv);
  CHECK_THROWS_AS(parse_summary_csv("nope\n"), Error);
}

TEST_CASE("per-node CSV") {
  CHECK(format_pernode_csv({}) == std::string(kPerNodeHeader) + "\n");

  TrialDetail d;
  d.algorithm = Algorithm::DvHop;
  d.trial_index = 2;
  NodeMetrics miss;
  miss.node_id = 5;
  miss.true_position = {1.5, 2.25};
  NodeMetrics hit;
  hit.node_id = 6;
  hit.true_position = {3, 4};
  hit.estimate = Point2D{0, 0};
  hit.error_m = 5.0;
  hit.hops = 2.5;
  hit.anchors_used = 4;
  hit.energy_uj = 325.0;
  d.nodes = {miss, hit};
  const std::vector<TrialDetail> v{d};
  CHECK(format_pernode_csv(v) == std::string(kPerNodeHeader) +
                                     "\n2,DV-Hop,5,1.500000,2.250000,,,,0.000000,0,0.000000"
                                     "\n2,DV-Hop,6,3.000000,4.000000,0.000000,0.000000,5.000000,"
                                     "2.500000,4,325.000000\n");

  const auto b = run_experiment(small_config(1));
  CHECK(line_count(format_pernode_csv(b.details)) == 1 + 3 * 90);
}

TEST_CASE("field SVG structure") {
  TrialDetail d;
  d.field = FieldSpec{100, 100};
  d.anchors = {{10, 10}, {50, 50}, {90, 90}};
  const auto svg = format_field_svg(d);
  CHECK(count_of(svg, "class=\"anchor\"") == 3);
  CHECK(count_of(svg, "class=\"unknown\"") == 0);
  CHECK(count_of(svg, "class=\"estimate\"") == 0);
  CHECK(svg.find("width=\"660.00\"") != std::string::npos);  // 100 m * 6 + margins
  CHECK(svg.find("class=\"legend\"") != std::string::npos);

  SUBCASE("exact estimate gives a zero-length connector") {
    NodeMetrics n;
    n.true_position = {20, 30};
    n.estimate = Point2D{20, 30};
    n.error_m = 0.0;
    d.unknowns = {n.true_position};
    d.nodes = {n};
    const auto s = format_field_svg(d);
    CHECK(count_of(s, "class=\"connector\"") == 1);
    CHECK(s.find("x1=\"150.00\" y1=\"450.00\" x2=\"150.00\" y2=\"450.00\"") != std::string::npos);
  }

  SUBCASE("counts match a simulated trial") {
    const auto b = run_experiment(small_config(1));
    for (const auto& det : b.details) {
      const auto s = format_field_svg(det);
      const auto localized_count = static_cast<std::size_t>(
          std::count_if(det.nodes.begin(), det.nodes.end(), [](const auto& n) { return n.localized(); }));
      CHECK(count_of(s, "class=\"unknown\"") == det.unknowns.size());
      CHECK(count_of(s, "class=\"anchor\"") == det.anchors.size());
      CHECK(count_of(s, "class=\"estimate\"") == localized_count);
      CHECK(count_of(s, "class=\"connector\"") == localized_count);
    }
  }
}

TEST_CASE("energy sweep CSV") {
  const auto path = fs::temp_directory_path() / "wsnloc_sweep_test.csv";
  const std::vector<double> h{1, 2, 3, 4, 5, 6};
  write_energy_sweep_csv(EnergyParams{}, h, 10, path);
  const auto text = slurp(path);
  fs::remove(path);
  CHECK(line_count(text) == 19);
  CHECK(text.find("\nGRL,4.000000,650.000000\n") != std::string::npos);
  CHECK(text.find("\nDV-Hop,1.000000,550.000000\n") != std::string::npos);
  CHECK(text.find("\nCentroid,6.000000,900.000000\n") != std::string::npos);
}

TEST_CASE("writers surface I/O failures with the path") {
  const fs::path bad = fs::temp_directory_path() / "wsnloc-no-such-dir" / "x.csv";
  try {
    write_summary_csv(ResultsBundle{}, bad);
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(e.path() == bad);
  }
}

TEST_CASE("aggregate over trials") {
  const auto b = run_experiment(small_config(3));
  const auto agg = aggregate(b);
  REQUIRE(agg.size() == 3);
  double sum = 0;
  for (const auto& s : b.summaries) {
    if (s.algorithm == Algorithm::Grl) sum += *s.mean_error_m;
  }
  CHECK(agg[0].mean_error_m == doctest::Approx(sum / 3));
  CHECK(agg[2].mean_hops == 1.0);
}
