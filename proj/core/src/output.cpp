#include "wsnloc/output.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>

namespace wsnloc {

namespace {

constexpr double kUnitsPerMeter = 6.0;
constexpr double kMargin = 30.0;
constexpr double kLegendHeight = 40.0;

std::string opt_cell(const std::optional<double>& v) {
  return v ? format_fixed6(*v) : std::string();
}

std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
T parse_number(std::string_view cell, std::string_view what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw Error("summary CSV: bad " + std::string(what) + " '" + std::string(cell) + "'");
  }
  return value;
}

std::optional<double> parse_opt(std::string_view cell, std::string_view what) {
  if (cell.empty()) return std::nullopt;
  return parse_number<double>(cell, what);
}

}  // namespace

std::string format_fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string format_summary_csv(std::span<const TrialSummary> summaries) {
  std::string out(kSummaryHeader);
  out += '\n';
  for (const auto& s : summaries) {
    out += std::to_string(s.trial_index);
    out += ',';
    out += display_name(s.algorithm);
    out += ',';
    out += std::to_string(s.seed);
    out += ',' + opt_cell(s.mean_error_m);
    out += ',' + opt_cell(s.error_std_m);
    out += ',' + format_fixed6(s.coverage);
    out += ',' + opt_cell(s.mean_hops);
    out += ',' + opt_cell(s.mean_energy_uj);
    out += '\n';
  }
  return out;
}

std::string format_pernode_csv(std::span<const TrialDetail> details) {
  std::string out(kPerNodeHeader);
  out += '\n';
  for (const auto& d : details) {
    for (const auto& n : d.nodes) {
      out += std::to_string(d.trial_index);
      out += ',';
      out += display_name(d.algorithm);
      out += ',' + std::to_string(n.node_id);
      out += ',' + format_fixed6(n.true_position.x);
      out += ',' + format_fixed6(n.true_position.y);
      out += ',' + (n.estimate ? format_fixed6(n.estimate->x) : std::string());
      out += ',' + (n.estimate ? format_fixed6(n.estimate->y) : std::string());
      out += ',' + opt_cell(n.error_m);
      out += ',' + format_fixed6(n.hops);
      out += ',' + std::to_string(n.anchors_used);
      out += ',' + format_fixed6(n.energy_uj);
      out += '\n';
    }
  }
  return out;
}

std::string format_energy_sweep_csv(std::span<const EnergySweepRow> rows) {
  std::string out(kSweepHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += display_name(r.algorithm);
    out += ',' + format_fixed6(r.hops);
    out += ',' + format_fixed6(r.energy_uj);
    out += '\n';
  }
  return out;
}

std::string format_field_svg(const TrialDetail& d) {
  const double w = d.field.width * kUnitsPerMeter;
  const double h = d.field.height * kUnitsPerMeter;
  const double total_w = w + 2 * kMargin;
  const double total_h = h + 2 * kMargin + kLegendHeight;
  auto sx = [&](double x) { return fmt2(kMargin + x * kUnitsPerMeter); };
  auto sy = [&](double y) { return fmt2(kMargin + (d.field.height - y) * kUnitsPerMeter); };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt2(total_w) + "\" height=\"" +
       fmt2(total_h) + "\" viewBox=\"0 0 " + fmt2(total_w) + " " + fmt2(total_h) + "\">\n";
  s += "<title>" + std::string(display_name(d.algorithm)) + " trial " +
       std::to_string(d.trial_index) + "</title>\n";
  s += "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" + fmt2(total_w) + "\" height=\"" +
       fmt2(total_h) + "\" fill=\"white\"/>\n";
  s += "<rect class=\"border\" x=\"" + fmt2(kMargin) + "\" y=\"" + fmt2(kMargin) + "\" width=\"" +
       fmt2(w) + "\" height=\"" + fmt2(h) + "\" fill=\"none\" stroke=\"black\"/>\n";

  s += "<g class=\"connectors\" stroke=\"gray\" stroke-width=\"1\">\n";
  for (const auto& n : d.nodes) {
    if (!n.estimate) continue;
    s += "<line class=\"connector\" x1=\"" + sx(n.true_position.x) + "\" y1=\"" +
         sy(n.true_position.y) + "\" x2=\"" + sx(n.estimate->x) + "\" y2=\"" + sy(n.estimate->y) +
         "\"/>\n";
  }
  s += "</g>\n";

  s += "<g class=\"unknowns\" fill=\"blue\">\n";
  for (const auto& p : d.unknowns) {
    s += "<circle class=\"unknown\" cx=\"" + sx(p.x) + "\" cy=\"" + sy(p.y) + "\" r=\"3\"/>\n";
  }
  s += "</g>\n";

  s += "<g class=\"anchors\" fill=\"red\">\n";
  for (const auto& p : d.anchors) {
    s += "<rect class=\"anchor\" x=\"" + fmt2(kMargin + p.x * kUnitsPerMeter - 5) + "\" y=\"" +
         fmt2(kMargin + (d.field.height - p.y) * kUnitsPerMeter - 5) +
         "\" width=\"10\" height=\"10\"/>\n";
  }
  s += "</g>\n";

  s += "<g class=\"estimates\" stroke=\"green\" stroke-width=\"2\">\n";
  for (const auto& n : d.nodes) {
    if (!n.estimate) continue;
    const double cx = kMargin + n.estimate->x * kUnitsPerMeter;
    const double cy = kMargin + (d.field.height - n.estimate->y) * kUnitsPerMeter;
    s += "<path class=\"estimate\" d=\"M" + fmt2(cx - 4) + " " + fmt2(cy - 4) + " L" +
         fmt2(cx + 4) + " " + fmt2(cy + 4) + " M" + fmt2(cx - 4) + " " + fmt2(cy + 4) + " L" +
         fmt2(cx + 4) + " " + fmt2(cy - 4) + "\"/>\n";
  }
  s += "</g>\n";

  const double ly = kMargin + h + 25;
  const double lx = kMargin;
  s += "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s += "<circle class=\"legend-unknown\" cx=\"" + fmt2(lx + 5) + "\" cy=\"" + fmt2(ly) +
       "\" r=\"3\" fill=\"blue\"/>\n";
  s += "<text x=\"" + fmt2(lx + 14) + "\" y=\"" + fmt2(ly + 4) + "\">sensor node</text>\n";
  s += "<rect class=\"legend-anchor\" x=\"" + fmt2(lx + 110) + "\" y=\"" + fmt2(ly - 5) +
       "\" width=\"10\" height=\"10\" fill=\"red\"/>\n";
  s += "<text x=\"" + fmt2(lx + 126) + "\" y=\"" + fmt2(ly + 4) + "\">anchor</text>\n";
  s += "<path class=\"legend-estimate\" d=\"M" + fmt2(lx + 200) + " " + fmt2(ly - 4) + " L" +
       fmt2(lx + 208) + " " + fmt2(ly + 4) + " M" + fmt2(lx + 200) + " " + fmt2(ly + 4) + " L" +
       fmt2(lx + 208) + " " + fmt2(ly - 4) + "\" stroke=\"green\" stroke-width=\"2\"/>\n";
  s += "<text x=\"" + fmt2(lx + 216) + "\" y=\"" + fmt2(ly + 4) + "\">estimate</text>\n";
  s += "<line class=\"legend-connector\" x1=\"" + fmt2(lx + 300) + "\" y1=\"" + fmt2(ly) +
       "\" x2=\"" + fmt2(lx + 320) + "\" y2=\"" + fmt2(ly) + "\" stroke=\"gray\"/>\n";
  s += "<text x=\"" + fmt2(lx + 326) + "\" y=\"" + fmt2(ly + 4) + "\">error</text>\n";
  s += "</g>\n";
  s += "</svg>\n";
  return s;
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) throw IoError(path, "write failed");
}

void write_summary_csv(const ResultsBundle& bundle, const std::filesystem::path& path) {
  write_text_file(path, format_summary_csv(bundle.summaries));
}

void write_pernode_csv(const ResultsBundle& bundle, const std::filesystem::path& path) {
  write_text_file(path, format_pernode_csv(bundle.details));
}

void write_field_svg(const TrialDetail& detail, const std::filesystem::path& path) {
  write_text_file(path, format_field_svg(detail));
}

void write_energy_sweep_csv(const EnergyParams& params, std::span<const double> h_values,
                            std::size_t anchors_used, const std::filesystem::path& path) {
  const auto rows = energy_hop_sweep(params, kAllAlgorithms, h_values, anchors_used);
  write_text_file(path, format_energy_sweep_csv(rows));
}

std::vector<TrialSummary> parse_summary_csv(std::string_view text) {
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kSummaryHeader) {
    throw Error("summary CSV: missing or unexpected header");
  }
  std::vector<TrialSummary> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split(lines[i], ',');
    if (cells.size() != 8) throw Error("summary CSV: wrong column count on line " + std::to_string(i + 1));
    TrialSummary s;
    s.trial_index = parse_number<std::size_t>(cells[0], "trial");
    try {
      s.algorithm = parse_algorithm(cells[1]);
    } catch (const std::invalid_argument& e) {
      throw Error(std::string("summary CSV: ") + e.what());
    }
    s.seed = parse_number<std::uint64_t>(cells[2], "seed");
    s.mean_error_m = parse_opt(cells[3], "mean_error_m");
    s.error_std_m = parse_opt(cells[4], "error_std_m");
    s.coverage = parse_number<double>(cells[5], "coverage");
    s.mean_hops = parse_opt(cells[6], "mean_hops");
    s.mean_energy_uj = parse_opt(cells[7], "mean_energy_uJ");
    out.push_back(s);
  }
  return out;
}

}  // namespace wsnloc
