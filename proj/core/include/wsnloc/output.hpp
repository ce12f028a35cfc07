#pragma once

// CSV and SVG writers. All real values use fixed notation with six decimals.

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "wsnloc/energy.hpp"
#include "wsnloc/experiment.hpp"

namespace wsnloc {

inline constexpr std::string_view kSummaryHeader =
    "trial,algorithm,seed,mean_error_m,error_std_m,coverage,mean_hops,mean_energy_uJ";
inline constexpr std::string_view kPerNodeHeader =
    "trial,algorithm,node_id,true_x,true_y,est_x,est_y,error_m,hops,anchors_used,energy_uJ";
inline constexpr std::string_view kSweepHeader = "algorithm,h,energy_uJ";

/// "%.6f"
std::string format_fixed6(double v);

std::string format_summary_csv(std::span<const TrialSummary> summaries);
std::string format_pernode_csv(std::span<const TrialDetail> details);
std::string format_energy_sweep_csv(std::span<const EnergySweepRow> rows);
std::string format_field_svg(const TrialDetail& detail);

void write_summary_csv(const ResultsBundle& bundle, const std::filesystem::path& path);
void write_pernode_csv(const ResultsBundle& bundle, const std::filesystem::path& path);
void write_field_svg(const TrialDetail& detail, const std::filesystem::path& path);
void write_energy_sweep_csv(const EnergyParams& params, std::span<const double> h_values,
                            std::size_t anchors_used, const std::filesystem::path& path);

/// Inverse of format_summary_csv. Throws Error on malformed input.
std::vector<TrialSummary> parse_summary_csv(std::string_view text);

/// Writes `contents` to `path` or throws IoError.
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace wsnloc
