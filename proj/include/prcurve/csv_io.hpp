// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prcurve/curves.hpp"
#include "prcurve/synth.hpp"

namespace prc {

// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);

// Reads score,label rows. Labels are 1/0/pos/neg; a first line whose score
// field is not numeric is treated as a header and skipped.
std::vector<ScoredSample> ingest_scores(const std::filesystem::path& path);

void write_roc_csv(const std::filesystem::path& path, const RateCurve& curve);
void write_pr_csv(const std::filesystem::path& path, const PRCurve& pr);
void write_prg_csv(const std::filesystem::path& path, const PRGCurve& prg);
void write_comparison_csv(const std::filesystem::path& path, const ComparisonReport& report);

// One scalar metric; ratio and beta stay blank where not applicable.
struct MetricRow {
  std::string metric;
  std::optional<double> ratio;
  std::optional<double> beta;
  double value = 0.0;
};

void write_metrics_csv(const std::filesystem::path& path, std::span<const MetricRow> rows);

// Numeric rows of a two-column CSV, skipping a non-numeric first line.
std::vector<std::array<double, 2>> read_xy_csv(const std::filesystem::path& path);

}  // namespace prc
