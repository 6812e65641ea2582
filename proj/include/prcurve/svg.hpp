// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <span>
#include <string>

namespace prc {

struct PlotSeries {
  std::string label;
  std::string color;  // any CSS color
  Eigen::ArrayXd x;
  Eigen::ArrayXd y;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;
  int width = 720;
  int height = 540;
};

// Minimal deterministic SVG line chart: framed axes with ticks, one polyline
// per series, legend in the top-right corner.
void write_line_chart(const std::filesystem::path& path, const PlotSpec& spec,
                      std::span<const PlotSeries> series);

}  // namespace prc
