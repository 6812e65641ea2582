// SPDX-License-Identifier: Apache-2.0

#include "prcurve/svg.hpp"

#include <cstdio>
#include <fstream>

#include "prcurve/errors.hpp"

namespace prc {

namespace {

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// Minimal escaping; labels and titles are short plain strings.
std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

}  // namespace

void write_line_chart(const std::filesystem::path& path, const PlotSpec& spec,
                      std::span<const PlotSeries> series) {
  if (!(spec.x_max > spec.x_min) || !(spec.y_max > spec.y_min) || spec.width < 200 ||
      spec.height < 160)
    throw DomainError(Errc::BadConfig, "plot ranges must be increasing and the canvas usable");

  const double left = 64.0;
  const double right = 24.0;
  const double top = 40.0;
  const double bottom = 52.0;
  const double x0 = left;
  const double x1 = spec.width - right;
  const double y0 = spec.height - bottom;  // pixel y of the data minimum
  const double y1 = top;

  const auto sx = [&](double x) {
    return x0 + (x - spec.x_min) / (spec.x_max - spec.x_min) * (x1 - x0);
  };
  const auto sy = [&](double y) {
    return y0 - (y - spec.y_min) / (spec.y_max - spec.y_min) * (y0 - y1);
  };

  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\">\n";
  out << "<rect width=\"" << spec.width << "\" height=\"" << spec.height
      << "\" fill=\"white\"/>\n";
  out << "<rect x=\"" << px(x0) << "\" y=\"" << px(y1) << "\" width=\"" << px(x1 - x0)
      << "\" height=\"" << px(y0 - y1) << "\" fill=\"none\" stroke=\"#333\"/>\n";

  const int ticks = 5;
  for (int i = 0; i <= ticks; ++i) {
    const double fx = spec.x_min + (spec.x_max - spec.x_min) * i / ticks;
    const double fy = spec.y_min + (spec.y_max - spec.y_min) * i / ticks;
    const double tx = sx(fx);
    const double ty = sy(fy);
    out << "<line x1=\"" << px(tx) << "\" y1=\"" << px(y0) << "\" x2=\"" << px(tx) << "\" y2=\""
        << px(y0 + 5) << "\" stroke=\"#333\"/>\n";
    out << "<text x=\"" << px(tx) << "\" y=\"" << px(y0 + 18)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << tick_label(fx) << "</text>\n";
    out << "<line x1=\"" << px(x0 - 5) << "\" y1=\"" << px(ty) << "\" x2=\"" << px(x0)
        << "\" y2=\"" << px(ty) << "\" stroke=\"#333\"/>\n";
    out << "<text x=\"" << px(x0 - 8) << "\" y=\"" << px(ty + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << tick_label(fy) << "</text>\n";
  }

  out << "<text x=\"" << px(0.5 * (x0 + x1)) << "\" y=\"" << px(spec.height - 12)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << escape(spec.x_label) << "</text>\n";
  out << "<text x=\"16\" y=\"" << px(0.5 * (y0 + y1))
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
      << "transform=\"rotate(-90 16 " << px(0.5 * (y0 + y1)) << ")\">" << escape(spec.y_label)
      << "</text>\n";
  out << "<text x=\"" << px(0.5 * (x0 + x1)) << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"15\">" << escape(spec.title) << "</text>\n";

  for (const PlotSeries& s : series) {
    if (s.x.size() != s.y.size())
      throw DomainError(Errc::BadConfig, "series axes must have equal length");
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
    for (Eigen::Index i = 0; i < s.x.size(); ++i) {
      if (i) out << ' ';
      out << px(sx(s.x(i))) << ',' << px(sy(s.y(i)));
    }
    out << "\"/>\n";
  }

  double ly = y1 + 16.0;
  for (const PlotSeries& s : series) {
    const double lx = x1 - 150.0;
    out << "<line x1=\"" << px(lx) << "\" y1=\"" << px(ly - 4) << "\" x2=\"" << px(lx + 24)
        << "\" y2=\"" << px(ly - 4) << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << px(lx + 30) << "\" y=\"" << px(ly)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(s.label) << "</text>\n";
    ly += 16.0;
  }

  out << "</svg>\n";
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace prc
