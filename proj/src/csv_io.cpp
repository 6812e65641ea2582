// SPDX-License-Identifier: Apache-2.0

#include "prcurve/csv_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string_view>
#include <system_error>

namespace prc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view token, double& out) {
  token = trim(token);
  if (token.empty()) return false;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

// Splits a two-field row at its comma; rejects rows with zero or more than
// one comma.
void split_two(std::string_view line, long line_no, std::string_view& a, std::string_view& b) {
  const auto comma = line.find(',');
  if (comma == std::string_view::npos)
    throw ParseError("expected two comma-separated fields", line_no);
  if (line.find(',', comma + 1) != std::string_view::npos)
    throw ParseError("expected exactly two fields", line_no);
  a = line.substr(0, comma);
  b = line.substr(comma + 1);
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

void finish_write(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

void write_xy(const std::filesystem::path& path, const char* header,
              const Eigen::ArrayXd& x, const Eigen::ArrayXd& y) {
  std::ofstream out = open_for_write(path);
  out << header << '\n';
  for (Eigen::Index i = 0; i < x.size(); ++i)
    out << format_double(x(i)) << ',' << format_double(y(i)) << '\n';
  finish_write(out, path);
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw IoError("number formatting failed");
  return std::string(buf, ptr);
}

std::vector<ScoredSample> ingest_scores(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());

  std::vector<ScoredSample> out;
  bool saw_pos = false;
  bool saw_neg = false;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view row = trim(line);
    if (row.empty()) continue;

    std::string_view score_field;
    std::string_view label_field;
    split_two(row, line_no, score_field, label_field);

    double score = 0.0;
    if (!parse_double(score_field, score)) {
      if (line_no == 1) continue;  // header row
      throw ParseError("score is not a number: '" + std::string(trim(score_field)) + "'",
                       line_no);
    }
    if (!std::isfinite(score)) throw ParseError("score must be finite", line_no);

    const std::string_view label = trim(label_field);
    bool positive = false;
    if (label == "1" || label == "pos") positive = true;
    else if (label == "0" || label == "neg") positive = false;
    else
      throw ParseError("label must be one of 1, 0, pos, neg; got '" + std::string(label) + "'",
                       line_no);

    out.push_back({score, positive});
    (positive ? saw_pos : saw_neg) = true;
  }
  if (in.bad()) throw IoError("read failed: " + path.string());
  if (out.empty()) throw ParseError("no data rows in " + path.string());
  if (!saw_pos || !saw_neg)
    throw DomainError(Errc::EmptyClass, "input contains only one class");
  return out;
}

void write_roc_csv(const std::filesystem::path& path, const RateCurve& curve) {
  write_xy(path, "fpr,tpr", curve.fpr(), curve.tpr());
}

void write_pr_csv(const std::filesystem::path& path, const PRCurve& pr) {
  write_xy(path, "recall,precision", pr.recall, pr.precision);
}

void write_prg_csv(const std::filesystem::path& path, const PRGCurve& prg) {
  write_xy(path, "rec_gain,prec_gain", prg.rec_gain, prg.prec_gain);
}

void write_comparison_csv(const std::filesystem::path& path, const ComparisonReport& report) {
  std::ofstream out = open_for_write(path);
  out << "recall,predicted_precision,empirical_precision,abs_gap\n";
  for (Eigen::Index i = 0; i < report.recall_grid.size(); ++i) {
    const double gap = std::abs(report.predicted_precision(i) - report.empirical_precision(i));
    out << format_double(report.recall_grid(i)) << ','
        << format_double(report.predicted_precision(i)) << ','
        << format_double(report.empirical_precision(i)) << ',' << format_double(gap) << '\n';
  }
  finish_write(out, path);
}

void write_metrics_csv(const std::filesystem::path& path, std::span<const MetricRow> rows) {
  std::ofstream out = open_for_write(path);
  out << "metric,ratio,beta,value\n";
  for (const MetricRow& row : rows) {
    out << row.metric << ',';
    if (row.ratio) out << format_double(*row.ratio);
    out << ',';
    if (row.beta) out << format_double(*row.beta);
    out << ',' << format_double(row.value) << '\n';
  }
  finish_write(out, path);
}

std::vector<std::array<double, 2>> read_xy_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());

  std::vector<std::array<double, 2>> out;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view row = trim(line);
    if (row.empty()) continue;

    std::string_view a;
    std::string_view b;
    split_two(row, line_no, a, b);

    std::array<double, 2> xy{};
    if (!parse_double(a, xy[0])) {
      if (line_no == 1) continue;  // header row
      throw ParseError("first field is not a number", line_no);
    }
    if (!parse_double(b, xy[1]))
      throw ParseError("second field is not a number", line_no);
    out.push_back(xy);
  }
  if (in.bad()) throw IoError("read failed: " + path.string());
  return out;
}

}  // namespace prc
