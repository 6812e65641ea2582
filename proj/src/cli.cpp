// SPDX-License-Identifier: Apache-2.0

#include "prcurve/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "prcurve/csv_io.hpp"
#include "prcurve/svg.hpp"

namespace prc::cli {

namespace {

const char* palette(std::size_t i) {
  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                            "#9467bd", "#8c564b", "#17becf"};
  return kColors[i % std::size(kColors)];
}

void require_positive(double v, const char* name) {
  if (!(std::isfinite(v) && v > 0.0))
    throw ParseError(std::string(name) + " must be finite and > 0");
}

void validate(const RunConfig& c) {
  if (c.ratios.empty()) throw ParseError("at least one ratio is required");
  for (double r : c.ratios) require_positive(r, "--ratios entries");
  require_positive(c.from_r, "--from-r");
  require_positive(c.to_r, "--to-r");
  require_positive(c.r0, "--r0");
  require_positive(c.beta, "--beta");
  require_positive(c.train.learning_rate, "--learning-rate");
  if (c.train.iterations < 0) throw ParseError("--iterations must be >= 0");
  if (!(c.grid_lo > 0.0 && c.grid_hi <= 1.0 && c.grid_lo <= c.grid_hi))
    throw ParseError("--grid must satisfy 0 < lo <= hi <= 1");
  if (c.grid_count < 1) throw ParseError("--grid count must be >= 1");
  if (c.n_pos < 1 || c.n_neg < 1) throw ParseError("--n-pos and --n-neg must be >= 1");
}

void ensure_out_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string());
}

std::string ratio_tag(double r) { return format_double(r); }

void write_summary_json(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << j.dump(2) << '\n';
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

void parse_grid_spec(const std::string& text, RunConfig& config) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos)
    throw ParseError("--grid expects lo:hi:count");
  try {
    std::size_t used = 0;
    const std::string lo = text.substr(0, first);
    const std::string hi = text.substr(first + 1, second - first - 1);
    const std::string count = text.substr(second + 1);
    config.grid_lo = std::stod(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(lo);
    config.grid_hi = std::stod(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(hi);
    config.grid_count = std::stoi(count, &used);
    if (used != count.size()) throw std::invalid_argument(count);
  } catch (const std::logic_error&) {
    throw ParseError("--grid expects numeric lo:hi:count");
  }
}

void cmd_curves(const RunConfig& config) {
  validate(config);
  const std::vector<ScoredSample> samples = ingest_scores(config.input);
  const RateCurve curve = sweep(samples);
  ensure_out_dir(config.out_dir);

  write_roc_csv(config.out_dir / "roc.csv", curve);

  std::vector<MetricRow> metrics;
  metrics.push_back({"auroc", {}, {}, auroc(curve)});

  std::vector<PlotSeries> overlay;
  for (std::size_t k = 0; k < config.ratios.size(); ++k) {
    const ClassRatio ratio(config.ratios[k]);
    const std::string tag = ratio_tag(ratio.r());
    const PRCurve pr = pr_view(curve, ratio);
    const PRGCurve prg = prg_view(curve, ratio);
    write_pr_csv(config.out_dir / ("pr_r" + tag + ".csv"), pr);
    write_prg_csv(config.out_dir / ("prg_r" + tag + ".csv"), prg);
    metrics.push_back({"aupr", ratio.r(), {}, aupr(pr)});
    metrics.push_back({"auprg", ratio.r(), {}, auprg(prg)});
    metrics.push_back({"f_beta_max", ratio.r(), config.beta, max_f_beta(curve, ratio, config.beta)});
    overlay.push_back({"r=" + tag, palette(k), pr.recall, pr.precision});
  }

  const ClassRatio r0(config.r0);
  metrics.push_back({"normalized_aupr", r0.r(), {}, normalized_aupr(curve, r0)});
  metrics.push_back(
      {"normalized_f_beta_max", r0.r(), config.beta, normalized_f_beta(curve, r0, config.beta)});
  write_metrics_csv(config.out_dir / "metrics.csv", metrics);

  PlotSpec plot;
  plot.title = "Precision-recall curves across class ratios";
  plot.x_label = "recall";
  plot.y_label = "precision";
  write_line_chart(config.out_dir / "pr_overlay.svg", plot, overlay);
}

void cmd_rescale(const RunConfig& config) {
  validate(config);
  const std::vector<ScoredSample> samples = ingest_scores(config.input);
  const RateCurve curve = sweep(samples);
  const ClassRatio from(config.from_r);
  const ClassRatio to(config.to_r);
  const PRCurve predicted = rescale_pr(curve, from, to);
  ensure_out_dir(config.out_dir);

  const std::string tag = ratio_tag(to.r());
  write_pr_csv(config.out_dir / ("pr_predicted_r" + tag + ".csv"), predicted);

  const PRGCurve prg = prg_view(curve, to);
  std::vector<MetricRow> metrics;
  metrics.push_back({"auroc", {}, {}, auroc(curve)});
  metrics.push_back({"aupr", to.r(), {}, aupr(predicted)});
  metrics.push_back({"auprg", to.r(), {}, auprg(prg)});
  metrics.push_back({"f_beta_max", to.r(), config.beta, max_f_beta(curve, to, config.beta)});
  write_metrics_csv(config.out_dir / "metrics.csv", metrics);
}

void cmd_simulate(const RunConfig& config) {
  validate(config);
  GaussianSpec gauss;
  gauss.seed = config.seed;
  const Eigen::ArrayXd grid = uniform_grid(config.grid_lo, config.grid_hi, config.grid_count);
  const BenchmarkResult result = run_benchmark(gauss, config.train, ClassRatio(config.to_r),
                                               grid, config.n_pos, config.n_neg);
  ensure_out_dir(config.out_dir);

  write_comparison_csv(config.out_dir / "comparison.csv", result.report);

  nlohmann::json summary;
  summary["mean_abs_gap"] = result.report.mean_abs_gap;
  summary["max_abs_gap"] = result.report.max_abs_gap;
  summary["auroc_balanced"] = result.auroc_balanced;
  summary["auroc_subsampled"] = result.auroc_subsampled;
  summary["realized_ratio"] = result.realized_ratio.r();
  summary["target_ratio"] = config.to_r;
  summary["seed"] = config.seed;
  summary["n_pos"] = config.n_pos;
  summary["n_neg"] = config.n_neg;
  write_summary_json(config.out_dir / "summary.json", summary);

  const std::string r_tag = ratio_tag(result.realized_ratio.r());
  const std::vector<PlotSeries> series{
      {"balanced, measured", "#1f77b4", result.pr_balanced.recall, result.pr_balanced.precision},
      {"r=" + r_tag + ", predicted", "#d62728", result.pr_predicted.recall,
       result.pr_predicted.precision},
      {"r=" + r_tag + ", measured", "#2ca02c", result.pr_empirical.recall,
       result.pr_empirical.precision}};
  PlotSpec plot;
  plot.title = "Predicted vs measured precision after subsampling";
  plot.x_label = "recall";
  plot.y_label = "precision";
  write_line_chart(config.out_dir / "benchmark.svg", plot, series);
}

int run(int argc, const char* const* argv) {
  RunConfig config;
  std::string grid_text;

  CLI::App app{"Operating-point curve toolkit: ROC/PR/PRG views, class-ratio rescaling, "
               "and a synthetic benchmark"};
  app.require_subcommand(1);

  CLI::App* curves =
      app.add_subcommand("curves", "Compute ROC/PR/PRG curves and scalar metrics from scores");
  curves->add_option("--input", config.input, "CSV of score,label rows")->required();
  curves->add_option("--ratios", config.ratios, "class ratios r for the PR/PRG views")
      ->delimiter(',');
  curves->add_option("--r0", config.r0, "reference ratio for normalized metrics");
  curves->add_option("--beta", config.beta, "beta for F_beta");
  curves->add_option("--out-dir", config.out_dir, "output directory");

  CLI::App* rescale =
      app.add_subcommand("rescale", "Predict the PR curve at a different class ratio");
  rescale->add_option("--input", config.input, "CSV of score,label rows")->required();
  rescale->add_option("--from-r", config.from_r, "ratio the input was measured at");
  rescale->add_option("--to-r", config.to_r, "target ratio");
  rescale->add_option("--beta", config.beta, "beta for F_beta");
  rescale->add_option("--out-dir", config.out_dir, "output directory");

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Two-Gaussian benchmark comparing predicted and measured PR curves");
  simulate->add_option("--seed", config.seed, "master random seed");
  simulate->add_option("--to-r", config.to_r, "class ratio after subsampling");
  simulate->add_option("--grid", grid_text, "recall grid as lo:hi:count");
  simulate->add_option("--n-pos", config.n_pos, "positive test samples before subsampling");
  simulate->add_option("--n-neg", config.n_neg, "negative test samples before subsampling");
  simulate->add_option("--learning-rate", config.train.learning_rate, "gradient descent step");
  simulate->add_option("--iterations", config.train.iterations, "gradient descent iterations");
  simulate->add_option("--l2", config.train.l2, "L2 penalty on the weights");
  simulate->add_option("--out-dir", config.out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (!grid_text.empty()) parse_grid_spec(grid_text, config);
    if (curves->parsed()) cmd_curves(config);
    else if (rescale->parsed()) cmd_rescale(config);
    else cmd_simulate(config);
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace prc::cli
