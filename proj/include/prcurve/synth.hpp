// SPDX-License-Identifier: Apache-2.0
//
// Synthetic benchmark: sample a two-Gaussian binary problem, fit a logistic
// scorer by full-batch gradient descent, then check that rescaling the
// balanced PR curve predicts the curve measured on a subsampled test set.
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "prcurve/curves.hpp"

namespace prc {

// Class-conditional 2-D Gaussians plus the master seed for sampling.
struct GaussianSpec {
  Eigen::Vector2d mean_pos{1.0, 0.0};
  Eigen::Vector2d mean_neg{-1.0, 0.0};
  Eigen::Matrix2d cov_pos = Eigen::Matrix2d::Identity();
  Eigen::Matrix2d cov_neg = Eigen::Matrix2d::Identity();
  std::uint64_t seed = 1;
};

// Rows of x pair with y; y is 1 for positives, 0 for negatives.
struct LabeledData {
  Eigen::Matrix<double, Eigen::Dynamic, 2> x;
  Eigen::ArrayXd y;

  Eigen::Index size() const noexcept { return y.size(); }
  Eigen::Index n_pos() const noexcept { return static_cast<Eigen::Index>(y.sum()); }
  Eigen::Index n_neg() const noexcept { return size() - n_pos(); }
};

// Linear scorer; score(x) = w . x + b estimates the positive log odds.
struct LogisticModel {
  Eigen::Vector2d weights = Eigen::Vector2d::Zero();
  double bias = 0.0;
};

struct TrainConfig {
  double learning_rate = 1.0;
  int iterations = 500;
  double l2 = 0.0;
};

struct LossGradient {
  Eigen::Vector2d weights = Eigen::Vector2d::Zero();
  double bias = 0.0;
};

// Grid comparison of predicted (rescaled) versus empirical precision.
struct ComparisonReport {
  Eigen::ArrayXd recall_grid;
  Eigen::ArrayXd predicted_precision;
  Eigen::ArrayXd empirical_precision;
  double mean_abs_gap = 0.0;
  double max_abs_gap = 0.0;
};

// run_benchmark output: the grid report plus the curves and summary scalars
// it was computed from.
struct BenchmarkResult {
  ComparisonReport report;
  PRCurve pr_balanced;
  PRCurve pr_predicted;
  PRCurve pr_empirical;
  double auroc_balanced = 0.0;
  double auroc_subsampled = 0.0;
  ClassRatio realized_ratio;
};

// Positives first, then negatives, deterministic in spec.seed.
LabeledData generate(const GaussianSpec& spec, Eigen::Index n_pos, Eigen::Index n_neg);

// Mean log-loss plus (l2 / 2) |w|^2; stable for large |score|.
double logistic_loss(const LabeledData& data, const Eigen::Vector2d& weights,
                     double bias, double l2);

LossGradient logistic_gradient(const LabeledData& data, const Eigen::Vector2d& weights,
                               double bias, double l2);

// Deterministic full-batch gradient descent from zero parameters.
LogisticModel train_logistic(const LabeledData& data, const TrainConfig& config);

Eigen::ArrayXd score(const LogisticModel& model,
                     const Eigen::Matrix<double, Eigen::Dynamic, 2>& x);

std::vector<ScoredSample> score_samples(const LogisticModel& model, const LabeledData& data);

// Keeps one class whole and uniformly subsamples the other (without
// replacement) so the kept counts match target_r, rounded to the nearest
// integer count >= 1. Input order is preserved; hitting the current ratio
// returns the input unchanged.
std::vector<ScoredSample> subsample_to_ratio(std::span<const ScoredSample> samples,
                                             ClassRatio target_r, std::uint64_t seed);

// Adds delta to every score. Order-preserving, so the swept curve and every
// view of it are unchanged.
std::vector<ScoredSample> shift_scores(std::span<const ScoredSample> samples, double delta);

// count evenly spaced values covering [lo, hi] inclusive.
Eigen::ArrayXd uniform_grid(double lo, double hi, Eigen::Index count);

// Step lookup: precision of the last vertex with recall <= the query,
// clamped to the first vertex below the curve's recall range.
double step_precision_at(const PRCurve& pr, double recall);

// End-to-end run: train on one balanced draw, sweep a second balanced draw,
// rescale its PR curve to the realized ratio of a subsampled copy, and
// compare with the directly measured subsampled curve on the recall grid.
BenchmarkResult run_benchmark(const GaussianSpec& spec, const TrainConfig& train,
                              ClassRatio r_low, const Eigen::ArrayXd& recall_grid,
                              Eigen::Index n_pos = 5000, Eigen::Index n_neg = 5000);

}  // namespace prc
