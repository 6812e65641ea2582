// SPDX-License-Identifier: Apache-2.0

#include "prcurve/synth.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <iterator>
#include <random>
#include <string>

namespace prc {

namespace {

// splitmix64 step; decorrelates the per-stage seeds derived from one master.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + stream * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Eigen::Matrix2d cholesky_or_throw(const Eigen::Matrix2d& cov, const char* which) {
  const double scale = std::max(1.0, cov.cwiseAbs().maxCoeff());
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw DomainError(Errc::BadCovariance, std::string(which) + " is not symmetric");
  Eigen::LLT<Eigen::Matrix2d> llt(cov);
  if (llt.info() != Eigen::Success)
    throw DomainError(Errc::BadCovariance, std::string(which) + " is not positive-definite");
  return llt.matrixL();
}

Eigen::ArrayXd sigmoid(const Eigen::ArrayXd& s) { return 1.0 / (1.0 + (-s).exp()); }

}  // namespace

LabeledData generate(const GaussianSpec& spec, Eigen::Index n_pos, Eigen::Index n_neg) {
  if (n_pos < 1 || n_neg < 1)
    throw DomainError(Errc::EmptyClass, "need at least one sample of each class");
  const Eigen::Matrix2d l_pos = cholesky_or_throw(spec.cov_pos, "cov_pos");
  const Eigen::Matrix2d l_neg = cholesky_or_throw(spec.cov_neg, "cov_neg");

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> unit;

  LabeledData data;
  data.x.resize(n_pos + n_neg, 2);
  data.y.resize(n_pos + n_neg);
  for (Eigen::Index i = 0; i < n_pos + n_neg; ++i) {
    const bool positive = i < n_pos;
    const Eigen::Vector2d z{unit(rng), unit(rng)};
    data.x.row(i) =
        ((positive ? spec.mean_pos : spec.mean_neg) + (positive ? l_pos : l_neg) * z).transpose();
    data.y(i) = positive ? 1.0 : 0.0;
  }
  return data;
}

double logistic_loss(const LabeledData& data, const Eigen::Vector2d& weights,
                     double bias, double l2) {
  const Eigen::ArrayXd s = (data.x * weights).array() + bias;
  // softplus(s) - y s, written to avoid overflow for large |s|
  const Eigen::ArrayXd softplus = s.max(0.0) + (-s.abs()).exp().log1p();
  return (softplus - data.y * s).mean() + 0.5 * l2 * weights.squaredNorm();
}

LossGradient logistic_gradient(const LabeledData& data, const Eigen::Vector2d& weights,
                               double bias, double l2) {
  const Eigen::ArrayXd s = (data.x * weights).array() + bias;
  const Eigen::VectorXd residual = (sigmoid(s) - data.y).matrix();
  const double n = static_cast<double>(data.size());
  LossGradient g;
  g.weights = data.x.transpose() * residual / n + l2 * weights;
  g.bias = residual.mean();
  return g;
}

LogisticModel train_logistic(const LabeledData& data, const TrainConfig& config) {
  if (data.size() < 1 || data.n_pos() < 1 || data.n_neg() < 1)
    throw DomainError(Errc::EmptyClass, "training needs samples of both classes");
  if (!(std::isfinite(config.learning_rate) && config.learning_rate > 0.0))
    throw DomainError(Errc::BadConfig, "learning rate must be finite and > 0");
  if (config.iterations < 0)
    throw DomainError(Errc::BadConfig, "iteration count must be >= 0");
  if (!(std::isfinite(config.l2) && config.l2 >= 0.0))
    throw DomainError(Errc::BadConfig, "l2 must be finite and >= 0");

  LogisticModel model;
  for (int it = 0; it < config.iterations; ++it) {
    const LossGradient g = logistic_gradient(data, model.weights, model.bias, config.l2);
    model.weights -= config.learning_rate * g.weights;
    model.bias -= config.learning_rate * g.bias;
    if (!(model.weights.allFinite() && std::isfinite(model.bias)))
      throw DomainError(Errc::Diverged, "training diverged: parameters became non-finite");
  }
  if (!std::isfinite(logistic_loss(data, model.weights, model.bias, config.l2)))
    throw DomainError(Errc::Diverged, "training diverged: loss is non-finite");
  return model;
}

Eigen::ArrayXd score(const LogisticModel& model,
                     const Eigen::Matrix<double, Eigen::Dynamic, 2>& x) {
  return (x * model.weights).array() + model.bias;
}

std::vector<ScoredSample> score_samples(const LogisticModel& model, const LabeledData& data) {
  const Eigen::ArrayXd s = score(model, data.x);
  std::vector<ScoredSample> out(static_cast<std::size_t>(s.size()));
  for (Eigen::Index i = 0; i < s.size(); ++i)
    out[static_cast<std::size_t>(i)] = {s(i), data.y(i) == 1.0};
  return out;
}

std::vector<ScoredSample> subsample_to_ratio(std::span<const ScoredSample> samples,
                                             ClassRatio target_r, std::uint64_t seed) {
  std::vector<std::size_t> pos_idx;
  std::vector<std::size_t> neg_idx;
  for (std::size_t i = 0; i < samples.size(); ++i)
    (samples[i].positive ? pos_idx : neg_idx).push_back(i);
  const auto n_pos = static_cast<long long>(pos_idx.size());
  const auto n_neg = static_cast<long long>(neg_idx.size());
  if (n_pos < 1 || n_neg < 1)
    throw DomainError(Errc::EmptyClass, "subsampling needs samples of both classes");

  std::vector<char> keep(samples.size(), 1);
  std::mt19937_64 rng(seed);
  const auto drop_to = [&](const std::vector<std::size_t>& idx, long long want) {
    if (want >= static_cast<long long>(idx.size())) return;
    std::vector<std::size_t> kept;
    kept.reserve(static_cast<std::size_t>(want));
    std::sample(idx.begin(), idx.end(), std::back_inserter(kept), want, rng);
    for (std::size_t i : idx) keep[i] = 0;
    for (std::size_t i : kept) keep[i] = 1;
  };

  const double r = target_r.r();
  const double want_pos_raw = r * static_cast<double>(n_neg);
  if (want_pos_raw < static_cast<double>(n_pos) + 0.5) {
    drop_to(pos_idx, std::max(1ll, std::llround(want_pos_raw)));
  } else {
    const long long want_neg = std::max(1ll, std::llround(static_cast<double>(n_pos) / r));
    if (want_neg > n_neg)
      throw DomainError(Errc::UnachievableRatio,
                        "target ratio needs more samples than available");
    drop_to(neg_idx, want_neg);
  }

  std::vector<ScoredSample> out;
  out.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i)
    if (keep[i]) out.push_back(samples[i]);
  return out;
}

std::vector<ScoredSample> shift_scores(std::span<const ScoredSample> samples, double delta) {
  std::vector<ScoredSample> out(samples.begin(), samples.end());
  for (ScoredSample& s : out) s.score += delta;
  return out;
}

Eigen::ArrayXd uniform_grid(double lo, double hi, Eigen::Index count) {
  if (count < 1 || !(std::isfinite(lo) && std::isfinite(hi) && lo <= hi))
    throw DomainError(Errc::BadConfig, "grid needs finite lo <= hi and count >= 1");
  return Eigen::ArrayXd::LinSpaced(count, lo, hi);
}

double step_precision_at(const PRCurve& pr, double recall) {
  const Eigen::Index n = pr.recall.size();
  if (n == 0) throw DomainError(Errc::EmptyCurve, "lookup on an empty PR curve");
  const double* begin = pr.recall.data();
  const double* it = std::upper_bound(begin, begin + n, recall);
  const Eigen::Index idx = std::max<Eigen::Index>(0, (it - begin) - 1);
  return pr.precision(idx);
}

BenchmarkResult run_benchmark(const GaussianSpec& spec, const TrainConfig& train,
                              ClassRatio r_low, const Eigen::ArrayXd& recall_grid,
                              Eigen::Index n_pos, Eigen::Index n_neg) {
  if (recall_grid.size() == 0)
    throw DomainError(Errc::BadConfig, "recall grid is empty");
  for (Eigen::Index i = 0; i < recall_grid.size(); ++i)
    if (!(recall_grid(i) > 0.0 && recall_grid(i) <= 1.0))
      throw DomainError(Errc::BadConfig, "recall grid values must lie in (0, 1]");

  GaussianSpec train_spec = spec;
  train_spec.seed = mix_seed(spec.seed, 1);
  GaussianSpec test_spec = spec;
  test_spec.seed = mix_seed(spec.seed, 2);

  const LogisticModel model = train_logistic(generate(train_spec, n_pos, n_neg), train);
  const LabeledData test = generate(test_spec, n_pos, n_neg);
  const std::vector<ScoredSample> scored = score_samples(model, test);

  const RateCurve full = sweep(scored);
  const ClassRatio r_full = full.empirical_ratio();

  const std::vector<ScoredSample> sub = subsample_to_ratio(scored, r_low, mix_seed(spec.seed, 3));
  const RateCurve subbed = sweep(sub);
  const ClassRatio r_real = subbed.empirical_ratio();

  PRCurve pr_balanced = pr_view(full, r_full);
  PRCurve pr_predicted = rescale_pr(full, r_full, r_real);
  PRCurve pr_empirical = pr_view(subbed, r_real);

  const Eigen::Index g = recall_grid.size();
  ComparisonReport report{recall_grid, Eigen::ArrayXd(g), Eigen::ArrayXd(g), 0.0, 0.0};
  for (Eigen::Index i = 0; i < g; ++i) {
    report.predicted_precision(i) = step_precision_at(pr_predicted, recall_grid(i));
    report.empirical_precision(i) = step_precision_at(pr_empirical, recall_grid(i));
  }
  const Eigen::ArrayXd gap = (report.predicted_precision - report.empirical_precision).abs();
  report.mean_abs_gap = gap.mean();
  report.max_abs_gap = gap.maxCoeff();

  return BenchmarkResult{std::move(report),     std::move(pr_balanced), std::move(pr_predicted),
                         std::move(pr_empirical), auroc(full),          auroc(subbed),
                         r_real};
}

}  // namespace prc
