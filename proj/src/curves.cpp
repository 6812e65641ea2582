// SPDX-License-Identifier: Apache-2.0

#include "prcurve/curves.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace prc {

namespace {

void validate_axis(const Eigen::ArrayXd& v, const char* name) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!(v(i) >= 0.0 && v(i) <= 1.0))
      throw DomainError(Errc::InvalidCurve, std::string(name) + " outside [0, 1]");
    if (i > 0 && v(i) < v(i - 1))
      throw DomainError(Errc::InvalidCurve, std::string(name) + " not non-decreasing");
  }
}

// First index with tpr > 0. tpr is non-decreasing, so [idx, size) is exactly
// the suffix where precision and the gains are defined.
Eigen::Index first_scoring_vertex(const RateCurve& curve) {
  Eigen::Index i = 0;
  while (i < curve.size() && curve.tpr()(i) == 0.0) ++i;
  return i;
}

Eigen::ArrayXd to_array(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::ArrayXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

RateCurve::RateCurve(Eigen::ArrayXd fpr, Eigen::ArrayXd tpr,
                     Eigen::Index n_pos, Eigen::Index n_neg)
    : fpr_(std::move(fpr)), tpr_(std::move(tpr)), n_pos_(n_pos), n_neg_(n_neg) {
  if (fpr_.size() != tpr_.size() || fpr_.size() < 1)
    throw DomainError(Errc::InvalidCurve, "curve needs equally sized, non-empty axes");
  if (n_pos_ < 0 || n_neg_ < 0 || (n_pos_ > 0) != (n_neg_ > 0))
    throw DomainError(Errc::InvalidCurve, "sample counts must be both present or both absent");
  validate_axis(fpr_, "fpr");
  validate_axis(tpr_, "tpr");
}

ClassRatio RateCurve::empirical_ratio() const {
  if (!has_counts())
    throw DomainError(Errc::EmptyClass, "curve carries no sample counts");
  return ClassRatio::from_counts(n_pos_, n_neg_);
}

RateCurve sweep(std::span<const ScoredSample> samples) {
  Eigen::Index n_pos = 0;
  Eigen::Index n_neg = 0;
  for (const ScoredSample& s : samples) {
    if (!std::isfinite(s.score))
      throw DomainError(Errc::NonFiniteScore, "sample scores must be finite");
    ++(s.positive ? n_pos : n_neg);
  }
  if (n_pos < 1 || n_neg < 1)
    throw DomainError(Errc::EmptyClass, "sweep needs at least one sample of each class");

  std::vector<ScoredSample> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const ScoredSample& a, const ScoredSample& b) { return a.score > b.score; });

  std::vector<double> fpr;
  std::vector<double> tpr;
  fpr.reserve(sorted.size() + 1);
  tpr.reserve(sorted.size() + 1);
  fpr.push_back(0.0);
  tpr.push_back(0.0);

  const double dp = static_cast<double>(n_pos);
  const double dn = static_cast<double>(n_neg);
  Eigen::Index tp = 0;
  Eigen::Index fp = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    ++(sorted[i].positive ? tp : fp);
    // one vertex per distinct score: emit only once a tie group is complete
    if (i + 1 == sorted.size() || sorted[i + 1].score != sorted[i].score) {
      fpr.push_back(static_cast<double>(fp) / dn);
      tpr.push_back(static_cast<double>(tp) / dp);
    }
  }

  return RateCurve(to_array(fpr), to_array(tpr), n_pos, n_neg);
}

Eigen::ArrayX2d roc_view(const RateCurve& curve) {
  Eigen::ArrayX2d out(curve.size(), 2);
  out.col(0) = curve.fpr();
  out.col(1) = curve.tpr();
  return out;
}

PRCurve pr_view(const RateCurve& curve, ClassRatio ratio) {
  const Eigen::Index m = curve.size() - first_scoring_vertex(curve);
  if (m == 0)
    throw DomainError(Errc::UndefinedPrecision, "every vertex has tpr = 0");
  PRCurve pr{curve.tpr().tail(m), Eigen::ArrayXd(), ratio};
  pr.precision = pr.recall / (pr.recall + curve.fpr().tail(m) / ratio.r());
  return pr;
}

PRCurve rescale_pr(const RateCurve& curve, ClassRatio from_r, ClassRatio to_r) {
  if (curve.has_counts()) {
    const double emp = curve.empirical_ratio().r();
    if (std::abs(from_r.r() - emp) > 1e-9 * emp)
      throw DomainError(Errc::RatioMismatch,
                        "from_r contradicts the curve's recorded sample counts");
  }
  return pr_view(curve, to_r);
}

RateCurve rate_curve_from_pr(const PRCurve& pr) {
  const Eigen::Index n = pr.recall.size();
  if (n == 0) throw DomainError(Errc::EmptyCurve, "empty PR curve");
  Eigen::ArrayXd tpr = pr.recall;
  Eigen::ArrayXd fpr(n);
  const double r = pr.ratio.r();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double p = pr.precision(i);
    if (!(p > 0.0 && p <= 1.0))
      throw DomainError(Errc::InvalidCurve, "precision outside (0, 1]");
    fpr(i) = std::clamp(r * tpr(i) * (1.0 - p) / p, 0.0, 1.0);
    // rounding can dent an fpr plateau by an ulp; anything larger is real
    if (i > 0 && fpr(i) < fpr(i - 1) && fpr(i - 1) - fpr(i) <= 1e-12) fpr(i) = fpr(i - 1);
  }
  return RateCurve(std::move(fpr), std::move(tpr));
}

PRGCurve prg_view(const RateCurve& curve, ClassRatio ratio) {
  std::vector<double> rg;
  std::vector<double> pg;
  for (Eigen::Index i = first_scoring_vertex(curve); i < curve.size(); ++i) {
    const GainPoint g = gains(curve.point(i), ratio);
    if (g.prec_gain >= 0.0 && g.rec_gain >= 0.0) {
      rg.push_back(g.rec_gain);
      pg.push_back(g.prec_gain);
    }
  }
  return PRGCurve{to_array(rg), to_array(pg), ratio};
}

double auroc(const RateCurve& curve) {
  const Eigen::Index n = curve.size();
  if (n < 2) return 0.0;
  const Eigen::ArrayXd& x = curve.fpr();
  const Eigen::ArrayXd& y = curve.tpr();
  return 0.5 * ((x.tail(n - 1) - x.head(n - 1)) * (y.tail(n - 1) + y.head(n - 1))).sum();
}

double aupr(const PRCurve& pr) {
  const Eigen::Index n = pr.recall.size();
  if (n == 0) throw DomainError(Errc::EmptyCurve, "area of an empty PR curve");
  Eigen::ArrayXd dr(n);
  dr(0) = pr.recall(0);
  if (n > 1) dr.tail(n - 1) = pr.recall.tail(n - 1) - pr.recall.head(n - 1);
  return (pr.precision * dr).sum();
}

double auprg(const PRGCurve& prg) {
  const Eigen::Index n = prg.rec_gain.size();
  if (n == 0) return 0.0;
  const Eigen::ArrayXd& x = prg.rec_gain;
  const Eigen::ArrayXd& y = prg.prec_gain;
  double area = x(0) * y(0);  // flat extension back to rec_gain = 0
  if (n > 1)
    area += 0.5 * ((x.tail(n - 1) - x.head(n - 1)) * (y.tail(n - 1) + y.head(n - 1))).sum();
  return area;
}

double max_f_beta(const RateCurve& curve, ClassRatio ratio, double beta) {
  if (!(std::isfinite(beta) && beta > 0.0))
    throw DomainError(Errc::UndefinedF, "beta must be finite and > 0");
  const Eigen::Index m = curve.size() - first_scoring_vertex(curve);
  if (m == 0) throw DomainError(Errc::UndefinedF, "every vertex has tpr = 0");
  const Eigen::ArrayXd t = curve.tpr().tail(m);
  const Eigen::ArrayXd f = curve.fpr().tail(m);
  const double b2 = beta * beta;
  return ((1.0 + b2) * t / (t + f / ratio.r() + b2)).maxCoeff();
}

PRCurve normalized_pr(const RateCurve& curve, ClassRatio r0) { return pr_view(curve, r0); }

double normalized_aupr(const RateCurve& curve, ClassRatio r0) {
  return aupr(pr_view(curve, r0));
}

double normalized_f_beta(const RateCurve& curve, ClassRatio r0, double beta) {
  return max_f_beta(curve, r0, beta);
}

}  // namespace prc
