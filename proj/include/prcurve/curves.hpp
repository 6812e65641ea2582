// SPDX-License-Identifier: Apache-2.0
//
// Threshold-sweep curves. A RateCurve is the ratio-free staircase of
// (fpr, tpr) operating points; ROC, PR and gain views plus the scalar areas
// are derived from it, with the class ratio passed in where it matters.
#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

#include "prcurve/metrics.hpp"

namespace prc {

// One scored test point. Higher score means more positive.
struct ScoredSample {
  double score = 0.0;
  bool positive = false;
};

// Operating points of a descending-score sweep, ordered from the (0, 0)
// anchor to (1, 1); both coordinate sequences are non-decreasing. Sample
// counts are recorded when the curve came from data and are 0 for curves
// assembled from bare points.
class RateCurve {
 public:
  RateCurve(Eigen::ArrayXd fpr, Eigen::ArrayXd tpr,
            Eigen::Index n_pos = 0, Eigen::Index n_neg = 0);

  const Eigen::ArrayXd& fpr() const noexcept { return fpr_; }
  const Eigen::ArrayXd& tpr() const noexcept { return tpr_; }
  Eigen::Index size() const noexcept { return fpr_.size(); }
  OperatingPoint point(Eigen::Index i) const { return {tpr_(i), fpr_(i)}; }

  bool has_counts() const noexcept { return n_pos_ > 0 && n_neg_ > 0; }
  Eigen::Index n_pos() const noexcept { return n_pos_; }
  Eigen::Index n_neg() const noexcept { return n_neg_; }
  ClassRatio empirical_ratio() const;  // requires has_counts()

 private:
  Eigen::ArrayXd fpr_;
  Eigen::ArrayXd tpr_;
  Eigen::Index n_pos_ = 0;
  Eigen::Index n_neg_ = 0;
};

// Precision-recall curve materialized at a specific class ratio.
struct PRCurve {
  Eigen::ArrayXd recall;
  Eigen::ArrayXd precision;
  ClassRatio ratio;
};

// Gain-space curve; stored points lie in the unit square because
// negative-gain points are dropped at construction.
struct PRGCurve {
  Eigen::ArrayXd rec_gain;
  Eigen::ArrayXd prec_gain;
  ClassRatio ratio;
};

// Descending-score sweep. Tied scores form one group, so the curve has one
// vertex per distinct score plus the (0, 0) anchor and ends at (1, 1). The
// result depends only on the ordering of the scores, not on the input order.
RateCurve sweep(std::span<const ScoredSample> samples);

// The curve's points as rows of (fpr, tpr). Takes no ratio.
Eigen::ArrayX2d roc_view(const RateCurve& curve);

// Per-vertex (recall, precision) at the given ratio. Vertices with tpr = 0
// have no defined precision and are dropped.
PRCurve pr_view(const RateCurve& curve, ClassRatio ratio);

// pr_view at to_r. from_r states the ratio the curve was measured at and is
// checked against the recorded sample counts when those are known.
PRCurve rescale_pr(const RateCurve& curve, ClassRatio from_r, ClassRatio to_r);

// Inverts the precision formula per vertex to recover (fpr, tpr) from a PR
// curve at its own ratio. The result carries no sample counts.
RateCurve rate_curve_from_pr(const PRCurve& pr);

// Per-vertex gains at the given ratio; points with a negative gain are
// dropped. prec_gain does not depend on the ratio, rec_gain does.
PRGCurve prg_view(const RateCurve& curve, ClassRatio ratio);

// Trapezoidal area under the (fpr, tpr) staircase.
double auroc(const RateCurve& curve);

// Average-precision convention: precision times the recall increment summed
// over vertices, with recall stepping up from 0.
double aupr(const PRCurve& pr);

// Trapezoidal area of the clipped gain curve. The first point's prec_gain
// extends flat back to rec_gain = 0; an empty curve has area 0.
double auprg(const PRGCurve& prg);

// Best F_beta over the curve's vertices at the given ratio.
double max_f_beta(const RateCurve& curve, ClassRatio ratio, double beta);

// Views and scalars recomputed at a fixed reference ratio r0, making
// classifiers measured at different empirical ratios comparable.
PRCurve normalized_pr(const RateCurve& curve, ClassRatio r0);
double normalized_aupr(const RateCurve& curve, ClassRatio r0);
double normalized_f_beta(const RateCurve& curve, ClassRatio r0, double beta);

}  // namespace prc
