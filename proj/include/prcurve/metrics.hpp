// SPDX-License-Identifier: Apache-2.0
//
// Pointwise classifier metrics. (TPR, FPR) pairs are the canonical
// representation: they do not depend on the test set's class ratio, and every
// ratio-dependent quantity (precision, F_beta, the gains) is derived from
// them by supplying a ratio explicitly.
#pragma once

#include <cmath>
#include <cstdint>

#include "prcurve/errors.hpp"

namespace prc {

// Confusion table at one decision threshold.
struct ConfusionCounts {
  std::int64_t tp = 0;
  std::int64_t fn = 0;
  std::int64_t fp = 0;
  std::int64_t tn = 0;

  std::int64_t positives() const noexcept { return tp + fn; }
  std::int64_t negatives() const noexcept { return fp + tn; }
};

struct OperatingPoint {
  double tpr = 0.0;
  double fpr = 0.0;
};

// Both gains are <= 1; either may be negative for classifiers worse than the
// always-positive baseline.
struct GainPoint {
  double prec_gain = 0.0;
  double rec_gain = 0.0;
};

// Positive-to-negative ratio r = P/N, convertible to and from the positive
// fraction pi = P/(P+N) = r/(1+r).
class ClassRatio {
 public:
  explicit ClassRatio(double r) : r_(r) {
    if (!(std::isfinite(r) && r > 0.0))
      throw DomainError(Errc::DegenerateRatio, "class ratio must be finite and > 0");
  }

  static ClassRatio from_pi(double pi) {
    if (!(pi > 0.0 && pi < 1.0))
      throw DomainError(Errc::DegenerateRatio, "positive fraction must lie in (0, 1)");
    return ClassRatio(pi / (1.0 - pi));
  }

  static ClassRatio from_counts(std::int64_t n_pos, std::int64_t n_neg) {
    if (n_pos < 1 || n_neg < 1)
      throw DomainError(Errc::EmptyClass, "both classes need at least one member");
    return ClassRatio(static_cast<double>(n_pos) / static_cast<double>(n_neg));
  }

  double r() const noexcept { return r_; }
  double pi() const noexcept { return r_ / (1.0 + r_); }

 private:
  double r_;
};

// tpr = tp / (tp + fn), fpr = fp / (fp + tn).
inline OperatingPoint rates(const ConfusionCounts& c) {
  if (c.tp < 0 || c.fn < 0 || c.fp < 0 || c.tn < 0)
    throw DomainError(Errc::NegativeCount, "confusion counts must be non-negative");
  if (c.positives() < 1 || c.negatives() < 1)
    throw DomainError(Errc::EmptyClass, "rates need at least one member of each class");
  return {static_cast<double>(c.tp) / static_cast<double>(c.positives()),
          static_cast<double>(c.fp) / static_cast<double>(c.negatives())};
}

// precision = tpr / (tpr + fpr / r). Exactly 1 when fpr = 0, exactly 0 when
// tpr = 0 and fpr > 0; undefined when both rates are 0 (nothing predicted
// positive).
inline double precision_at_ratio(const OperatingPoint& op, ClassRatio ratio) {
  if (op.tpr == 0.0 && op.fpr == 0.0)
    throw DomainError(Errc::UndefinedPrecision,
                      "precision undefined with no predicted positives");
  return op.tpr / (op.tpr + op.fpr / ratio.r());
}

// Harmonic combination with recall weighted by beta^2.
inline double f_beta_from_pr(double precision, double recall, double beta) {
  if (!(std::isfinite(beta) && beta > 0.0))
    throw DomainError(Errc::UndefinedF, "beta must be finite and > 0");
  if (precision <= 0.0 || recall <= 0.0)
    throw DomainError(Errc::UndefinedF, "F undefined at zero precision or recall");
  const double b2 = beta * beta;
  return (1.0 + b2) * precision * recall / (b2 * precision + recall);
}

// Same score straight from the rates: (1 + b^2) tpr / (tpr + fpr / r + b^2).
inline double f_beta_from_rates(const OperatingPoint& op, ClassRatio ratio, double beta) {
  if (!(std::isfinite(beta) && beta > 0.0))
    throw DomainError(Errc::UndefinedF, "beta must be finite and > 0");
  if (op.tpr <= 0.0) throw DomainError(Errc::UndefinedF, "F undefined at tpr = 0");
  const double b2 = beta * beta;
  return (1.0 + b2) * op.tpr / (op.tpr + op.fpr / ratio.r() + b2);
}

// prec_gain = 1 - fpr / tpr. Takes no ratio on purpose: the gain is the
// same at every class ratio.
inline double precision_gain(const OperatingPoint& op) {
  if (op.tpr <= 0.0)
    throw DomainError(Errc::UndefinedGain, "precision gain undefined at tpr = 0");
  return 1.0 - op.fpr / op.tpr;
}

// rec_gain = 1 + r (1 - 1 / tpr); affine in r.
inline double recall_gain(const OperatingPoint& op, ClassRatio ratio) {
  if (op.tpr <= 0.0)
    throw DomainError(Errc::UndefinedGain, "recall gain undefined at tpr = 0");
  return 1.0 + ratio.r() * (1.0 - 1.0 / op.tpr);
}

inline GainPoint gains(const OperatingPoint& op, ClassRatio ratio) {
  return {precision_gain(op), recall_gain(op, ratio)};
}

}  // namespace prc
