// SPDX-License-Identifier: Apache-2.0
//
// Independent reference implementations used only to cross-check the
// library. They favor directness over speed: rank statistics for AUROC and
// per-threshold recounting for average precision.
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "prcurve/curves.hpp"

namespace prc::test {

// AUROC as the tie-corrected rank statistic: average 1-based ranks over the
// pooled ascending order, ties sharing their mean rank.
inline double mann_whitney_auc(std::span<const ScoredSample> samples) {
  const std::size_t n = samples.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return samples[a].score < samples[b].score;
  });

  std::vector<double> rank(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && samples[order[j]].score == samples[order[i]].score) ++j;
    const double avg = 0.5 * static_cast<double>(i + 1 + j);  // mean of ranks i+1 .. j
    for (std::size_t k = i; k < j; ++k) rank[order[k]] = avg;
    i = j;
  }

  double rank_sum = 0.0;
  double n_pos = 0.0;
  double n_neg = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (samples[k].positive) {
      rank_sum += rank[k];
      n_pos += 1.0;
    } else {
      n_neg += 1.0;
    }
  }
  return (rank_sum - 0.5 * n_pos * (n_pos + 1.0)) / (n_pos * n_neg);
}

// Average precision for distinct scores: mean over positives of the
// precision at each positive's rank in descending order.
inline double average_precision_by_rank(std::span<const ScoredSample> samples) {
  std::vector<ScoredSample> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const ScoredSample& a, const ScoredSample& b) { return a.score > b.score; });
  double hits = 0.0;
  double sum = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k].positive) {
      hits += 1.0;
      sum += hits / static_cast<double>(k + 1);
    }
  }
  return sum / hits;
}

// Tie-safe average precision: walk distinct thresholds in descending order
// and recount tp/fp from scratch at each, weighting by the recall step.
inline double average_precision_by_threshold(std::span<const ScoredSample> samples) {
  std::vector<double> thresholds;
  double total_pos = 0.0;
  for (const ScoredSample& s : samples) {
    thresholds.push_back(s.score);
    if (s.positive) total_pos += 1.0;
  }
  std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  double ap = 0.0;
  double prev_tp = 0.0;
  for (double t : thresholds) {
    double tp = 0.0;
    double fp = 0.0;
    for (const ScoredSample& s : samples) {
      if (s.score >= t) (s.positive ? tp : fp) += 1.0;
    }
    if (tp > 0.0) ap += (tp - prev_tp) / total_pos * (tp / (tp + fp));
    prev_tp = tp;
  }
  return ap;
}

}  // namespace prc::test
