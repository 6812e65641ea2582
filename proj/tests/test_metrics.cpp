// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "prcurve/metrics.hpp"
#include "test_util.hpp"

using namespace prc;
using test::close;
using test::domain_code;
using test::log_uniform;

TEST_CASE("rates from confusion counts") {
  const OperatingPoint op = rates({.tp = 800, .fn = 200, .fp = 100, .tn = 900});
  CHECK(op.tpr == 800.0 / 1000.0);
  CHECK(op.fpr == 100.0 / 1000.0);

  const OperatingPoint nothing = rates({.tp = 0, .fn = 10, .fp = 0, .tn = 10});
  CHECK(nothing.tpr == 0.0);
  CHECK(nothing.fpr == 0.0);

  const OperatingPoint everything = rates({.tp = 10, .fn = 0, .fp = 10, .tn = 0});
  CHECK(everything.tpr == 1.0);
  CHECK(everything.fpr == 1.0);
}

TEST_CASE("rates rejects empty classes and negative counts") {
  CHECK(domain_code([] { rates({.tp = 0, .fn = 0, .fp = 1, .tn = 1}); }) == Errc::EmptyClass);
  CHECK(domain_code([] { rates({.tp = 1, .fn = 1, .fp = 0, .tn = 0}); }) == Errc::EmptyClass);
  CHECK(domain_code([] { rates({.tp = -1, .fn = 2, .fp = 1, .tn = 1}); }) ==
        Errc::NegativeCount);
}

TEST_CASE("class ratio conversions") {
  CHECK(ClassRatio::from_pi(0.5).r() == 1.0);
  CHECK(ClassRatio::from_counts(500, 5000).r() == 0.1);
  CHECK(close(ClassRatio(0.1).pi(), 1.0 / 11.0));
  CHECK(close(ClassRatio::from_pi(2.0 / 3.0).r(), 2.0));

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(1e-6, 1.0 - 1e-6);
  for (int i = 0; i < 300; ++i) {
    const double pi = u(rng);
    CHECK(close(ClassRatio::from_pi(pi).pi(), pi));
    const double r = log_uniform(rng, 1e-4, 1e4);
    CHECK(close(ClassRatio::from_pi(ClassRatio(r).pi()).r(), r));
  }

  CHECK(domain_code([] { ClassRatio{0.0}; }) == Errc::DegenerateRatio);
  CHECK(domain_code([] { ClassRatio{-2.0}; }) == Errc::DegenerateRatio);
  CHECK(domain_code([] { ClassRatio{std::numeric_limits<double>::infinity()}; }) ==
        Errc::DegenerateRatio);
  CHECK(domain_code([] { ClassRatio::from_pi(0.0); }) == Errc::DegenerateRatio);
  CHECK(domain_code([] { ClassRatio::from_pi(1.0); }) == Errc::DegenerateRatio);
  CHECK(domain_code([] { ClassRatio::from_counts(0, 5); }) == Errc::EmptyClass);
}

TEST_CASE("precision at a class ratio") {
  const OperatingPoint op{0.8, 0.1};
  // balanced: counts (800, 200, 100, 900) give 800 / 900 directly
  CHECK(close(precision_at_ratio(op, ClassRatio(1.0)), 800.0 / 900.0));
  // r = 0.1: counts (400, 100, 500, 4500) give 400 / 900
  CHECK(close(precision_at_ratio(op, ClassRatio(0.1)), 400.0 / 900.0));
  CHECK(close(precision_at_ratio(op, ClassRatio(0.1)), 0.8 / 1.8));

  CHECK(precision_at_ratio({0.8, 0.0}, ClassRatio(0.01)) == 1.0);
  CHECK(precision_at_ratio({0.0, 0.3}, ClassRatio(5.0)) == 0.0);
  CHECK(domain_code([] { precision_at_ratio({0.0, 0.0}, ClassRatio(1.0)); }) ==
        Errc::UndefinedPrecision);
}

TEST_CASE("precision agrees with direct tp / (tp + fp)") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> count(0, 1000);
  int done = 0;
  while (done < 500) {
    const ConfusionCounts c{count(rng), count(rng), count(rng), count(rng)};
    if (c.positives() < 1 || c.negatives() < 1 || c.tp + c.fp < 1) continue;
    const double direct = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
    const double via_rates =
        precision_at_ratio(rates(c), ClassRatio::from_counts(c.positives(), c.negatives()));
    CHECK(close(direct, via_rates));
    ++done;
  }
}

TEST_CASE("precision extremes in the ratio") {
  const OperatingPoint op{0.8, 0.1};
  CHECK(precision_at_ratio(op, ClassRatio(1e8)) > 0.999);
  CHECK(precision_at_ratio(op, ClassRatio(1e-8)) < 0.001);
}

TEST_CASE("precision strictly increases with the ratio when fpr > 0") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> rate(1e-3, 1.0);
  std::uniform_real_distribution<double> factor(1.01, 10.0);
  for (int i = 0; i < 300; ++i) {
    const OperatingPoint op{rate(rng), rate(rng)};
    const double r1 = log_uniform(rng, 1e-2, 1e2);
    const double r2 = r1 * factor(rng);
    CHECK(precision_at_ratio(op, ClassRatio(r1)) < precision_at_ratio(op, ClassRatio(r2)));
  }
}

TEST_CASE("f_beta from precision and recall") {
  const double prec = 800.0 / 900.0;
  const double f1 = f_beta_from_pr(prec, 0.8, 1.0);
  CHECK(close(f1, 2.0 * prec * 0.8 / (prec + 0.8)));  // plain harmonic mean
  CHECK(close(f1, 1.6 / 1.9));

  // equal precision and recall collapse to that value for any beta
  CHECK(close(f_beta_from_pr(0.37, 0.37, 3.7), 0.37));
  CHECK(f_beta_from_pr(1.0, 1.0, 2.0) == 1.0);

  CHECK(domain_code([] { f_beta_from_pr(0.0, 0.5, 1.0); }) == Errc::UndefinedF);
  CHECK(domain_code([] { f_beta_from_pr(0.5, 0.0, 1.0); }) == Errc::UndefinedF);
  CHECK(domain_code([] { f_beta_from_pr(0.5, 0.5, 0.0); }) == Errc::UndefinedF);
  CHECK(domain_code([] { f_beta_from_pr(0.5, 0.5, -1.0); }) == Errc::UndefinedF);
}

TEST_CASE("f_beta from rates") {
  CHECK(close(f_beta_from_rates({0.8, 0.1}, ClassRatio(1.0), 1.0), 1.6 / 1.9));
  CHECK(close(f_beta_from_rates({0.8, 0.1}, ClassRatio(0.1), 1.0), 1.6 / 2.8));
  CHECK(f_beta_from_rates({1.0, 0.0}, ClassRatio(42.0), 1.0) == 1.0);
  CHECK(domain_code([] { f_beta_from_rates({0.0, 0.5}, ClassRatio(1.0), 1.0); }) ==
        Errc::UndefinedF);
}

TEST_CASE("both f_beta paths agree") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> tpr(1e-3, 1.0);
  std::uniform_real_distribution<double> fpr(0.0, 1.0);
  std::uniform_real_distribution<double> beta(0.1, 10.0);
  for (int i = 0; i < 400; ++i) {
    const OperatingPoint op{tpr(rng), fpr(rng)};
    const ClassRatio ratio{log_uniform(rng, 1e-2, 1e2)};
    const double b = beta(rng);
    const double direct = f_beta_from_rates(op, ratio, b);
    const double composed = f_beta_from_pr(precision_at_ratio(op, ratio), op.tpr, b);
    CHECK(close(direct, composed));
  }
}

TEST_CASE("precision gain") {
  CHECK(precision_gain({0.8, 0.1}) == 0.875);
  CHECK(precision_gain({0.6, 0.6}) == 0.0);
  CHECK(precision_gain({1.0, 0.0}) == 1.0);

  // definitional form at pi = 1/2: (prec - pi) / ((1 - pi) prec)
  const double prec = 800.0 / 900.0;
  CHECK(close(precision_gain({0.8, 0.1}), (prec - 0.5) / ((1.0 - 0.5) * prec)));

  CHECK(domain_code([] { precision_gain({0.0, 0.5}); }) == Errc::UndefinedGain);
}

TEST_CASE("precision gain does not depend on the ratio") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> tpr(1e-3, 1.0);
  std::uniform_real_distribution<double> fpr(0.0, 1.0);
  const double ratios[] = {0.01, 0.1, 1.0, 10.0, 100.0};
  for (int i = 0; i < 200; ++i) {
    const OperatingPoint op{tpr(rng), fpr(rng)};
    const double shared = precision_gain(op);
    for (double r : ratios) {
      const ClassRatio ratio{r};
      const double prec = precision_at_ratio(op, ratio);
      const double pi = ratio.pi();
      CHECK(close((prec - pi) / ((1.0 - pi) * prec), shared));
    }
  }
}

TEST_CASE("recall gain") {
  CHECK(recall_gain({0.8, 0.3}, ClassRatio(1.0)) == 0.75);
  CHECK(close(recall_gain({0.8, 0.0}, ClassRatio(0.1)), 0.975));
  CHECK(recall_gain({1.0, 0.5}, ClassRatio(37.0)) == 1.0);

  // definitional form: (rec - pi) / ((1 - pi) rec)
  CHECK(close(recall_gain({0.8, 0.3}, ClassRatio(1.0)), (0.8 - 0.5) / (0.5 * 0.8)));
  const double pi = ClassRatio(0.1).pi();
  CHECK(close(recall_gain({0.8, 0.0}, ClassRatio(0.1)), (0.8 - pi) / ((1.0 - pi) * 0.8)));

  CHECK(domain_code([] { recall_gain({0.0, 0.5}, ClassRatio(1.0)); }) == Errc::UndefinedGain);
}

TEST_CASE("both gain forms agree across ratios") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> tpr(1e-3, 1.0);
  for (int i = 0; i < 300; ++i) {
    const double t = tpr(rng);
    const ClassRatio ratio{test::log_uniform(rng, 1e-2, 1e2)};
    const double pi = ratio.pi();
    CHECK(close(recall_gain({t, 0.0}, ratio), (t - pi) / ((1.0 - pi) * t)));
  }
}

TEST_CASE("gain bounds and sign") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> tpr(1e-3, 1.0);
  std::uniform_real_distribution<double> fpr(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const OperatingPoint op{tpr(rng), fpr(rng)};
    const ClassRatio ratio{test::log_uniform(rng, 1e-2, 1e2)};
    const GainPoint g = gains(op, ratio);
    CHECK(g.prec_gain <= 1.0);
    CHECK(g.rec_gain <= 1.0);
    CHECK((g.prec_gain >= 0.0) == (op.tpr >= op.fpr));
  }
}
