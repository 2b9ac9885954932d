#pragma once

#include <cstdint>
#include <span>

namespace kout {

/** Summary of one Monte Carlo cell.  variance is the unbiased (n-1)
 *  estimator, se = sqrt(variance / count), and quantiles are type-1
 *  (inverse empirical CDF) order statistics. */
struct Summary {
  std::uint64_t count = 0;
  double mean = 0.0;
  double variance = 0.0;
  double se = 0.0;
  double p50 = 0.0;
  double p90 = 0.0;
  double p99 = 0.0;
  double min = 0.0;
  double max = 0.0;
};

/** Summarizes values in their given order (sums are order-dependent in
 *  floating point, so callers pass trials in a fixed order). */
Summary summarize(std::span<const double> values);

/** Type-1 quantile of an ascending sample: the ceil(q*n)-th order
 *  statistic, clamped to the sample.  q must be in [0, 1]. */
double quantile_sorted(std::span<const double> sorted, double q);

/** Standard error of an empirical proportion: sqrt(p(1-p)/trials). */
double proportion_se(double p, std::uint64_t trials);

}  // namespace kout
