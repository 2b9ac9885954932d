#include "kout/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "kout/errors.hpp"

namespace kout {

double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) {
    throw BadParameters("quantile_sorted: empty sample");
  }
  if (!(q >= 0.0 && q <= 1.0)) {
    throw BadParameters("quantile_sorted: q must be in [0, 1]");
  }
  double rank = std::ceil(q * static_cast<double>(sorted.size()));
  std::size_t index = rank < 1.0 ? 0 : static_cast<std::size_t>(rank) - 1;
  return sorted[std::min(index, sorted.size() - 1)];
}

Summary summarize(std::span<const double> values) {
  Summary s;
  s.count = values.size();
  if (values.empty()) return s;

  double sum = 0.0;
  for (double x : values) sum += x;
  s.mean = sum / static_cast<double>(values.size());

  if (values.size() > 1) {
    double ss = 0.0;
    for (double x : values) {
      double d = x - s.mean;
      ss += d * d;
    }
    s.variance = ss / static_cast<double>(values.size() - 1);
    s.se = std::sqrt(s.variance / static_cast<double>(values.size()));
  }

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  s.min = sorted.front();
  s.max = sorted.back();
  s.p50 = quantile_sorted(sorted, 0.5);
  s.p90 = quantile_sorted(sorted, 0.9);
  s.p99 = quantile_sorted(sorted, 0.99);
  return s;
}

double proportion_se(double p, std::uint64_t trials) {
  if (trials == 0) return 0.0;
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

}  // namespace kout
