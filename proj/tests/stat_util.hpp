#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

// Small statistics helpers shared by the walk tests.

namespace statutil {

// Upper critical value of the chi-square distribution at alpha = 0.001.
// Exact table for df 1..15, Wilson-Hilferty cube approximation above.
inline double chi2_crit_001(int df) {
  static const double table[] = {10.828, 13.816, 16.266, 18.467, 20.515,
                                 22.458, 24.322, 26.124, 27.877, 29.588,
                                 31.264, 32.909, 34.528, 36.123, 37.697};
  if (df >= 1 && df <= 15) return table[df - 1];
  const double z = 3.090232;  // N(0,1) quantile at 0.999
  const double a = 2.0 / (9.0 * df);
  const double c = 1.0 - a + z * std::sqrt(a);
  return df * c * c * c;
}

// Pearson chi-square statistic of observed counts against equal expected
// counts.
inline double chi2_uniform(const std::vector<std::size_t>& observed,
                           double total) {
  const double expect = total / static_cast<double>(observed.size());
  double stat = 0;
  for (std::size_t o : observed) {
    const double d = static_cast<double>(o) - expect;
    stat += d * d / expect;
  }
  return stat;
}

inline double tv_distance(const std::vector<double>& p,
                          const std::vector<double>& q) {
  double s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::fabs(p[i] - q[i]);
  return s / 2;
}

}  // namespace statutil
