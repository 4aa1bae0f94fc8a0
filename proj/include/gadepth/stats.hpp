// Copyright 2026 The gadepth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace gadepth {

/// Boxplot statistics of a sample. Quartiles use linear interpolation
/// between order statistics: the p-quantile sits at rank (n - 1) * p.
struct DistributionSummary {
  std::size_t n = 0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double iqr = 0.0;
  double lower_fence = 0.0;  // q1 - 1.5 iqr
  double upper_fence = 0.0;  // q3 + 1.5 iqr
  std::vector<double> outliers;  // ascending
};

inline constexpr const char* kQuartileMethod = "linear";

/// p-quantile of an ascending, non-empty sample.
inline double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("quantile of an empty sample");
  const double rank = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(rank));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = rank - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

inline DistributionSummary summarize_distribution(std::span<const double> values) {
  if (values.empty()) {
    throw std::invalid_argument("cannot summarize an empty distribution");
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  DistributionSummary s;
  s.n = sorted.size();
  s.median = quantile_sorted(sorted, 0.5);
  s.q1 = quantile_sorted(sorted, 0.25);
  s.q3 = quantile_sorted(sorted, 0.75);
  s.iqr = s.q3 - s.q1;
  s.lower_fence = s.q1 - 1.5 * s.iqr;
  s.upper_fence = s.q3 + 1.5 * s.iqr;
  for (double v : sorted) {
    if (v < s.lower_fence || v > s.upper_fence) s.outliers.push_back(v);
  }
  return s;
}

}  // namespace gadepth
