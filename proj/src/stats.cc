// Copyright 2026 The Dirichlet Privacy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dirichlet_privacy/stats.h"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace dirichlet_privacy {
namespace {

// Number of arrangements of m x's and n y's with statistic exactly u, for
// u = 0..m*n, via the recursion c(m, n, u) = c(m-1, n, u-n) + c(m, n-1, u).
// Returned as probabilities to stay in range for moderate sample sizes.
std::vector<double> ExactUDistribution(int m, int n) {
  // table[j][u] holds the distribution for (i, j) at the current i.
  std::vector<std::vector<double>> table(n + 1);
  for (int j = 0; j <= n; ++j) table[j] = {1.0};
  for (int i = 1; i <= m; ++i) {
    std::vector<std::vector<double>> next(n + 1);
    next[0] = {1.0};
    for (int j = 1; j <= n; ++j) {
      // Largest element is an x (weight i) contributing j, or a y (weight j).
      const double wx = static_cast<double>(i) / (i + j);
      const double wy = static_cast<double>(j) / (i + j);
      std::vector<double> dist(i * j + 1, 0.0);
      const std::vector<double>& from_x = table[j];
      const std::vector<double>& from_y = next[j - 1];
      for (size_t u = 0; u < from_x.size(); ++u) dist[u + j] += wx * from_x[u];
      for (size_t u = 0; u < from_y.size(); ++u) dist[u] += wy * from_y[u];
      next[j] = std::move(dist);
    }
    table = std::move(next);
  }
  return table[n];
}

}  // namespace

absl::StatusOr<RankTestResult> MannWhitneyGreater(std::span<const double> x,
                                                  std::span<const double> y) {
  if (x.empty() || y.empty()) {
    return absl::InvalidArgumentError("both samples must be nonempty");
  }
  const double m = static_cast<double>(x.size());
  const double n = static_cast<double>(y.size());

  // Midranks of the pooled sample.
  std::vector<std::pair<double, int>> pooled;
  for (double v : x) pooled.emplace_back(v, 0);
  for (double v : y) pooled.emplace_back(v, 1);
  std::sort(pooled.begin(), pooled.end());
  double rank_sum_x = 0.0;
  double tie_term = 0.0;
  bool ties = false;
  for (size_t i = 0; i < pooled.size();) {
    size_t j = i;
    while (j < pooled.size() && pooled[j].first == pooled[i].first) ++j;
    const double t = static_cast<double>(j - i);
    if (t > 1) ties = true;
    tie_term += t * t * t - t;
    const double midrank = 0.5 * (static_cast<double>(i + 1) + j);
    for (size_t k = i; k < j; ++k) {
      if (pooled[k].second == 0) rank_sum_x += midrank;
    }
    i = j;
  }

  RankTestResult result;
  result.u = rank_sum_x - m * (m + 1.0) / 2.0;
  if (!ties) {
    const std::vector<double> dist =
        ExactUDistribution(static_cast<int>(x.size()), static_cast<int>(y.size()));
    double tail = 0.0;
    for (size_t u = static_cast<size_t>(std::llround(result.u)); u < dist.size();
         ++u) {
      tail += dist[u];
    }
    result.p_value = std::min(1.0, tail);
    result.exact = true;
    return result;
  }
  const double total = m + n;
  const double variance =
      m * n / 12.0 * ((total + 1.0) - tie_term / (total * (total - 1.0)));
  if (!(variance > 0.0)) {
    result.p_value = 1.0;
    return result;
  }
  const double z = (result.u - m * n / 2.0 - 0.5) / std::sqrt(variance);
  result.p_value = 0.5 * std::erfc(z / std::sqrt(2.0));
  return result;
}

}  // namespace dirichlet_privacy
