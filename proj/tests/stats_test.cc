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
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"

namespace dirichlet_privacy {
namespace {

// Counts x_i > y_j pairs directly, ties as one half.
double PairCountU(const std::vector<double>& x, const std::vector<double>& y) {
  double u = 0.0;
  for (double a : x) {
    for (double b : y) u += a > b ? 1.0 : (a == b ? 0.5 : 0.0);
  }
  return u;
}

// P[U >= observed] over all ways of relabelling the pooled sample.
double PermutationPValue(const std::vector<double>& x,
                         const std::vector<double>& y) {
  std::vector<double> pooled(x);
  pooled.insert(pooled.end(), y.begin(), y.end());
  const double observed = PairCountU(x, y);
  std::vector<bool> pick(pooled.size(), false);
  std::fill(pick.begin(), pick.begin() + x.size(), true);
  std::sort(pick.begin(), pick.end());
  int total = 0;
  int extreme = 0;
  do {
    std::vector<double> a, b;
    for (size_t i = 0; i < pooled.size(); ++i) (pick[i] ? a : b).push_back(pooled[i]);
    ++total;
    if (PairCountU(a, b) >= observed - 1e-12) ++extreme;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return static_cast<double>(extreme) / total;
}

TEST(MannWhitneyTest, StatisticMatchesPairCount) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> x(3 + trial % 9), y(2 + trial % 7);
    for (double& v : x) v = std::round(3.0 * normal(rng)) / 3.0;
    for (double& v : y) v = std::round(3.0 * normal(rng)) / 3.0;
    EXPECT_DOUBLE_EQ(MannWhitneyGreater(x, y)->u, PairCountU(x, y));
  }
}

TEST(MannWhitneyTest, ExactPValueMatchesPermutationEnumeration) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<double> x(1 + trial % 7), y(1 + (trial / 7) % 6);
    const double shift = 0.25 * (trial % 5);
    for (double& v : x) v = normal(rng) + shift;
    for (double& v : y) v = normal(rng);
    const RankTestResult result = *MannWhitneyGreater(x, y);
    ASSERT_TRUE(result.exact);
    EXPECT_NEAR(result.p_value, PermutationPValue(x, y), 1e-12);
  }
}

// P[U >= observed] over random relabellings of the pooled sample.
double MonteCarloPermutationPValue(const std::vector<double>& x,
                                   const std::vector<double>& y, int draws,
                                   std::mt19937_64& rng) {
  std::vector<double> pooled(x);
  pooled.insert(pooled.end(), y.begin(), y.end());
  const double observed = PairCountU(x, y);
  int extreme = 0;
  for (int k = 0; k < draws; ++k) {
    std::shuffle(pooled.begin(), pooled.end(), rng);
    const std::vector<double> a(pooled.begin(), pooled.begin() + x.size());
    const std::vector<double> b(pooled.begin() + x.size(), pooled.end());
    if (PairCountU(a, b) >= observed - 1e-12) ++extreme;
  }
  return static_cast<double>(extreme) / draws;
}

TEST(MannWhitneyTest, NormalApproximationWithTiesIsClose) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> level(0, 9);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> x(20), y(20);
    for (double& v : x) v = level(rng) + (trial % 3);
    for (double& v : y) v = level(rng);
    const RankTestResult result = *MannWhitneyGreater(x, y);
    ASSERT_FALSE(result.exact);
    const double oracle = MonteCarloPermutationPValue(x, y, 20000, rng);
    // Approximation error plus 4 Monte Carlo standard errors.
    EXPECT_NEAR(result.p_value, oracle,
                0.015 + 4.0 * std::sqrt(oracle * (1.0 - oracle) / 20000));
  }
}

TEST(MannWhitneyTest, SeparatedSamples) {
  std::vector<double> high(20), low(20);
  std::iota(low.begin(), low.end(), 0.0);
  std::iota(high.begin(), high.end(), 100.0);
  const RankTestResult up = *MannWhitneyGreater(high, low);
  EXPECT_EQ(up.u, 400.0);
  // One arrangement out of C(40, 20).
  EXPECT_NEAR(up.p_value, 1.0 / 137846528820.0, 1e-20);
  EXPECT_NEAR(MannWhitneyGreater(low, high)->p_value, 1.0, 1e-12);
}

TEST(MannWhitneyTest, NullPValuesAreRoughlyUniform) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> normal;
  int rejections = 0;
  const int trials = 2000;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<double> x(20), y(20);
    for (double& v : x) v = normal(rng);
    for (double& v : y) v = normal(rng);
    if (MannWhitneyGreater(x, y)->p_value < 0.05) ++rejections;
  }
  // Binomial(2000, 0.05): mean 100, sd about 9.7.
  EXPECT_NEAR(rejections, 100, 40);
}

TEST(MannWhitneyTest, RejectsEmptySamples) {
  EXPECT_FALSE(MannWhitneyGreater(std::vector<double>{}, std::vector<double>{1.0}).ok());
  const RankTestResult constant =
      *MannWhitneyGreater(std::vector<double>{1.0, 1.0}, std::vector<double>{1.0});
  EXPECT_EQ(constant.p_value, 1.0);
}

}  // namespace
}  // namespace dirichlet_privacy
