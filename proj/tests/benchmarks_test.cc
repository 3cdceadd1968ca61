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

#include "dirichlet_privacy/benchmarks.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gtest/gtest.h"

namespace dirichlet_privacy {
namespace {

// The sandbox may expose a single core; force several threads so that the
// parallel path actually interleaves tasks.
class ThreadedTest : public ::testing::Test {
 protected:
  void SetUp() override {
#ifdef _OPENMP
    omp_set_num_threads(4);
#endif
  }
};

using ForEachTaskTest = ThreadedTest;

TEST_F(ForEachTaskTest, VisitsEveryIndexOnce) {
  for (Execution execution : {Execution::kSerial, Execution::kParallel}) {
    std::vector<std::atomic<int>> hits(1000);
    ForEachTask(1000, execution, [&](int64_t i) { hits[i].fetch_add(1); });
    for (const auto& h : hits) ASSERT_EQ(h.load(), 1);
  }
  int calls = 0;
  ForEachTask(0, Execution::kParallel, [&](int64_t) { ++calls; });
  EXPECT_EQ(calls, 0);
}

TEST(SummarizeTest, MeanAndStandardError) {
  const std::vector<double> v = {1.0, 2.0, 3.0, 4.0};
  const SampleSummary s = Summarize(v);
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  // Sample variance 5/3, divided by n = 4.
  EXPECT_DOUBLE_EQ(s.std_error, std::sqrt(5.0 / 12.0));
  EXPECT_EQ(Summarize(std::vector<double>{7.0}).std_error, 0.0);
  EXPECT_EQ(Summarize(std::vector<double>{}).mean, 0.0);
}

HistogramBenchmarkConfig SmallHistogramConfig() {
  HistogramBenchmarkConfig config;
  config.dimensions = {5, 40};
  config.epsilons = {0.1, 1.0};
  config.sample_sizes = {100, 10000};
  config.trials = 30;
  return config;
}

bool SameRows(const std::vector<HistogramRow>& a,
              const std::vector<HistogramRow>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].mechanism != b[i].mechanism || a[i].d != b[i].d ||
        a[i].epsilon != b[i].epsilon || a[i].n != b[i].n ||
        a[i].mean_l2_loss != b[i].mean_l2_loss ||
        a[i].std_error != b[i].std_error) {
      return false;
    }
  }
  return true;
}

using HistogramBenchmarkTest = ThreadedTest;

TEST_F(HistogramBenchmarkTest, SerialAndParallelAreBitIdentical) {
  const auto config = SmallHistogramConfig();
  const auto serial = *RunHistogramBenchmark(config, 123, Execution::kSerial);
  const auto parallel = *RunHistogramBenchmark(config, 123, Execution::kParallel);
  EXPECT_TRUE(SameRows(serial, parallel));
  const auto again = *RunHistogramBenchmark(config, 123, Execution::kParallel);
  EXPECT_TRUE(SameRows(parallel, again));
  const auto other = *RunHistogramBenchmark(config, 124, Execution::kParallel);
  EXPECT_FALSE(SameRows(parallel, other));
}

TEST_F(HistogramBenchmarkTest, RowLayout) {
  const auto config = SmallHistogramConfig();
  const auto rows = *RunHistogramBenchmark(config, 1);
  ASSERT_EQ(rows.size(), 2u * 2u * 2u * 3u);
  size_t i = 0;
  for (int d : config.dimensions) {
    for (double eps : config.epsilons) {
      for (int64_t n : config.sample_sizes) {
        for (const char* name : {kDirichletMechanismName, kGaussianMechanismName,
                                 kLaplaceMechanismName}) {
          EXPECT_EQ(rows[i].mechanism, name);
          EXPECT_EQ(rows[i].d, d);
          EXPECT_EQ(rows[i].epsilon, eps);
          EXPECT_EQ(rows[i].n, n);
          EXPECT_EQ(rows[i].trials, config.trials);
          EXPECT_GT(rows[i].mean_l2_loss, 0.0);
          EXPECT_GT(rows[i].std_error, 0.0);
          ++i;
        }
      }
    }
  }
}

TEST(HistogramBenchmarkStatsTest, GaussianLossMatchesChiMean) {
  HistogramBenchmarkConfig config;
  config.dimensions = {20};
  config.epsilons = {1.0};
  config.sample_sizes = {1000};
  config.trials = 2000;
  const auto rows = *RunHistogramBenchmark(config, 7, Execution::kSerial);
  const HistogramRow& gaussian = rows[1];
  ASSERT_EQ(gaussian.mechanism, kGaussianMechanismName);
  // ||Z|| = sigma * chi_d, E chi_d = sqrt(2) Gamma((d + 1) / 2) / Gamma(d / 2).
  const double sigma = std::sqrt(2.0 * 2.0 / (2.0 * 1e6 * 1.0));
  const double chi_mean =
      std::sqrt(2.0) * std::exp(std::lgamma(10.5) - std::lgamma(10.0));
  EXPECT_NEAR(gaussian.mean_l2_loss, sigma * chi_mean, 5.0 * gaussian.std_error);
}

TEST(HistogramBenchmarkStatsTest, LossesShrinkWithSampleSize) {
  HistogramBenchmarkConfig config;
  config.dimensions = {10};
  config.epsilons = {1.0};
  config.sample_sizes = {100, 1000, 10000};
  config.trials = 200;
  const auto rows = *RunHistogramBenchmark(config, 8);
  for (int m = 0; m < 3; ++m) {
    EXPECT_GT(rows[m].mean_l2_loss, rows[3 + m].mean_l2_loss);
    EXPECT_GT(rows[3 + m].mean_l2_loss, rows[6 + m].mean_l2_loss);
  }
}

TEST(HistogramBenchmarkStatsTest, ProjectionNeverIncreasesBaselineLoss) {
  auto config = SmallHistogramConfig();
  const auto raw = *RunHistogramBenchmark(config, 9);
  config.project = true;
  const auto projected = *RunHistogramBenchmark(config, 9);
  ASSERT_EQ(raw.size(), projected.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].mechanism == kDirichletMechanismName) {
      EXPECT_EQ(raw[i].mean_l2_loss, projected[i].mean_l2_loss);
    } else {
      EXPECT_LE(projected[i].mean_l2_loss, raw[i].mean_l2_loss);
    }
  }
}

TEST(HistogramBenchmarkStatsTest, RejectsBadConfigs) {
  auto config = SmallHistogramConfig();
  config.dimensions.clear();
  EXPECT_FALSE(RunHistogramBenchmark(config, 1).ok());
  config = SmallHistogramConfig();
  config.epsilons = {};
  EXPECT_FALSE(RunHistogramBenchmark(config, 1).ok());
  config = SmallHistogramConfig();
  config.epsilons = {-1.0};
  EXPECT_FALSE(RunHistogramBenchmark(config, 1).ok());
  config = SmallHistogramConfig();
  config.sample_sizes = {0};
  EXPECT_FALSE(RunHistogramBenchmark(config, 1).ok());
  config = SmallHistogramConfig();
  config.trials = 1;
  EXPECT_FALSE(RunHistogramBenchmark(config, 1).ok());
  config = SmallHistogramConfig();
  config.dimensions = {1};
  EXPECT_FALSE(RunHistogramBenchmark(config, 1).ok());
}

std::vector<HistogramRow> Curves(const std::vector<double>& dirichlet,
                                 const std::vector<double>& gaussian) {
  std::vector<HistogramRow> rows;
  for (size_t i = 0; i < dirichlet.size(); ++i) {
    const int64_t n = static_cast<int64_t>(std::pow(10.0, i + 2));
    rows.push_back({kDirichletMechanismName, 10, 0.5, n, 5, dirichlet[i], 0.0});
    rows.push_back({kGaussianMechanismName, 10, 0.5, n, 5, gaussian[i], 0.0});
  }
  return rows;
}

TEST(HasSingleCrossoverTest, ClassifiesCurves) {
  EXPECT_TRUE(*HasSingleCrossover(Curves({1, 2, 3, 4}, {2, 3, 2, 1}), 10, 0.5));
  EXPECT_FALSE(*HasSingleCrossover(Curves({3, 2, 3, 4}, {2, 3, 2, 1}), 10, 0.5));
  EXPECT_FALSE(*HasSingleCrossover(Curves({1, 3, 1, 4}, {2, 2, 2, 1}), 10, 0.5));
  EXPECT_FALSE(*HasSingleCrossover(Curves({1, 1, 1, 1}, {2, 2, 2, 2}), 10, 0.5));
  EXPECT_FALSE(HasSingleCrossover(Curves({1, 2}, {2, 1}), 11, 0.5).ok());
  EXPECT_FALSE(HasSingleCrossover(Curves({1}, {2}), 10, 0.5).ok());
}

KlUtilityConfig SmallKlConfig() {
  KlUtilityConfig config;
  config.etas = {0.5, 10.0};
  config.epsilons = {0.1, 1.0};
  config.sample_sizes = {100, 1000, 10000};
  config.draws = 200;
  return config;
}

using KlUtilityBenchmarkTest = ThreadedTest;

TEST_F(KlUtilityBenchmarkTest, SerialAndParallelAreBitIdentical) {
  const auto config = SmallKlConfig();
  const auto serial = *RunKlUtilityBenchmark(config, 5, Execution::kSerial);
  const auto parallel = *RunKlUtilityBenchmark(config, 5, Execution::kParallel);
  ASSERT_EQ(serial.size(), parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].mean_kl, parallel[i].mean_kl);
    EXPECT_EQ(serial[i].mean_bound, parallel[i].mean_bound);
    EXPECT_EQ(serial[i].std_error, parallel[i].std_error);
  }
}

TEST_F(KlUtilityBenchmarkTest, BoundDominatesAndTrendsHold) {
  const auto config = SmallKlConfig();
  const auto rows = *RunKlUtilityBenchmark(config, 6);
  ASSERT_EQ(rows.size(), 2u * 2u * 3u);
  for (const KlUtilityRow& row : rows) {
    const double expected_alpha = std::max(
        1.0, *AlphaMinForTarget({2.0, row.epsilon}, SensitivityBounds{2.0, 1.0}));
    EXPECT_EQ(row.alpha_prime, expected_alpha);
    EXPECT_LE(row.mean_kl, row.mean_bound);
    EXPECT_GT(row.mean_kl, 0.0);
  }
  // Layout (eta, eps, N): KL falls with N and with eps.
  for (size_t h = 0; h < 2; ++h) {
    for (size_t e = 0; e < 2; ++e) {
      const size_t base = (h * 2 + e) * 3;
      EXPECT_GT(rows[base].mean_kl, rows[base + 1].mean_kl);
      EXPECT_GT(rows[base + 1].mean_kl, rows[base + 2].mean_kl);
    }
    for (size_t ni = 0; ni < 3; ++ni) {
      EXPECT_GT(rows[h * 6 + ni].mean_kl, rows[h * 6 + 3 + ni].mean_kl);
    }
  }
  // Sparser p (smaller eta) costs more.
  for (size_t i = 0; i < 6; ++i) {
    EXPECT_GT(rows[i].mean_kl, rows[6 + i].mean_kl);
  }
}

TEST(KlUtilityBenchmarkValidationTest, RejectsBadConfigs) {
  auto config = SmallKlConfig();
  config.etas = {};
  EXPECT_FALSE(RunKlUtilityBenchmark(config, 1).ok());
  config = SmallKlConfig();
  config.etas = {0.0};
  EXPECT_FALSE(RunKlUtilityBenchmark(config, 1).ok());
  config = SmallKlConfig();
  config.base_alpha = 0.5;
  EXPECT_FALSE(RunKlUtilityBenchmark(config, 1).ok());
  config = SmallKlConfig();
  config.draws = 1;
  EXPECT_FALSE(RunKlUtilityBenchmark(config, 1).ok());
  config = SmallKlConfig();
  config.dimension = 1;
  EXPECT_FALSE(RunKlUtilityBenchmark(config, 1).ok());
}

}  // namespace
}  // namespace dirichlet_privacy
