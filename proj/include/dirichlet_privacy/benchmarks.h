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

// Utility experiments for private histogram release.
//
// Each experiment is a grid of cells, each cell a number of independent
// trials. Trial t of a cell draws from a stream derived from the root seed
// and the cell coordinates, so the serial and the OpenMP execution produce
// bit-identical tables.

#ifndef DIRICHLET_PRIVACY_BENCHMARKS_H_
#define DIRICHLET_PRIVACY_BENCHMARKS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "dirichlet_privacy/accountant.h"
#include "dirichlet_privacy/parallel.h"

namespace dirichlet_privacy {

struct HistogramBenchmarkConfig {
  std::vector<int> dimensions;
  std::vector<double> epsilons;
  std::vector<int64_t> sample_sizes;
  int trials = 100;
  double lambda = 2.0;
  SensitivityBounds sensitivity{2.0, 1.0};
  // Laplace calibration: one count moves between two bins.
  double l1_sensitivity = 2.0;
  // Project the Gaussian and Laplace outputs onto the simplex.
  bool project = false;
};

inline constexpr const char* kDirichletMechanismName = "dirichlet";
inline constexpr const char* kGaussianMechanismName = "gaussian";
inline constexpr const char* kLaplaceMechanismName = "laplace";

struct HistogramRow {
  std::string mechanism;
  int d = 0;
  double epsilon = 0.0;
  int64_t n = 0;
  int trials = 0;
  double mean_l2_loss = 0.0;
  double std_error = 0.0;
};

// For every (d, eps, N) cell and every trial: draws p ~ Dir(1, ..., 1) and
// x ~ Multinomial(N, p), then releases x / N with the Dirichlet, Gaussian and
// Laplace mechanisms, all calibrated to (lambda, eps). Rows are ordered by
// d, eps, N and then mechanism (dirichlet, gaussian, laplace).
absl::StatusOr<std::vector<HistogramRow>> RunHistogramBenchmark(
    const HistogramBenchmarkConfig& config, uint64_t seed,
    Execution execution = Execution::kParallel);

// True if the Dirichlet mean loss is below the Gaussian one at the smallest N
// and above it at the largest, with exactly one sign change in between, for
// the given (d, eps). Fails if the table lacks that curve.
absl::StatusOr<bool> HasSingleCrossover(const std::vector<HistogramRow>& rows,
                                        int d, double epsilon);

struct KlUtilityConfig {
  std::vector<double> etas;
  std::vector<double> epsilons;
  std::vector<int64_t> sample_sizes;
  int dimension = 10;
  int draws = 500;
  double lambda = 2.0;
  SensitivityBounds sensitivity{2.0, 1.0};
  // Non-private prior alpha = (base_alpha, ..., base_alpha); at least 1.
  double base_alpha = 1.0;
};

struct KlUtilityRow {
  double eta = 0.0;
  double epsilon = 0.0;
  int64_t n = 0;
  int draws = 0;
  double alpha_prime = 0.0;
  double mean_kl = 0.0;
  double std_error = 0.0;
  double mean_bound = 0.0;
};

// For every (eta, eps, N) cell: draws p ~ Dir(eta, ..., eta) and
// X ~ Multinomial(N, p), and averages KL(Dir(X + alpha) || Dir(X + alpha'))
// together with the bound sum_i (alpha'_i - alpha_i)^2 / ((N + 1) p_i), where
// alpha' is the uniform prior solved for (lambda, eps). Draw k reuses the same
// p across N and eps, and the same X across eps.
absl::StatusOr<std::vector<KlUtilityRow>> RunKlUtilityBenchmark(
    const KlUtilityConfig& config, uint64_t seed,
    Execution execution = Execution::kParallel);

}  // namespace dirichlet_privacy

#endif  // DIRICHLET_PRIVACY_BENCHMARKS_H_
