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

#ifndef DIRICHLET_PRIVACY_PARALLEL_H_
#define DIRICHLET_PRIVACY_PARALLEL_H_

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>

namespace dirichlet_privacy {

enum class Execution { kSerial, kParallel };

// Calls body(i) for every i in [0, count). With kParallel and OpenMP enabled
// the calls are spread over threads; body must only write state owned by i.
inline void ForEachTask(int64_t count, Execution execution,
                        const std::function<void(int64_t)>& body) {
#ifdef _OPENMP
  if (execution == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int64_t i = 0; i < count; ++i) body(i);
    return;
  }
#endif
  (void)execution;
  for (int64_t i = 0; i < count; ++i) body(i);
}

struct SampleSummary {
  double mean = 0.0;
  double std_error = 0.0;
};

// Mean and standard error of the mean, accumulated in index order.
inline SampleSummary Summarize(std::span<const double> values) {
  const double n = static_cast<double>(values.size());
  if (values.empty()) return {};
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  if (values.size() < 2) return {mean, 0.0};
  double squares = 0.0;
  for (double v : values) squares += (v - mean) * (v - mean);
  return {mean, std::sqrt(squares / (n - 1.0) / n)};
}

}  // namespace dirichlet_privacy

#endif  // DIRICHLET_PRIVACY_PARALLEL_H_
