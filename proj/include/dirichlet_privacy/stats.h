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

// Two-sample rank test used to compare reward distributions.

#ifndef DIRICHLET_PRIVACY_STATS_H_
#define DIRICHLET_PRIVACY_STATS_H_

#include <span>

#include "absl/status/statusor.h"

namespace dirichlet_privacy {

struct RankTestResult {
  // Mann-Whitney U of the first sample: #{(i, j) : x_i > y_j} plus half the
  // ties.
  double u = 0.0;
  // P[U >= u] under the null of exchangeable samples.
  double p_value = 1.0;
  // Whether p_value is exact (no ties) or from the normal approximation.
  bool exact = false;
};

// One-sided Mann-Whitney test of "x tends to exceed y". Exact when there are
// no ties; otherwise the tie-corrected normal approximation with continuity
// correction.
absl::StatusOr<RankTestResult> MannWhitneyGreater(std::span<const double> x,
                                                  std::span<const double> y);

}  // namespace dirichlet_privacy

#endif  // DIRICHLET_PRIVACY_STATS_H_
