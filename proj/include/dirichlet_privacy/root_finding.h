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

// One-dimensional solvers used by the accountant: a bracketed root finder
// (bisection safeguarding Illinois-style secant steps) and golden-section
// minimization of a unimodal function.

#ifndef DIRICHLET_PRIVACY_ROOT_FINDING_H_
#define DIRICHLET_PRIVACY_ROOT_FINDING_H_

#include <functional>

#include "absl/status/statusor.h"

namespace dirichlet_privacy {

struct RootFindingOptions {
  // Converged once the bracket is narrower than
  // x_tolerance + relative_x_tolerance * |x|.
  double x_tolerance = 1e-9;
  double relative_x_tolerance = 0.0;
  // Also converged once |f(x)| <= f_tolerance.
  double f_tolerance = 0.0;
  int max_iterations = 200;
};

struct RootResult {
  double x;
  double f;
  int iterations;
};

// Finds a root of `f` in [lo, hi]. f(lo) and f(hi) must have opposite signs;
// infinite values are allowed at the endpoints and inside the bracket (the
// solver bisects whenever a secant step is not finite). Returns
// InvalidArgument if the bracket does not contain a sign change.
absl::StatusOr<RootResult> FindRootBracketed(
    const std::function<double(double)>& f, double lo, double hi,
    const RootFindingOptions& options = {});

struct MinimizeResult {
  double x;
  double f;
  int iterations;
};

// Golden-section search for the minimizer of a unimodal `f` on [lo, hi],
// stopping once the bracket is narrower than `x_tolerance`.
absl::StatusOr<MinimizeResult> GoldenSectionMinimize(
    const std::function<double(double)>& f, double lo, double hi,
    double x_tolerance = 1e-9, int max_iterations = 500);

}  // namespace dirichlet_privacy

#endif  // DIRICHLET_PRIVACY_ROOT_FINDING_H_
