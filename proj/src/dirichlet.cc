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

#include "dirichlet_privacy/dirichlet.h"

#include <cmath>

#include "absl/strings/str_format.h"
#include "dirichlet_privacy/specfun.h"

namespace dirichlet_privacy {

absl::StatusOr<DirichletParams> DirichletParams::Create(std::vector<double> u) {
  if (u.size() < 2) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "Dirichlet dimension must be at least 2, got %d", u.size()));
  }
  double sum = 0.0;
  for (double v : u) {
    if (absl::Status s = CheckPositiveReal(v, "Dirichlet parameter"); !s.ok()) {
      return s;
    }
    sum += v;
  }
  if (!std::isfinite(sum)) {
    return absl::InvalidArgumentError("Dirichlet parameters overflow");
  }
  return DirichletParams(std::move(u), sum);
}

absl::StatusOr<DirichletParams> DirichletParams::Posterior(
    std::span<const double> counts, std::span<const double> alpha, double r) {
  if (counts.size() != alpha.size()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("counts have dimension %d but prior has %d",
                        counts.size(), alpha.size()));
  }
  if (absl::Status s = CheckPositiveReal(r, "concentration multiplier r");
      !s.ok()) {
    return s;
  }
  std::vector<double> u(counts.size());
  for (size_t i = 0; i < counts.size(); ++i) {
    if (!(counts[i] >= 0.0) || !std::isfinite(counts[i])) {
      return absl::InvalidArgumentError(
          absl::StrFormat("count %d must be finite and nonnegative", i));
    }
    if (absl::Status s = CheckPositiveReal(alpha[i], "prior parameter");
        !s.ok()) {
      return s;
    }
    u[i] = r * counts[i] + alpha[i];
  }
  return Create(std::move(u));
}

absl::StatusOr<SimplexPoint> SimplexPoint::Create(std::vector<double> probs) {
  if (probs.size() < 2) {
    return absl::InvalidArgumentError("simplex point needs dimension >= 2");
  }
  double sum = 0.0;
  for (double p : probs) {
    if (!(p > 0.0) || !std::isfinite(p)) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "simplex point entries must be in (0, 1], got %g", p));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSimplexTolerance) {
    return absl::InvalidArgumentError(
        absl::StrFormat("simplex point sums to %.17g", sum));
  }
  return SimplexPoint(std::move(probs));
}

}  // namespace dirichlet_privacy
