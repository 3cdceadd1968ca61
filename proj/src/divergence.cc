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

#include "dirichlet_privacy/divergence.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_format.h"
#include "dirichlet_privacy/specfun.h"

namespace dirichlet_privacy {
namespace {

using internal::DigammaUnchecked;
using internal::LogGammaUnchecked;

absl::Status CheckSameDimension(const DirichletParams& p,
                                const DirichletParams& q) {
  if (p.dimension() != q.dimension()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("dimension mismatch: %d vs %d", p.dimension(),
                        q.dimension()));
  }
  return absl::OkStatus();
}

// G(a, b) + H(a, b) where
//   G = (l-1) (log Gamma(b) - log Gamma(a)),
//   H = log Gamma(a + (l-1)(a-b)) - log Gamma(a).
// Zero when a == b. `shifted` is a + (l-1)(a-b), already known positive.
double RenyiTerm(double a, double b, double shifted, double order_minus_one) {
  if (a == b) return 0.0;
  const double log_gamma_a = LogGammaUnchecked(a);
  return order_minus_one * (LogGammaUnchecked(b) - log_gamma_a) +
         (LogGammaUnchecked(shifted) - log_gamma_a);
}

}  // namespace

absl::StatusOr<double> RenyiDivergence(const DirichletParams& p,
                                       const DirichletParams& q,
                                       double lambda) {
  if (absl::Status s = CheckSameDimension(p, q); !s.ok()) return s;
  if (!(lambda > 1.0) || !std::isfinite(lambda)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("Renyi order must be finite and > 1, got %g", lambda));
  }
  const double order_minus_one = lambda - 1.0;
  double log_moment = 0.0;
  for (size_t i = 0; i < p.dimension(); ++i) {
    const double shifted = p[i] + order_minus_one * (p[i] - q[i]);
    if (!(shifted > 0.0) || !std::isfinite(shifted)) return kInfiniteDivergence;
    log_moment += RenyiTerm(p[i], q[i], shifted, order_minus_one);
  }
  const double shifted_sum = p.sum() + order_minus_one * (p.sum() - q.sum());
  log_moment -= RenyiTerm(p.sum(), q.sum(), shifted_sum, order_minus_one);
  return std::max(0.0, log_moment / order_minus_one);
}

absl::StatusOr<double> KlDivergence(const DirichletParams& p,
                                    const DirichletParams& q) {
  if (absl::Status s = CheckSameDimension(p, q); !s.ok()) return s;
  const double digamma_sum = DigammaUnchecked(p.sum());
  double kl = 0.0;
  for (size_t i = 0; i < p.dimension(); ++i) {
    if (p[i] == q[i]) continue;
    kl += LogGammaUnchecked(q[i]) - LogGammaUnchecked(p[i]) +
          (p[i] - q[i]) * (DigammaUnchecked(p[i]) - digamma_sum);
  }
  if (p.sum() != q.sum()) {
    kl += LogGammaUnchecked(p.sum()) - LogGammaUnchecked(q.sum());
  }
  return std::max(0.0, kl);
}

absl::StatusOr<double> DensityLogRatio(const DirichletParams& p,
                                       const DirichletParams& q,
                                       std::span<const double> y) {
  if (absl::Status s = CheckSameDimension(p, q); !s.ok()) return s;
  if (y.size() != p.dimension()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("point has dimension %d, distributions have %d",
                        y.size(), p.dimension()));
  }
  double total = 0.0;
  for (double v : y) {
    if (!(v > 0.0 && v < 1.0)) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "point must lie strictly inside the simplex, got coordinate %g", v));
    }
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    return absl::InvalidArgumentError(
        absl::StrFormat("point coordinates sum to %.17g, not 1", total));
  }
  double ratio = internal::LogBetaUnchecked(q.values()) -
                 internal::LogBetaUnchecked(p.values());
  for (size_t i = 0; i < y.size(); ++i) {
    ratio += (p[i] - q[i]) * std::log(y[i]);
  }
  return ratio;
}

}  // namespace dirichlet_privacy
