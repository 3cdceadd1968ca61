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

// Privacy accounting for Dirichlet posterior sampling.
//
// A single draw from Dir(r*x + alpha) is (lambda, eps)-RDP with
//
//   eps = 1/2 * lambda * r^2 * D2sq * trigamma(alpha_min - g(lambda)),
//   g(lambda) = (lambda - 1) * r * Dinf,
//
// for every order lambda in (1, alpha_min / (r * Dinf) + 1). Here D2sq and
// Dinf bound the squared l2 and the l-infinity change of x between
// neighboring datasets. This file evaluates the guarantee, inverts it for
// alpha_min or r, converts it to (eps, delta)-DP and composes guarantees.

#ifndef DIRICHLET_PRIVACY_ACCOUNTANT_H_
#define DIRICHLET_PRIVACY_ACCOUNTANT_H_

#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace dirichlet_privacy {

// Returned by RdpEpsilon for orders outside the domain of the guarantee.
inline constexpr double kInfiniteEpsilon =
    std::numeric_limits<double>::infinity();

// Worst-case change of the statistic between neighboring datasets.
struct SensitivityBounds {
  double delta2_sq = 0.0;  // squared l2 sensitivity
  double delta_inf = 0.0;  // l-infinity sensitivity

  // Requires finite, nonnegative entries with delta_inf^2 <= delta2_sq.
  static absl::StatusOr<SensitivityBounds> Create(double delta2_sq,
                                                  double delta_inf);
  // Additionally requires delta2_sq <= dimension * delta_inf^2.
  static absl::StatusOr<SensitivityBounds> CreateForDimension(
      double delta2_sq, double delta_inf, size_t dimension);
};

struct RdpGuarantee {
  double lambda = 2.0;
  double epsilon = 0.0;

  // lambda > 1 and finite; epsilon finite and nonnegative. Zero budgets are
  // admitted so that no-op releases compose as identities.
  static absl::StatusOr<RdpGuarantee> Create(double lambda, double epsilon);
};

struct ApproxDpGuarantee {
  double epsilon = 0.0;
  // Clamped to at most 1. Zero only when the mechanism ignores the data.
  double delta = 1.0;
  // Order at which delta is attained; infinite when delta is exactly zero.
  double lambda = 0.0;
  // True when the minimized bound is >= 1 and hence says nothing.
  bool vacuous = false;
};

// Dirichlet prior alpha together with the concentration multiplier r.
class PriorSpec {
 public:
  static absl::StatusOr<PriorSpec> Create(std::vector<double> alpha,
                                          double r = 1.0);
  // alpha = (value, ..., value) in `dimension` coordinates.
  static absl::StatusOr<PriorSpec> Uniform(double value, size_t dimension,
                                           double r = 1.0);

  std::span<const double> alpha() const { return alpha_; }
  size_t dimension() const { return alpha_.size(); }
  double alpha_min() const { return alpha_min_; }
  double alpha0() const { return alpha0_; }
  double r() const { return r_; }

 private:
  PriorSpec(std::vector<double> alpha, double alpha_min, double alpha0,
            double r)
      : alpha_(std::move(alpha)), alpha_min_(alpha_min), alpha0_(alpha0),
        r_(r) {}

  std::vector<double> alpha_;
  double alpha_min_;
  double alpha0_;
  double r_;
};

// (lambda - 1) * r * delta_inf.
absl::StatusOr<double> GOfLambda(double lambda, double delta_inf, double r);

// Supremum of the admissible orders, alpha_min / (r * delta_inf) + 1.
// Infinite when delta_inf is zero.
double MaxOrder(double alpha_min, double delta_inf, double r);

// The RDP epsilon at order `lambda`, or kInfiniteEpsilon if lambda is at or
// beyond MaxOrder. Zero whenever delta_inf is zero.
absl::StatusOr<double> RdpEpsilon(double lambda,
                                  const SensitivityBounds& sensitivity,
                                  double alpha_min, double r = 1.0);
absl::StatusOr<double> RdpEpsilon(double lambda,
                                  const SensitivityBounds& sensitivity,
                                  const PriorSpec& prior);

// The alpha_min at which RdpEpsilon equals target.epsilon, found by root
// finding on trigamma. Requires delta2_sq > 0 and a positive budget.
absl::StatusOr<double> AlphaMinForTarget(const RdpGuarantee& target,
                                         const SensitivityBounds& sensitivity,
                                         double r = 1.0);

// lambda * r^2 * delta2_sq / (2 eps) + g(lambda) + 1, which follows from
// trigamma(t) < 1/t + 1/t^2 < 1/(t - 1). Never smaller than AlphaMinForTarget.
absl::StatusOr<double> AlphaMinClosedForm(const RdpGuarantee& target,
                                          const SensitivityBounds& sensitivity,
                                          double r = 1.0);

// The r at which RdpEpsilon equals target.epsilon for a fixed alpha_min. The
// guarantee is increasing in r on (0, alpha_min / ((lambda-1) delta_inf)),
// so the solution is unique.
absl::StatusOr<double> RForTarget(const RdpGuarantee& target,
                                  const SensitivityBounds& sensitivity,
                                  double alpha_min);

// Log of the conversion bound at order lambda:
//   (lambda-1)(eps_hat(lambda) - eps) + (lambda-1) log(lambda-1)
//       - lambda log(lambda).
// Infinite outside the admissible orders.
absl::StatusOr<double> ConversionLogDelta(double lambda, double epsilon,
                                          const SensitivityBounds& sensitivity,
                                          double alpha_min, double r = 1.0);

// (eps, delta)-DP for a single draw, with delta minimized over the order by
// golden-section search on ConversionLogDelta (which is strictly convex).
absl::StatusOr<ApproxDpGuarantee> RdpToApproxDp(
    double epsilon, const SensitivityBounds& sensitivity, double alpha_min,
    double r = 1.0);
absl::StatusOr<ApproxDpGuarantee> RdpToApproxDp(
    double epsilon, const SensitivityBounds& sensitivity,
    const PriorSpec& prior);

// Sequential composition: (min(lambda1, lambda2), eps1 + eps2).
RdpGuarantee Compose(const RdpGuarantee& a, const RdpGuarantee& b);

}  // namespace dirichlet_privacy

#endif  // DIRICHLET_PRIVACY_ACCOUNTANT_H_
