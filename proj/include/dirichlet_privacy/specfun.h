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

// Scalar special functions on the positive reals: log-gamma, digamma,
// trigamma and the multivariate log-beta function
//
//   log B(u) = sum_i log Gamma(u_i) - log Gamma(sum_i u_i).
//
// All functions shift small arguments upward with the functional recurrence
// and then evaluate the Bernoulli-number asymptotic series. log-gamma uses a
// zeta-series expansion near its roots at 1 and 2 so that relative accuracy
// holds there too. Negative arguments are not supported.

#ifndef DIRICHLET_PRIVACY_SPECFUN_H_
#define DIRICHLET_PRIVACY_SPECFUN_H_

#include <span>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace dirichlet_privacy {

// Returns OK iff `x` is finite and strictly positive. `name` is used in the
// error message.
absl::Status CheckPositiveReal(double x, const char* name);

// ln Gamma(x) for x > 0. Relative error below 1e-12 on [1e-6, 1e12].
absl::StatusOr<double> LogGamma(double x);

// psi(x) = d/dx ln Gamma(x).
absl::StatusOr<double> Digamma(double x);

// psi'(x). Positive, convex and strictly decreasing; satisfies
// 1/x + 1/(2x^2) < psi'(x) < 1/x + 1/x^2.
absl::StatusOr<double> Trigamma(double x);

// log B(u) for a vector of at least two positive entries.
absl::StatusOr<double> LogBeta(std::span<const double> u);

namespace internal {

// Unchecked variants for callers that have already validated their inputs.
// Behaviour is undefined (typically NaN) outside x > 0.
double LogGammaUnchecked(double x);
double DigammaUnchecked(double x);
double TrigammaUnchecked(double x);
double LogBetaUnchecked(std::span<const double> u);

}  // namespace internal
}  // namespace dirichlet_privacy

#endif  // DIRICHLET_PRIVACY_SPECFUN_H_
