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

// Exact divergences between Dirichlet distributions.
//
// The Renyi divergence has the closed form
//
//   D_l(Dir(u) || Dir(u')) = log B(u') - log B(u)
//       + [log B(u + (l-1)(u - u')) - log B(u)] / (l - 1),
//
// which is finite iff the shifted vector u + (l-1)(u - u') is positive. It is
// evaluated coordinate by coordinate so that coordinates with u_i = u'_i
// contribute exactly zero, which keeps the result accurate for large
// concentrations. These functions are the reference against which the RDP
// guarantees of the accountant are validated.

#ifndef DIRICHLET_PRIVACY_DIVERGENCE_H_
#define DIRICHLET_PRIVACY_DIVERGENCE_H_

#include <limits>
#include <span>

#include "absl/status/statusor.h"
#include "dirichlet_privacy/dirichlet.h"

namespace dirichlet_privacy {

// Returned by RenyiDivergence when the order-lambda divergence is infinite.
// This is a value, not an error: callers probe orders near the edge of the
// finite domain.
inline constexpr double kInfiniteDivergence =
    std::numeric_limits<double>::infinity();

// Order-`lambda` Renyi divergence D(p || q), lambda > 1. Returns
// kInfiniteDivergence when p + (lambda-1)(p - q) is not componentwise
// positive. InvalidArgument on dimension mismatch or lambda <= 1.
absl::StatusOr<double> RenyiDivergence(const DirichletParams& p,
                                       const DirichletParams& q, double lambda);

// KL(Dir(p) || Dir(q)).
absl::StatusOr<double> KlDivergence(const DirichletParams& p,
                                    const DirichletParams& q);

// log[dens_p(y) / dens_q(y)] = log B(q) - log B(p) + sum_i (p_i - q_i) log y_i
// for y strictly inside the simplex. Points on the boundary are rejected.
absl::StatusOr<double> DensityLogRatio(const DirichletParams& p,
                                       const DirichletParams& q,
                                       std::span<const double> y);

}  // namespace dirichlet_privacy

#endif  // DIRICHLET_PRIVACY_DIVERGENCE_H_
