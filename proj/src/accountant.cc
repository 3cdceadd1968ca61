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

#include "dirichlet_privacy/accountant.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "absl/strings/str_format.h"
#include "dirichlet_privacy/root_finding.h"
#include "dirichlet_privacy/specfun.h"
#include "dirichlet_privacy/status_macros.h"

namespace dirichlet_privacy {
namespace {

// Offset from both ends of the order domain for the delta search.
constexpr double kOrderMargin = 1e-9;
constexpr double kOrderTolerance = 1e-9;

// The solvers work on log-scale residuals and stop once the bracket spans a
// few ulps, so the forward formula reproduces the target to ~1e-14.
RootFindingOptions SolverOptions() {
  RootFindingOptions options;
  options.x_tolerance = 0.0;
  options.relative_x_tolerance = 1e-15;
  options.max_iterations = 400;
  return options;
}

absl::Status CheckFiniteNonnegative(double x, const char* name) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s must be finite and nonnegative, got %g", name, x));
  }
  return absl::OkStatus();
}

absl::Status CheckOrder(double lambda) {
  if (!(lambda > 1.0) || !std::isfinite(lambda)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("Renyi order must be finite and > 1, got %g", lambda));
  }
  return absl::OkStatus();
}

absl::Status CheckTarget(const RdpGuarantee& target) {
  RETURN_IF_ERROR(CheckOrder(target.lambda));
  if (!(target.epsilon > 0.0) || !std::isfinite(target.epsilon)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "target epsilon must be finite and positive, got %g", target.epsilon));
  }
  return absl::OkStatus();
}

// log trigamma(t), +infinity for t <= 0 where the guarantee does not apply.
double LogTrigamma(double t) {
  if (!(t > 0.0)) return std::numeric_limits<double>::infinity();
  return std::log(internal::TrigammaUnchecked(t));
}

// Unchecked guarantee; +infinity outside the order domain.
double EpsilonUnchecked(double lambda, const SensitivityBounds& s,
                        double alpha_min, double r) {
  if (s.delta_inf == 0.0 || s.delta2_sq == 0.0) return 0.0;
  if (lambda >= MaxOrder(alpha_min, s.delta_inf, r)) return kInfiniteEpsilon;
  const double t = alpha_min - (lambda - 1.0) * r * s.delta_inf;
  if (!(t > 0.0)) return kInfiniteEpsilon;
  return 0.5 * lambda * r * r * s.delta2_sq * internal::TrigammaUnchecked(t);
}

// Widens [lo, hi] geometrically until the decreasing function f changes sign.
absl::Status ExpandBracket(const std::function<double(double)>& f, double& lo,
                           double& hi) {
  for (int i = 0; i < 2000 && f(lo) < 0.0; ++i) lo *= 0.5;
  for (int i = 0; i < 2000 && f(hi) > 0.0; ++i) hi *= 2.0;
  if (f(lo) < 0.0 || f(hi) > 0.0) {
    return absl::InternalError("could not bracket the solution");
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<SensitivityBounds> SensitivityBounds::Create(double delta2_sq,
                                                            double delta_inf) {
  RETURN_IF_ERROR(CheckFiniteNonnegative(delta2_sq, "delta2_sq"));
  RETURN_IF_ERROR(CheckFiniteNonnegative(delta_inf, "delta_inf"));
  if (delta_inf * delta_inf > delta2_sq * (1.0 + 1e-12)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "delta_inf^2 = %g exceeds delta2_sq = %g", delta_inf * delta_inf,
        delta2_sq));
  }
  return SensitivityBounds{delta2_sq, delta_inf};
}

absl::StatusOr<SensitivityBounds> SensitivityBounds::CreateForDimension(
    double delta2_sq, double delta_inf, size_t dimension) {
  ASSIGN_OR_RETURN(SensitivityBounds bounds, Create(delta2_sq, delta_inf));
  if (dimension < 1) {
    return absl::InvalidArgumentError("dimension must be positive");
  }
  const double cap = static_cast<double>(dimension) * delta_inf * delta_inf;
  if (delta2_sq > cap * (1.0 + 1e-12)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "delta2_sq = %g exceeds dimension * delta_inf^2 = %g", delta2_sq, cap));
  }
  return bounds;
}

absl::StatusOr<RdpGuarantee> RdpGuarantee::Create(double lambda,
                                                  double epsilon) {
  RETURN_IF_ERROR(CheckOrder(lambda));
  RETURN_IF_ERROR(CheckFiniteNonnegative(epsilon, "epsilon"));
  return RdpGuarantee{lambda, epsilon};
}

absl::StatusOr<PriorSpec> PriorSpec::Create(std::vector<double> alpha,
                                            double r) {
  if (alpha.empty()) return absl::InvalidArgumentError("empty prior");
  RETURN_IF_ERROR(CheckPositiveReal(r, "concentration multiplier r"));
  double alpha_min = std::numeric_limits<double>::infinity();
  double alpha0 = 0.0;
  for (double a : alpha) {
    RETURN_IF_ERROR(CheckPositiveReal(a, "prior parameter"));
    alpha_min = std::min(alpha_min, a);
    alpha0 += a;
  }
  return PriorSpec(std::move(alpha), alpha_min, alpha0, r);
}

absl::StatusOr<PriorSpec> PriorSpec::Uniform(double value, size_t dimension,
                                             double r) {
  return Create(std::vector<double>(dimension, value), r);
}

absl::StatusOr<double> GOfLambda(double lambda, double delta_inf, double r) {
  RETURN_IF_ERROR(CheckOrder(lambda));
  RETURN_IF_ERROR(CheckFiniteNonnegative(delta_inf, "delta_inf"));
  RETURN_IF_ERROR(CheckPositiveReal(r, "concentration multiplier r"));
  return (lambda - 1.0) * r * delta_inf;
}

double MaxOrder(double alpha_min, double delta_inf, double r) {
  if (delta_inf == 0.0) return std::numeric_limits<double>::infinity();
  return alpha_min / (r * delta_inf) + 1.0;
}

absl::StatusOr<double> RdpEpsilon(double lambda,
                                  const SensitivityBounds& sensitivity,
                                  double alpha_min, double r) {
  RETURN_IF_ERROR(CheckOrder(lambda));
  RETURN_IF_ERROR(CheckPositiveReal(alpha_min, "alpha_min"));
  RETURN_IF_ERROR(CheckPositiveReal(r, "concentration multiplier r"));
  return EpsilonUnchecked(lambda, sensitivity, alpha_min, r);
}

absl::StatusOr<double> RdpEpsilon(double lambda,
                                  const SensitivityBounds& sensitivity,
                                  const PriorSpec& prior) {
  return RdpEpsilon(lambda, sensitivity, prior.alpha_min(), prior.r());
}

absl::StatusOr<double> AlphaMinForTarget(const RdpGuarantee& target,
                                         const SensitivityBounds& sensitivity,
                                         double r) {
  RETURN_IF_ERROR(CheckTarget(target));
  RETURN_IF_ERROR(CheckPositiveReal(r, "concentration multiplier r"));
  if (!(sensitivity.delta2_sq > 0.0)) {
    return absl::InvalidArgumentError(
        "delta2_sq must be positive to solve for alpha_min");
  }
  const double lambda = target.lambda;
  const double g = (lambda - 1.0) * r * sensitivity.delta_inf;
  // Solve trigamma(t) = c; then alpha_min = t + g.
  const double c =
      2.0 * target.epsilon / (lambda * r * r * sensitivity.delta2_sq);
  const double log_c = std::log(c);
  auto residual = [log_c](double t) { return LogTrigamma(t) - log_c; };
  // 1/t + 1/(2t^2) < trigamma(t) < 1/t + 1/t^2 brackets the root.
  double lo = (1.0 + std::sqrt(1.0 + 2.0 * c)) / (2.0 * c);
  double hi = (1.0 + std::sqrt(1.0 + 4.0 * c)) / (2.0 * c);
  lo *= 0.999;
  hi *= 1.001;
  RETURN_IF_ERROR(ExpandBracket(residual, lo, hi));
  ASSIGN_OR_RETURN(RootResult root,
                   FindRootBracketed(residual, lo, hi, SolverOptions()));
  return root.x + g;
}

absl::StatusOr<double> AlphaMinClosedForm(const RdpGuarantee& target,
                                          const SensitivityBounds& sensitivity,
                                          double r) {
  RETURN_IF_ERROR(CheckTarget(target));
  RETURN_IF_ERROR(CheckPositiveReal(r, "concentration multiplier r"));
  const double lambda = target.lambda;
  return lambda * r * r * sensitivity.delta2_sq / (2.0 * target.epsilon) +
         (lambda - 1.0) * r * sensitivity.delta_inf + 1.0;
}

absl::StatusOr<double> RForTarget(const RdpGuarantee& target,
                                  const SensitivityBounds& sensitivity,
                                  double alpha_min) {
  RETURN_IF_ERROR(CheckTarget(target));
  RETURN_IF_ERROR(CheckPositiveReal(alpha_min, "alpha_min"));
  if (!(sensitivity.delta2_sq > 0.0)) {
    return absl::InvalidArgumentError(
        "delta2_sq must be positive to solve for r");
  }
  const double lambda = target.lambda;
  const double scale = 0.5 * lambda * sensitivity.delta2_sq;
  // Ignoring the erosion of alpha_min gives an r that overshoots the budget.
  const double r_no_erosion = std::sqrt(
      target.epsilon / (scale * internal::TrigammaUnchecked(alpha_min)));
  if (sensitivity.delta_inf == 0.0) return r_no_erosion;

  const double r_max = alpha_min / ((lambda - 1.0) * sensitivity.delta_inf);
  const double log_scale = std::log(scale);
  const double log_epsilon = std::log(target.epsilon);
  auto residual = [&](double r) {
    const double t = alpha_min - (lambda - 1.0) * r * sensitivity.delta_inf;
    return log_scale + 2.0 * std::log(r) + LogTrigamma(t) - log_epsilon;
  };
  const double hi = std::min(r_no_erosion * (1.0 + 1e-6), r_max);
  double lo = std::min(0.5 * r_no_erosion, 0.5 * r_max);
  for (int i = 0; i < 2000 && residual(lo) >= 0.0; ++i) lo *= 0.5;
  ASSIGN_OR_RETURN(RootResult root,
                   FindRootBracketed(residual, lo, hi, SolverOptions()));
  return root.x;
}

absl::StatusOr<double> ConversionLogDelta(double lambda, double epsilon,
                                          const SensitivityBounds& sensitivity,
                                          double alpha_min, double r) {
  ASSIGN_OR_RETURN(const double eps_hat,
                   RdpEpsilon(lambda, sensitivity, alpha_min, r));
  if (!std::isfinite(eps_hat)) return std::numeric_limits<double>::infinity();
  const double lm1 = lambda - 1.0;
  return lm1 * (eps_hat - epsilon) + lm1 * std::log(lm1) -
         lambda * std::log(lambda);
}

absl::StatusOr<ApproxDpGuarantee> RdpToApproxDp(
    double epsilon, const SensitivityBounds& sensitivity, double alpha_min,
    double r) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("epsilon must be finite and positive, got %g", epsilon));
  }
  RETURN_IF_ERROR(CheckPositiveReal(alpha_min, "alpha_min"));
  RETURN_IF_ERROR(CheckPositiveReal(r, "concentration multiplier r"));
  // The output distribution does not depend on the data.
  if (sensitivity.delta2_sq == 0.0 || sensitivity.delta_inf == 0.0) {
    return ApproxDpGuarantee{epsilon, 0.0,
                             std::numeric_limits<double>::infinity(), false};
  }
  const double lo = 1.0 + kOrderMargin;
  const double hi = MaxOrder(alpha_min, sensitivity.delta_inf, r) - kOrderMargin;
  if (!(lo < hi)) {
    return ApproxDpGuarantee{epsilon, 1.0, 1.0, true};
  }
  auto log_delta = [&](double lambda) {
    const double lm1 = lambda - 1.0;
    const double eps_hat =
        EpsilonUnchecked(lambda, sensitivity, alpha_min, r);
    return lm1 * (eps_hat - epsilon) + lm1 * std::log(lm1) -
           lambda * std::log(lambda);
  };
  ASSIGN_OR_RETURN(MinimizeResult best,
                   GoldenSectionMinimize(log_delta, lo, hi, kOrderTolerance));
  const double delta = std::exp(best.f);
  if (delta >= 1.0) return ApproxDpGuarantee{epsilon, 1.0, best.x, true};
  return ApproxDpGuarantee{epsilon, delta, best.x, false};
}

absl::StatusOr<ApproxDpGuarantee> RdpToApproxDp(
    double epsilon, const SensitivityBounds& sensitivity,
    const PriorSpec& prior) {
  return RdpToApproxDp(epsilon, sensitivity, prior.alpha_min(), prior.r());
}

RdpGuarantee Compose(const RdpGuarantee& a, const RdpGuarantee& b) {
  return RdpGuarantee{std::min(a.lambda, b.lambda), a.epsilon + b.epsilon};
}

}  // namespace dirichlet_privacy
