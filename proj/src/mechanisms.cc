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

#include "dirichlet_privacy/mechanisms.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "absl/strings/str_format.h"
#include "dirichlet_privacy/status_macros.h"

namespace dirichlet_privacy {
namespace {

absl::Status CheckSampleSize(double n) {
  if (!(n > 0.0) || !std::isfinite(n)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("sample size must be positive, got %g", n));
  }
  return absl::OkStatus();
}

absl::Status CheckBeta(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("beta must be in (0, 1), got %g", beta));
  }
  return absl::OkStatus();
}

absl::Status CheckBudget(const RdpGuarantee& target) {
  if (!(target.lambda > 1.0) || !(target.epsilon > 0.0) ||
      !std::isfinite(target.epsilon)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "invalid target (%g, %g)", target.lambda, target.epsilon));
  }
  return absl::OkStatus();
}

Release AddNoise(const Histogram& hist, const RdpGuarantee& guarantee,
                 const std::function<double()>& noise) {
  Release release{hist.Normalized(), guarantee};
  for (double& v : release.values) v += noise();
  return release;
}

}  // namespace

absl::StatusOr<Histogram> Histogram::Create(std::vector<double> counts) {
  if (counts.empty()) return absl::InvalidArgumentError("empty histogram");
  double n = 0.0;
  for (double c : counts) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("histogram counts must be nonnegative, got %g", c));
    }
    n += c;
  }
  return Histogram(std::move(counts), n);
}

std::vector<double> Histogram::Normalized() const {
  std::vector<double> p(counts_.begin(), counts_.end());
  for (double& v : p) v /= n_;
  return p;
}

absl::StatusOr<SimplexPoint> DirichletMechanism(const Histogram& hist,
                                                const PriorSpec& prior,
                                                Rng& rng) {
  ASSIGN_OR_RETURN(DirichletParams params,
                   DirichletParams::Posterior(hist.counts(), prior.alpha(),
                                              prior.r()));
  return SampleDirichlet(params, rng);
}

absl::StatusOr<Release> CalibratedDirichletMechanism(
    const Histogram& hist, const RdpGuarantee& target,
    const SensitivityBounds& sensitivity, Rng& rng) {
  ASSIGN_OR_RETURN(const double alpha_min,
                   AlphaMinForTarget(target, sensitivity));
  ASSIGN_OR_RETURN(PriorSpec prior,
                   PriorSpec::Uniform(alpha_min, hist.dimension()));
  ASSIGN_OR_RETURN(SimplexPoint y, DirichletMechanism(hist, prior, rng));
  return Release{std::vector<double>(y.probs().begin(), y.probs().end()),
                 target};
}

absl::StatusOr<double> GaussianNoiseVariance(
    double n, const RdpGuarantee& target,
    const SensitivityBounds& sensitivity) {
  RETURN_IF_ERROR(CheckSampleSize(n));
  RETURN_IF_ERROR(CheckBudget(target));
  return target.lambda * sensitivity.delta2_sq /
         (2.0 * n * n * target.epsilon);
}

absl::StatusOr<Release> GaussianMechanism(const Histogram& hist,
                                          const RdpGuarantee& target,
                                          const SensitivityBounds& sensitivity,
                                          Rng& rng) {
  ASSIGN_OR_RETURN(const double variance,
                   GaussianNoiseVariance(hist.n(), target, sensitivity));
  const double sigma = std::sqrt(variance);
  return AddNoise(hist, target, [&] { return sigma * StandardNormal(rng); });
}

absl::StatusOr<double> LaplaceScale(double n, double epsilon_pure,
                                    double l1_sensitivity) {
  RETURN_IF_ERROR(CheckSampleSize(n));
  if (!(epsilon_pure > 0.0) || !(l1_sensitivity >= 0.0)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "invalid Laplace calibration eps = %g, l1 = %g", epsilon_pure,
        l1_sensitivity));
  }
  return l1_sensitivity / (n * epsilon_pure);
}

absl::StatusOr<Release> LaplaceMechanism(const Histogram& hist,
                                         double epsilon_pure,
                                         double l1_sensitivity, Rng& rng,
                                         double lambda) {
  ASSIGN_OR_RETURN(const double scale,
                   LaplaceScale(hist.n(), epsilon_pure, l1_sensitivity));
  ASSIGN_OR_RETURN(RdpGuarantee guarantee,
                   RdpGuarantee::Create(lambda, epsilon_pure));
  return AddNoise(hist, guarantee, [&] { return Laplace(scale, rng); });
}

std::vector<double> ProjectToSimplex(std::span<const double> v) {
  // Sort-based projection: find the threshold tau with sum max(v - tau, 0) = 1.
  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  double cumulative = 0.0;
  double tau = 0.0;
  for (size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) tau = candidate;
  }
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = std::max(v[i] - tau, 0.0);
  return out;
}

absl::StatusOr<double> L2Loss(std::span<const double> released,
                              std::span<const double> reference) {
  if (released.size() != reference.size()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("length mismatch: %d vs %d", released.size(),
                        reference.size()));
  }
  double sum = 0.0;
  for (size_t i = 0; i < released.size(); ++i) {
    const double diff = released[i] - reference[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

absl::StatusOr<double> DirichletUtilityBound(double n, double alpha0, int d,
                                             double beta) {
  if (!(n >= 0.0) || !(alpha0 > 0.0) || d < 1) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "invalid arguments n = %g, alpha0 = %g, d = %d", n, alpha0, d));
  }
  RETURN_IF_ERROR(CheckBeta(beta));
  const double tail = std::sqrt((3.0 * std::log(1.0 / beta) + 2.0 * d) /
                                (4.0 * (n + alpha0 + 1.0)));
  return tail + 2.0 * alpha0 / (n + alpha0);
}

absl::StatusOr<double> GaussianUtilityBound(double n,
                                            const RdpGuarantee& target,
                                            const SensitivityBounds& sensitivity,
                                            int d, double beta) {
  if (d < 1) return absl::InvalidArgumentError("dimension must be positive");
  RETURN_IF_ERROR(CheckBeta(beta));
  ASSIGN_OR_RETURN(const double variance,
                   GaussianNoiseVariance(n, target, sensitivity));
  return std::sqrt((3.0 * std::log(1.0 / beta) + 2.0 * d) * variance);
}

absl::StatusOr<double> MultinomialDirichletKlBound(
    const SimplexPoint& p, std::span<const double> alpha,
    std::span<const double> alpha_prime, int64_t n) {
  if (alpha.size() != p.dimension() || alpha_prime.size() != p.dimension()) {
    return absl::InvalidArgumentError("dimension mismatch");
  }
  if (n < 1) return absl::InvalidArgumentError("n must be at least 1");
  double sum = 0.0;
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (!(alpha[i] >= 1.0) || !(alpha_prime[i] >= alpha[i])) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "need alpha'_i >= alpha_i >= 1, got alpha = %g, alpha' = %g",
          alpha[i], alpha_prime[i]));
    }
    const double shift = alpha_prime[i] - alpha[i];
    sum += shift * shift / p[i];
  }
  return sum / (static_cast<double>(n) + 1.0);
}

}  // namespace dirichlet_privacy
