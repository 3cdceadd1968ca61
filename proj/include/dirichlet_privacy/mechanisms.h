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

// Private release of a normalized histogram p = x / N.
//
// The Dirichlet mechanism releases one draw Y ~ Dir(r x + alpha). The
// Gaussian and Laplace baselines add noise to p directly. Outputs of the
// baselines are left as is unless projection is requested, so they may fall
// outside the simplex.

#ifndef DIRICHLET_PRIVACY_MECHANISMS_H_
#define DIRICHLET_PRIVACY_MECHANISMS_H_

#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "dirichlet_privacy/accountant.h"
#include "dirichlet_privacy/dirichlet.h"
#include "dirichlet_privacy/random.h"

namespace dirichlet_privacy {

// Nonnegative counts x with total mass n = sum(x).
class Histogram {
 public:
  static absl::StatusOr<Histogram> Create(std::vector<double> counts);

  std::span<const double> counts() const { return counts_; }
  size_t dimension() const { return counts_.size(); }
  double n() const { return n_; }
  // x / n. Requires n > 0.
  std::vector<double> Normalized() const;

 private:
  Histogram(std::vector<double> counts, double n)
      : counts_(std::move(counts)), n_(n) {}

  std::vector<double> counts_;
  double n_;
};

// A mechanism output together with the guarantee it was calibrated to.
struct Release {
  std::vector<double> values;
  RdpGuarantee guarantee;
};

// Y ~ Dir(r x + alpha).
absl::StatusOr<SimplexPoint> DirichletMechanism(const Histogram& hist,
                                                const PriorSpec& prior,
                                                Rng& rng);

// Dirichlet mechanism with the uniform prior alpha_min = AlphaMinForTarget.
absl::StatusOr<Release> CalibratedDirichletMechanism(
    const Histogram& hist, const RdpGuarantee& target,
    const SensitivityBounds& sensitivity, Rng& rng);

// lambda * delta2_sq / (2 N^2 eps): the variance per coordinate at which
// Gaussian noise on x / N is (lambda, eps)-RDP.
absl::StatusOr<double> GaussianNoiseVariance(
    double n, const RdpGuarantee& target, const SensitivityBounds& sensitivity);

// p + Z with Z ~ N(0, sigma^2 I).
absl::StatusOr<Release> GaussianMechanism(const Histogram& hist,
                                          const RdpGuarantee& target,
                                          const SensitivityBounds& sensitivity,
                                          Rng& rng);

// l1_sensitivity / (N * epsilon_pure).
absl::StatusOr<double> LaplaceScale(double n, double epsilon_pure,
                                    double l1_sensitivity);

// p + L with i.i.d. Laplace noise. Pure epsilon-DP implies (lambda, epsilon)-
// RDP at every order; the release records it at `lambda`.
absl::StatusOr<Release> LaplaceMechanism(const Histogram& hist,
                                         double epsilon_pure,
                                         double l1_sensitivity, Rng& rng,
                                         double lambda = 2.0);

// Euclidean projection onto the probability simplex (post-processing).
std::vector<double> ProjectToSimplex(std::span<const double> v);

// sqrt(sum_i (released_i - reference_i)^2).
absl::StatusOr<double> L2Loss(std::span<const double> released,
                              std::span<const double> reference);

// Tail bound on ||Y - p||_2 for the Dirichlet mechanism, holding with
// probability 1 - beta:
//   sqrt((3 log(1/beta) + 2d) / (4 (n + alpha0 + 1))) + 2 alpha0 / (n + alpha0).
absl::StatusOr<double> DirichletUtilityBound(double n, double alpha0, int d,
                                             double beta);

// Tail bound on ||p + Z - p||_2 for the Gaussian mechanism:
//   sqrt((3 log(1/beta) + 2d) * lambda * delta2_sq / (2 N^2 eps)).
absl::StatusOr<double> GaussianUtilityBound(double n,
                                            const RdpGuarantee& target,
                                            const SensitivityBounds& sensitivity,
                                            int d, double beta);

// Upper bound on E_X[KL(Dir(X + alpha) || Dir(X + alpha'))] for
// X ~ Multinomial(n, p), valid when alpha'_i >= alpha_i >= 1:
//   sum_i (alpha'_i - alpha_i)^2 / ((n + 1) p_i).
absl::StatusOr<double> MultinomialDirichletKlBound(
    const SimplexPoint& p, std::span<const double> alpha,
    std::span<const double> alpha_prime, int64_t n);

}  // namespace dirichlet_privacy

#endif  // DIRICHLET_PRIVACY_MECHANISMS_H_
