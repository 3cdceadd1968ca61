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

#ifndef DIRICHLET_PRIVACY_DIRICHLET_H_
#define DIRICHLET_PRIVACY_DIRICHLET_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace dirichlet_privacy {

// Concentration vector u of a Dirichlet distribution on the (d-1)-simplex.
// Every entry is finite and positive and d >= 2.
class DirichletParams {
 public:
  static absl::StatusOr<DirichletParams> Create(std::vector<double> u);

  // Dir(r * counts + alpha), the posterior used by the Dirichlet mechanism.
  static absl::StatusOr<DirichletParams> Posterior(
      std::span<const double> counts, std::span<const double> alpha,
      double r = 1.0);

  std::span<const double> values() const { return u_; }
  size_t dimension() const { return u_.size(); }
  double sum() const { return sum_; }
  double operator[](size_t i) const { return u_[i]; }

 private:
  DirichletParams(std::vector<double> u, double sum)
      : u_(std::move(u)), sum_(sum) {}

  std::vector<double> u_;
  double sum_;
};

// A point strictly inside the probability simplex: all entries positive and
// summing to one within kSimplexTolerance.
class SimplexPoint {
 public:
  static constexpr double kSimplexTolerance = 1e-12;

  static absl::StatusOr<SimplexPoint> Create(std::vector<double> probs);

  std::span<const double> probs() const { return probs_; }
  size_t dimension() const { return probs_.size(); }
  double operator[](size_t i) const { return probs_[i]; }

 private:
  explicit SimplexPoint(std::vector<double> probs) : probs_(std::move(probs)) {}

  std::vector<double> probs_;
};

}  // namespace dirichlet_privacy

#endif  // DIRICHLET_PRIVACY_DIRICHLET_H_
