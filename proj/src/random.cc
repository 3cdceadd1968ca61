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

#include "dirichlet_privacy/random.h"

#include <algorithm>
#include <cfloat>
#include <cmath>

#include "absl/strings/str_format.h"

namespace dirichlet_privacy {

uint64_t DeriveSeed(uint64_t root, uint64_t stream) {
  uint64_t z = root + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t DeriveSeed(uint64_t root, std::initializer_list<uint64_t> path) {
  uint64_t seed = root;
  for (uint64_t stream : path) seed = DeriveSeed(seed, stream);
  return seed;
}

double UniformOpen(Rng& rng) {
  // 53 random bits, offset by half a step to exclude both endpoints.
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

double StandardNormal(Rng& rng) {
  std::normal_distribution<double> normal;
  return normal(rng);
}

double Laplace(double scale, Rng& rng) {
  const double u = UniformOpen(rng) - 0.5;
  const double magnitude = -scale * std::log1p(-2.0 * std::abs(u));
  return u < 0.0 ? -magnitude : magnitude;
}

double LogGammaVariate(double shape, Rng& rng) {
  if (shape < 1.0) {
    return LogGammaVariate(shape + 1.0, rng) + std::log(UniformOpen(rng)) / shape;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = StandardNormal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = UniformOpen(rng);
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2 ||
        std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
      return std::log(d) + std::log(v);
    }
  }
}

double GammaVariate(double shape, Rng& rng) {
  return std::exp(LogGammaVariate(shape, rng));
}

SimplexPoint SampleDirichlet(const DirichletParams& params, Rng& rng) {
  const size_t d = params.dimension();
  std::vector<double> y(d);
  double max_log = -INFINITY;
  for (size_t i = 0; i < d; ++i) {
    y[i] = LogGammaVariate(params[i], rng);
    max_log = std::max(max_log, y[i]);
  }
  double total = 0.0;
  for (double& v : y) {
    v = std::exp(v - max_log);
    total += v;
  }
  for (double& v : y) v = std::max(v / total, DBL_MIN);
  return *SimplexPoint::Create(std::move(y));
}

SimplexPoint SampleDirichlet(const DirichletParams& params, uint64_t seed) {
  Rng rng(seed);
  return SampleDirichlet(params, rng);
}

absl::StatusOr<std::vector<double>> SampleMultinomial(
    int64_t n, std::span<const double> probs, Rng& rng) {
  if (n < 0) return absl::InvalidArgumentError("negative multinomial size");
  if (probs.empty()) return absl::InvalidArgumentError("empty probabilities");
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("invalid category probability %g", p));
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    return absl::InvalidArgumentError(
        absl::StrFormat("probabilities sum to %.17g", total));
  }
  std::vector<double> counts(probs.size(), 0.0);
  int64_t remaining = n;
  double remaining_mass = total;
  for (size_t i = 0; i + 1 < probs.size() && remaining > 0; ++i) {
    const double q = std::clamp(probs[i] / remaining_mass, 0.0, 1.0);
    std::binomial_distribution<int64_t> binomial(remaining, q);
    const int64_t k = binomial(rng);
    counts[i] = static_cast<double>(k);
    remaining -= k;
    remaining_mass -= probs[i];
    if (remaining_mass <= 0.0) break;
  }
  if (remaining > 0) {
    // Whatever is left goes to the last category with positive mass.
    size_t last = probs.size() - 1;
    while (last > 0 && probs[last] == 0.0) --last;
    counts[last] += static_cast<double>(remaining);
  }
  return counts;
}

}  // namespace dirichlet_privacy
