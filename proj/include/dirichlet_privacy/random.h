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

// Seeded random variate generation. Every sampler takes an explicit engine;
// there is no global state. Streams for independent tasks are derived from a
// root seed with DeriveSeed so that results do not depend on scheduling.

#ifndef DIRICHLET_PRIVACY_RANDOM_H_
#define DIRICHLET_PRIVACY_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "dirichlet_privacy/dirichlet.h"

namespace dirichlet_privacy {

using Rng = std::mt19937_64;

// Mixes `stream` into `root` (splitmix64 finalizer), giving well separated
// seeds for consecutive stream indices.
uint64_t DeriveSeed(uint64_t root, uint64_t stream);
uint64_t DeriveSeed(uint64_t root, std::initializer_list<uint64_t> path);

// Uniform on the open interval (0, 1).
double UniformOpen(Rng& rng);

double StandardNormal(Rng& rng);

// Laplace(0, scale) by inversion.
double Laplace(double scale, Rng& rng);

// log of a Gamma(shape, 1) variate. Marsaglia-Tsang for shape >= 1; smaller
// shapes use G(a) = G(a + 1) U^(1/a), kept in log space so that tiny shapes
// do not underflow.
double LogGammaVariate(double shape, Rng& rng);
double GammaVariate(double shape, Rng& rng);

// One draw from Dir(params) by normalizing gamma variates.
SimplexPoint SampleDirichlet(const DirichletParams& params, Rng& rng);
SimplexPoint SampleDirichlet(const DirichletParams& params, uint64_t seed);

// Counts of `n` draws from the categorical distribution `probs`, generated by
// sequential conditional binomials. `probs` must be nonnegative and sum to
// one up to rounding.
absl::StatusOr<std::vector<double>> SampleMultinomial(
    int64_t n, std::span<const double> probs, Rng& rng);

}  // namespace dirichlet_privacy

#endif  // DIRICHLET_PRIVACY_RANDOM_H_
