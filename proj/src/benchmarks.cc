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

#include "dirichlet_privacy/benchmarks.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_format.h"
#include "dirichlet_privacy/divergence.h"
#include "dirichlet_privacy/mechanisms.h"
#include "dirichlet_privacy/random.h"
#include "dirichlet_privacy/status_macros.h"

namespace dirichlet_privacy {
namespace {

// Stream tags for DeriveSeed.
enum Stream : uint64_t {
  kHistogramData = 1,
  kHistogramMechanism = 2,
  kKlProbabilities = 3,
  kKlCounts = 4,
};

constexpr int kMechanismCount = 3;

absl::Status ValidateGrid(bool empty, const char* name) {
  if (empty) {
    return absl::InvalidArgumentError(absl::StrFormat("empty %s grid", name));
  }
  return absl::OkStatus();
}

absl::Status ValidateEpsilons(const std::vector<double>& epsilons) {
  RETURN_IF_ERROR(ValidateGrid(epsilons.empty(), "epsilon"));
  for (double eps : epsilons) {
    if (!(eps > 0.0) || !std::isfinite(eps)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("epsilon must be positive, got %g", eps));
    }
  }
  return absl::OkStatus();
}

absl::Status ValidateSampleSizes(const std::vector<int64_t>& sizes) {
  RETURN_IF_ERROR(ValidateGrid(sizes.empty(), "sample size"));
  for (int64_t n : sizes) {
    if (n < 1) {
      return absl::InvalidArgumentError(
          absl::StrFormat("sample sizes must be positive, got %d", n));
    }
  }
  return absl::OkStatus();
}

absl::Status FirstError(const std::vector<absl::Status>& statuses) {
  for (const absl::Status& s : statuses) {
    if (!s.ok()) return s;
  }
  return absl::OkStatus();
}

// Uniform prior alpha_min solved for (lambda, eps), checked by re-evaluating
// the forward guarantee.
absl::StatusOr<double> SolvedAlphaMin(const RdpGuarantee& target,
                                      const SensitivityBounds& sensitivity) {
  ASSIGN_OR_RETURN(const double alpha_min,
                   AlphaMinForTarget(target, sensitivity));
  ASSIGN_OR_RETURN(const double achieved,
                   RdpEpsilon(target.lambda, sensitivity, alpha_min));
  if (std::abs(achieved - target.epsilon) > 1e-8 * target.epsilon) {
    return absl::InternalError(absl::StrFormat(
        "prior for eps = %g only achieves %g", target.epsilon, achieved));
  }
  return alpha_min;
}

struct HistogramTrial {
  double loss[kMechanismCount];
};

absl::StatusOr<HistogramTrial> RunHistogramTrial(
    const HistogramBenchmarkConfig& config, const RdpGuarantee& target,
    const PriorSpec& prior, int d, int64_t n, uint64_t data_seed,
    uint64_t mechanism_seed) {
  Rng data_rng(data_seed);
  const DirichletParams flat = *DirichletParams::Create(std::vector<double>(d, 1.0));
  const SimplexPoint p = SampleDirichlet(flat, data_rng);
  ASSIGN_OR_RETURN(std::vector<double> counts,
                   SampleMultinomial(n, p.probs(), data_rng));
  ASSIGN_OR_RETURN(Histogram hist, Histogram::Create(std::move(counts)));
  const std::vector<double> reference = hist.Normalized();

  Release releases[kMechanismCount];
  {
    Rng rng(DeriveSeed(mechanism_seed, 0));
    ASSIGN_OR_RETURN(SimplexPoint y, DirichletMechanism(hist, prior, rng));
    releases[0] = {std::vector<double>(y.probs().begin(), y.probs().end()),
                   target};
  }
  {
    Rng rng(DeriveSeed(mechanism_seed, 1));
    ASSIGN_OR_RETURN(releases[1],
                     GaussianMechanism(hist, target, config.sensitivity, rng));
  }
  {
    Rng rng(DeriveSeed(mechanism_seed, 2));
    ASSIGN_OR_RETURN(releases[2],
                     LaplaceMechanism(hist, target.epsilon,
                                      config.l1_sensitivity, rng,
                                      target.lambda));
  }
  HistogramTrial trial;
  for (int m = 0; m < kMechanismCount; ++m) {
    const RdpGuarantee& g = releases[m].guarantee;
    if (g.lambda != target.lambda || g.epsilon != target.epsilon) {
      return absl::InternalError(absl::StrFormat(
          "mechanism %d released under (%g, %g), expected (%g, %g)", m,
          g.lambda, g.epsilon, target.lambda, target.epsilon));
    }
    if (config.project && m > 0) {
      releases[m].values = ProjectToSimplex(releases[m].values);
    }
    ASSIGN_OR_RETURN(trial.loss[m], L2Loss(releases[m].values, reference));
  }
  return trial;
}

}  // namespace

absl::StatusOr<std::vector<HistogramRow>> RunHistogramBenchmark(
    const HistogramBenchmarkConfig& config, uint64_t seed,
    Execution execution) {
  RETURN_IF_ERROR(ValidateGrid(config.dimensions.empty(), "dimension"));
  for (int d : config.dimensions) {
    if (d < 2) return absl::InvalidArgumentError("dimensions must be >= 2");
  }
  RETURN_IF_ERROR(ValidateEpsilons(config.epsilons));
  RETURN_IF_ERROR(ValidateSampleSizes(config.sample_sizes));
  if (config.trials < 2) {
    return absl::InvalidArgumentError("need at least 2 trials per cell");
  }

  const size_t num_d = config.dimensions.size();
  const size_t num_eps = config.epsilons.size();
  const size_t num_n = config.sample_sizes.size();
  std::vector<RdpGuarantee> targets(num_eps);
  std::vector<double> alpha_mins(num_eps);
  for (size_t e = 0; e < num_eps; ++e) {
    ASSIGN_OR_RETURN(targets[e],
                     RdpGuarantee::Create(config.lambda, config.epsilons[e]));
    ASSIGN_OR_RETURN(alpha_mins[e],
                     SolvedAlphaMin(targets[e], config.sensitivity));
  }

  // Cell index c = (di * num_eps + ei) * num_n + ni.
  const int64_t num_cells = static_cast<int64_t>(num_d * num_eps * num_n);
  const int64_t num_tasks = num_cells * config.trials;
  std::vector<HistogramTrial> results(num_tasks);
  std::vector<absl::Status> statuses(num_tasks);
  ForEachTask(num_tasks, execution, [&](int64_t task) {
    const int64_t cell = task / config.trials;
    const int64_t trial = task % config.trials;
    const size_t ni = cell % num_n;
    const size_t ei = (cell / num_n) % num_eps;
    const size_t di = cell / (num_n * num_eps);
    const int d = config.dimensions[di];
    auto prior = PriorSpec::Uniform(alpha_mins[ei], d);
    if (!prior.ok()) {
      statuses[task] = prior.status();
      return;
    }
    // The data stream ignores eps, so every eps sees the same histograms.
    auto result = RunHistogramTrial(
        config, targets[ei], *prior, d, config.sample_sizes[ni],
        DeriveSeed(seed, {kHistogramData, di, ni, static_cast<uint64_t>(trial)}),
        DeriveSeed(seed, {kHistogramMechanism, static_cast<uint64_t>(cell),
                          static_cast<uint64_t>(trial)}));
    if (result.ok()) {
      results[task] = *result;
    } else {
      statuses[task] = result.status();
    }
  });
  RETURN_IF_ERROR(FirstError(statuses));

  const char* names[kMechanismCount] = {kDirichletMechanismName,
                                        kGaussianMechanismName,
                                        kLaplaceMechanismName};
  std::vector<HistogramRow> rows;
  rows.reserve(num_cells * kMechanismCount);
  std::vector<double> losses(config.trials);
  for (int64_t cell = 0; cell < num_cells; ++cell) {
    const size_t ni = cell % num_n;
    const size_t ei = (cell / num_n) % num_eps;
    const size_t di = cell / (num_n * num_eps);
    for (int m = 0; m < kMechanismCount; ++m) {
      for (int t = 0; t < config.trials; ++t) {
        losses[t] = results[cell * config.trials + t].loss[m];
      }
      const SampleSummary summary = Summarize(losses);
      rows.push_back({names[m], config.dimensions[di], config.epsilons[ei],
                      config.sample_sizes[ni], config.trials, summary.mean,
                      summary.std_error});
    }
  }
  return rows;
}

absl::StatusOr<bool> HasSingleCrossover(const std::vector<HistogramRow>& rows,
                                        int d, double epsilon) {
  std::vector<std::pair<int64_t, double>> dirichlet;
  std::vector<std::pair<int64_t, double>> gaussian;
  for (const HistogramRow& row : rows) {
    if (row.d != d || row.epsilon != epsilon) continue;
    if (row.mechanism == kDirichletMechanismName) {
      dirichlet.emplace_back(row.n, row.mean_l2_loss);
    } else if (row.mechanism == kGaussianMechanismName) {
      gaussian.emplace_back(row.n, row.mean_l2_loss);
    }
  }
  if (dirichlet.size() < 2 || dirichlet.size() != gaussian.size()) {
    return absl::NotFoundError(absl::StrFormat(
        "no Dirichlet/Gaussian curves for d = %d, eps = %g", d, epsilon));
  }
  std::sort(dirichlet.begin(), dirichlet.end());
  std::sort(gaussian.begin(), gaussian.end());
  int changes = 0;
  bool previous_below = false;
  for (size_t i = 0; i < dirichlet.size(); ++i) {
    if (dirichlet[i].first != gaussian[i].first) {
      return absl::InvalidArgumentError("mismatched sample-size grids");
    }
    const bool below = dirichlet[i].second < gaussian[i].second;
    if (i == 0 && !below) return false;
    if (i > 0 && below != previous_below) ++changes;
    previous_below = below;
  }
  return changes == 1 && !previous_below;
}

absl::StatusOr<std::vector<KlUtilityRow>> RunKlUtilityBenchmark(
    const KlUtilityConfig& config, uint64_t seed, Execution execution) {
  RETURN_IF_ERROR(ValidateGrid(config.etas.empty(), "eta"));
  for (double eta : config.etas) {
    if (!(eta > 0.0) || !std::isfinite(eta)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("eta must be positive, got %g", eta));
    }
  }
  RETURN_IF_ERROR(ValidateEpsilons(config.epsilons));
  RETURN_IF_ERROR(ValidateSampleSizes(config.sample_sizes));
  if (config.dimension < 2) {
    return absl::InvalidArgumentError("dimension must be >= 2");
  }
  if (config.draws < 2) {
    return absl::InvalidArgumentError("need at least 2 draws per cell");
  }
  if (!(config.base_alpha >= 1.0)) {
    return absl::InvalidArgumentError("base prior must be at least 1");
  }

  const size_t num_eta = config.etas.size();
  const size_t num_eps = config.epsilons.size();
  const size_t num_n = config.sample_sizes.size();
  const int d = config.dimension;
  std::vector<double> alpha_primes(num_eps);
  for (size_t e = 0; e < num_eps; ++e) {
    ASSIGN_OR_RETURN(const RdpGuarantee target,
                     RdpGuarantee::Create(config.lambda, config.epsilons[e]));
    ASSIGN_OR_RETURN(const double alpha_min,
                     SolvedAlphaMin(target, config.sensitivity));
    alpha_primes[e] = std::max(config.base_alpha, alpha_min);
  }
  const std::vector<double> alpha(d, config.base_alpha);

  // Cell index c = (hi * num_eps + ei) * num_n + ni.
  const int64_t num_cells = static_cast<int64_t>(num_eta * num_eps * num_n);
  const int64_t num_tasks = num_cells * config.draws;
  std::vector<double> kls(num_tasks);
  std::vector<double> bounds(num_tasks);
  std::vector<absl::Status> statuses(num_tasks);
  ForEachTask(num_tasks, execution, [&](int64_t task) {
    const int64_t cell = task / config.draws;
    const uint64_t k = static_cast<uint64_t>(task % config.draws);
    const size_t ni = cell % num_n;
    const size_t ei = (cell / num_n) % num_eps;
    const size_t hi = cell / (num_n * num_eps);
    const int64_t n = config.sample_sizes[ni];

    Rng p_rng(DeriveSeed(seed, {kKlProbabilities, hi, k}));
    const SimplexPoint p = SampleDirichlet(
        *DirichletParams::Create(std::vector<double>(d, config.etas[hi])),
        p_rng);
    Rng x_rng(DeriveSeed(seed, {kKlCounts, hi, ni, k}));
    auto counts = SampleMultinomial(n, p.probs(), x_rng);
    if (!counts.ok()) {
      statuses[task] = counts.status();
      return;
    }
    const std::vector<double> alpha_prime(d, alpha_primes[ei]);
    auto original = DirichletParams::Posterior(*counts, alpha);
    auto released = DirichletParams::Posterior(*counts, alpha_prime);
    if (!original.ok() || !released.ok()) {
      statuses[task] = original.ok() ? released.status() : original.status();
      return;
    }
    auto kl = KlDivergence(*original, *released);
    auto bound = MultinomialDirichletKlBound(p, alpha, alpha_prime, n);
    if (!kl.ok() || !bound.ok()) {
      statuses[task] = kl.ok() ? bound.status() : kl.status();
      return;
    }
    kls[task] = *kl;
    bounds[task] = *bound;
  });
  RETURN_IF_ERROR(FirstError(statuses));

  std::vector<KlUtilityRow> rows;
  rows.reserve(num_cells);
  for (int64_t cell = 0; cell < num_cells; ++cell) {
    const size_t ni = cell % num_n;
    const size_t ei = (cell / num_n) % num_eps;
    const size_t hi = cell / (num_n * num_eps);
    const auto begin = cell * config.draws;
    const SampleSummary kl = Summarize(
        std::span<const double>(kls).subspan(begin, config.draws));
    const SampleSummary bound = Summarize(
        std::span<const double>(bounds).subspan(begin, config.draws));
    rows.push_back({config.etas[hi], config.epsilons[ei],
                    config.sample_sizes[ni], config.draws, alpha_primes[ei],
                    kl.mean, kl.std_error, bound.mean});
  }
  return rows;
}

}  // namespace dirichlet_privacy
