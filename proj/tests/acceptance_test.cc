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

// Acceptance run: one PASS/FAIL line per criterion, each with its runtime
// limit. Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "absl/strings/str_format.h"
#include "dirichlet_privacy/accountant.h"
#include "dirichlet_privacy/benchmarks.h"
#include "dirichlet_privacy/dirichlet.h"
#include "dirichlet_privacy/divergence.h"
#include "dirichlet_privacy/mechanisms.h"
#include "dirichlet_privacy/psrl.h"
#include "dirichlet_privacy/random.h"
#include "dirichlet_privacy/specfun.h"
#include "dirichlet_privacy/stats.h"

namespace dirichlet_privacy {
namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

// ---------------------------------------------------------------------------
// 1. Worked example for the prior floor.

Outcome WorkedExample() {
  const RdpGuarantee target{2.0, 1.0};
  const SensitivityBounds s{2.0, 1.0};
  const auto exact = AlphaMinForTarget(target, s, 1.0);
  const auto closed = AlphaMinClosedForm(target, s, 1.0);
  if (!exact.ok() || !closed.ok()) return {false, "solver error"};
  const bool pass = std::abs(*exact - 3.46) <= 0.01 && *closed == 4.0;
  return {pass, absl::StrFormat("alpha_min %.6f, closed form %.17g", *exact, *closed)};
}

// ---------------------------------------------------------------------------
// 2. The guarantee dominates the exact divergence.

struct Neighbors {
  std::vector<double> x, x_prime, alpha;
  SensitivityBounds sensitivity;
  double r;
  double lambda;
};

// Neighbors within (d2sq, dinf); half the draws saturate one coordinate.
Neighbors RandomNeighbors(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Neighbors n;
  const int d = std::uniform_int_distribution<int>(2, 20)(rng);
  const double dinf = 0.5 + 1.5 * unit(rng);
  const double d2sq = dinf * dinf * (1.0 + (d - 1) * unit(rng));
  n.sensitivity = {d2sq, dinf};
  std::vector<double> v(d, 0.0);
  if (unit(rng) < 0.5) {
    v[std::uniform_int_distribution<int>(0, d - 1)(rng)] =
        unit(rng) < 0.5 ? dinf : -dinf;
  } else {
    std::normal_distribution<double> normal;
    double norm_sq = 0.0;
    for (double& vi : v) {
      vi = normal(rng);
      norm_sq += vi * vi;
    }
    double scale = std::sqrt(d2sq / norm_sq) * unit(rng);
    for (double vi : v) scale = std::min(scale, dinf / std::abs(vi));
    for (double& vi : v) vi *= scale;
  }
  n.x.resize(d);
  n.x_prime.resize(d);
  for (int i = 0; i < d; ++i) {
    const double base = unit(rng) < 0.3 ? 0.0 : std::exp(8.0 * unit(rng) - 2.0);
    n.x[i] = base + std::max(0.0, -v[i]);
    n.x_prime[i] = n.x[i] + v[i];
  }
  if (unit(rng) < 0.5) std::swap(n.x, n.x_prime);
  n.alpha.resize(d);
  for (double& a : n.alpha) a = std::exp(5.0 * unit(rng) - 1.0);
  n.r = unit(rng) < 0.5 ? 1.0 : 0.1 + 1.9 * unit(rng);
  const double alpha_min = *std::min_element(n.alpha.begin(), n.alpha.end());
  n.lambda = 1.0 + (MaxOrder(alpha_min, dinf, n.r) - 1.0) *
                       (0.001 + 0.998 * unit(rng));
  return n;
}

Outcome GuaranteeDomination() {
  std::mt19937_64 rng(101);
  int violations = 0;
  double worst_ratio = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Neighbors n = RandomNeighbors(rng);
    const PriorSpec prior = *PriorSpec::Create(n.alpha, n.r);
    const double bound = *RdpEpsilon(n.lambda, n.sensitivity, prior);
    const double divergence =
        *RenyiDivergence(*DirichletParams::Posterior(n.x, n.alpha, n.r),
                         *DirichletParams::Posterior(n.x_prime, n.alpha, n.r),
                         n.lambda);
    if (!(divergence <= bound + 1e-9)) ++violations;
    if (bound > 0.0) worst_ratio = std::max(worst_ratio, divergence / bound);
  }
  return {violations == 0,
          absl::StrFormat("%d violations in 1000, max divergence/bound %.4f",
                          violations, worst_ratio)};
}

// ---------------------------------------------------------------------------
// 3. Conversion to approximate DP against a grid scan.

double OracleTrigamma(double x) {
  long double sum = 0.0L;
  long double y = x;
  for (int k = 0; k < 1000; ++k, y += 1.0L) sum += 1.0L / (y * y);
  const long double y2 = y * y;
  sum += 1.0L / y + 1.0L / (2.0L * y2) + 1.0L / (6.0L * y2 * y) -
         1.0L / (30.0L * y2 * y2 * y) + 1.0L / (42.0L * y2 * y2 * y2 * y);
  return static_cast<double>(sum);
}

double OracleLogDelta(double lambda, double eps, const SensitivityBounds& s,
                      double alpha_min, double r) {
  const double t = alpha_min - (lambda - 1.0) * r * s.delta_inf;
  if (t <= 0.0) return std::numeric_limits<double>::infinity();
  const double eps_hat = 0.5 * lambda * r * r * s.delta2_sq * OracleTrigamma(t);
  const double lm1 = lambda - 1.0;
  return lm1 * (eps_hat - eps) + lm1 * std::log(lm1) - lambda * std::log(lambda);
}

// 10^4-point scan of the order domain, refined by a second 10^4-point scan
// around the coarse minimizer. Returns the minimal log delta.
double GridLogDelta(double eps, const SensitivityBounds& s, double alpha_min,
                    double r) {
  auto scan = [&](double lo, double hi, double* argmin) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 10000; ++i) {
      const double lambda = lo + (hi - lo) * (i + 0.5) / 10000;
      const double v = OracleLogDelta(lambda, eps, s, alpha_min, r);
      if (v < best) best = v, *argmin = lambda;
    }
    return best;
  };
  const double hi = alpha_min / (r * s.delta_inf) + 1.0;
  double coarse = 1.0;
  scan(1.0, hi, &coarse);
  const double cell = (hi - 1.0) / 10000;
  double fine = coarse;
  return scan(std::max(1.0, coarse - 2.0 * cell), std::min(hi, coarse + 2.0 * cell),
              &fine);
}

Outcome Conversion() {
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const double dinf = 0.5 + 1.5 * unit(rng);
    const SensitivityBounds s{dinf * dinf * (1.0 + 3.0 * unit(rng)), dinf};
    const double alpha_min = std::exp(std::log(50.0) * unit(rng));
    const double r = 0.3 + 1.2 * unit(rng);
    const double eps = 0.1 + 4.9 * unit(rng);
    const double delta = RdpToApproxDp(eps, s, alpha_min, r)->delta;
    const double expected = std::min(1.0, std::exp(GridLogDelta(eps, s, alpha_min, r)));
    worst = std::max(worst, std::abs(delta - expected) / expected);
  }
  const SensitivityBounds s{2.0, 1.0};
  bool decreasing_eps = true;
  for (double alpha_min : {2.0, 4.0, 8.0}) {
    double previous = 2.0;
    for (int i = 0; i <= 49; ++i) {
      const double delta = RdpToApproxDp(0.1 + 0.1 * i, s, alpha_min)->delta;
      decreasing_eps &= delta < previous;
      previous = delta;
    }
  }
  bool decreasing_alpha = true;
  for (double eps : {0.5, 1.0, 2.0}) {
    double previous = 2.0;
    for (double alpha_min = 1.5; alpha_min < 200.0; alpha_min *= 1.3) {
      const double delta = RdpToApproxDp(eps, s, alpha_min)->delta;
      decreasing_alpha &= delta < previous;
      previous = delta;
    }
  }
  return {worst <= 1e-8 && decreasing_eps && decreasing_alpha,
          absl::StrFormat("max relative delta error %.2e, decreasing in eps %s, "
                          "in alpha_min %s",
                          worst, decreasing_eps ? "yes" : "no",
                          decreasing_alpha ? "yes" : "no")};
}

// ---------------------------------------------------------------------------
// 4. Tail bound coverage for the Dirichlet and Gaussian releases.

Outcome TailCoverage() {
  const RdpGuarantee target{2.0, 1.0};
  const SensitivityBounds s{2.0, 1.0};
  const int d = 10;
  const double beta = 0.05;
  Rng rng(DeriveSeed(104, 0));

  const int64_t n_dir = 1000;
  const PriorSpec prior = *PriorSpec::Uniform(*AlphaMinForTarget(target, s), d);
  const double dir_bound = *DirichletUtilityBound(n_dir, prior.alpha0(), d, beta);
  const DirichletParams flat = *DirichletParams::Create(std::vector<double>(d, 1.0));
  int dir_covered = 0;
  for (int t = 0; t < 1000; ++t) {
    const SimplexPoint p = SampleDirichlet(flat, rng);
    const Histogram hist = *Histogram::Create(*SampleMultinomial(n_dir, p.probs(), rng));
    const SimplexPoint y = *DirichletMechanism(hist, prior, rng);
    if (*L2Loss(y.probs(), hist.Normalized()) <= dir_bound) ++dir_covered;
  }

  const Histogram hist = *Histogram::Create(std::vector<double>(d, 10.0));
  const double gauss_bound = *GaussianUtilityBound(hist.n(), target, s, d, beta);
  int gauss_covered = 0;
  for (int t = 0; t < 1000; ++t) {
    const Release release = *GaussianMechanism(hist, target, s, rng);
    if (*L2Loss(release.values, hist.Normalized()) <= gauss_bound) ++gauss_covered;
  }
  return {dir_covered >= 930 && gauss_covered >= 930,
          absl::StrFormat("dirichlet %d/1000, gaussian %d/1000", dir_covered,
                          gauss_covered)};
}

// ---------------------------------------------------------------------------
// 5. Dirichlet vs Gaussian crossover in N.

Outcome Crossover() {
  HistogramBenchmarkConfig config;
  config.dimensions = {1000};
  config.epsilons = {0.1};
  config.sample_sizes = {100, 316, 1000, 3162, 10000, 31623, 100000, 316228, 1000000};
  config.trials = 100;
  const auto rows = RunHistogramBenchmark(config, 105);
  if (!rows.ok()) return {false, std::string(rows.status().message())};
  const bool single = *HasSingleCrossover(*rows, 1000, 0.1);
  std::map<std::string, std::vector<double>> curve;
  for (const HistogramRow& row : *rows) curve[row.mechanism].push_back(row.mean_l2_loss);
  const auto& dir = curve[kDirichletMechanismName];
  const auto& gauss = curve[kGaussianMechanismName];
  return {single, absl::StrFormat("N=1e2: dirichlet %.4g vs gaussian %.4g; "
                                  "N=1e6: dirichlet %.4g vs gaussian %.4g; single "
                                  "crossing %s",
                                  dir.front(), gauss.front(), dir.back(),
                                  gauss.back(), single ? "yes" : "no")};
}

// ---------------------------------------------------------------------------
// 6. KL cost of the enlarged prior.

Outcome KlUtility() {
  KlUtilityConfig config;
  config.etas = {0.5, 1.0, 10.0};
  config.epsilons = {0.01, 0.1, 1.0};
  config.sample_sizes = {100, 1000, 10000};
  config.draws = 500;
  const auto rows = RunKlUtilityBenchmark(config, 106);
  if (!rows.ok()) return {false, std::string(rows.status().message())};
  std::map<std::tuple<double, double, int64_t>, double> kl;
  int above_bound = 0;
  for (const KlUtilityRow& row : *rows) {
    kl[std::make_tuple(row.eta, row.epsilon, row.n)] = row.mean_kl;
    if (row.mean_kl > row.mean_bound) ++above_bound;
  }
  std::vector<std::string> not_decreasing_in_n;
  int eta_violations = 0;
  for (double eps : config.epsilons) {
    for (double eta : config.etas) {
      for (size_t i = 1; i < config.sample_sizes.size(); ++i) {
        const int64_t prev = config.sample_sizes[i - 1];
        const int64_t n = config.sample_sizes[i];
        if (!(kl[{eta, eps, n}] < kl[{eta, eps, prev}])) {
          not_decreasing_in_n.push_back(absl::StrFormat(
              "eta %g eps %g N %d->%d: %.4g->%.4g", eta, eps, prev, n,
              kl[{eta, eps, prev}], kl[{eta, eps, n}]));
        }
      }
    }
    for (int64_t n : config.sample_sizes) {
      for (size_t j = 1; j < config.etas.size(); ++j) {
        if (!(kl[{config.etas[j - 1], eps, n}] > kl[{config.etas[j], eps, n}])) {
          ++eta_violations;
        }
      }
    }
  }
  std::string detail = absl::StrFormat(
      "%d/27 cells above bound, %d eta-order violations, %d N-order violations",
      above_bound, eta_violations, static_cast<int>(not_decreasing_in_n.size()));
  for (const std::string& v : not_decreasing_in_n) detail += "; " + v;
  return {above_bound == 0 && eta_violations == 0 && not_decreasing_in_n.empty(),
          detail};
}

// ---------------------------------------------------------------------------
// 7. Private PSRL reward ordering.

double Mean(const std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / v.size();
}

Outcome PsrlOrdering() {
  const TabularMdp mdp = *RiverSwim(6, 30);
  PsrlBenchmarkConfig config;
  config.epsilons = {0.1, 1.0, 10.0};
  config.episodes = 300;
  config.repetitions = 20;
  const auto rows = RunPsrlBenchmark(mdp, config, 107);
  if (!rows.ok()) return {false, std::string(rows.status().message())};
  const double open = Mean(TotalRewards(*rows, PsrlVariant::kNonPrivate, 0.0));
  bool ordered = true;
  std::string detail = absl::StrFormat("non-private %.1f", open);
  double p_at_one = 1.0;
  for (double eps : config.epsilons) {
    const auto diffuse = TotalRewards(*rows, PsrlVariant::kDiffuse, eps);
    const auto concentrated = TotalRewards(*rows, PsrlVariant::kConcentrated, eps);
    const double d = Mean(diffuse);
    const double c = Mean(concentrated);
    ordered &= open >= d && d >= c;
    const double p = MannWhitneyGreater(diffuse, concentrated)->p_value;
    if (eps == 1.0) p_at_one = p;
    absl::StrAppendFormat(&detail, "; eps %g: diffuse %.1f, concentrated %.1f, p %.2g",
                          eps, d, c, p);
  }
  return {ordered && p_at_one < 0.05, detail};
}

// ---------------------------------------------------------------------------
// 8. No pure-DP guarantee: the density ratio is unbounded.

Outcome UnboundedDensityRatio() {
  const DirichletParams empty = *DirichletParams::Create({2.0, 2.0, 2.0});
  const DirichletParams one = *DirichletParams::Create({3.0, 2.0, 2.0});
  std::vector<double> values;
  for (double y1 : {1e-1, 1e-3, 1e-6}) {
    const double rest = (1.0 - y1) / 2.0;
    values.push_back(*DensityLogRatio(empty, one, std::vector<double>{y1, rest, rest}));
  }
  const bool increasing = values[0] < values[1] && values[1] < values[2];
  bool exceeds = true;
  for (double eps : {1.0, 10.0, 100.0}) {
    const double y1 = std::exp(-eps - 10.0);
    const double rest = (1.0 - y1) / 2.0;
    exceeds &= *DensityLogRatio(empty, one, std::vector<double>{y1, rest, rest}) > eps;
  }
  return {increasing && exceeds,
          absl::StrFormat("log ratio at y1 = 1e-1, 1e-3, 1e-6: %.4f, %.4f, %.4f; "
                          "exceeds eps in {1, 10, 100}: %s",
                          values[0], values[1], values[2], exceeds ? "yes" : "no")};
}

// ---------------------------------------------------------------------------
// 9. Special-function identities on 10^4 points.

Outcome SpecialFunctions() {
  std::mt19937_64 rng(109);
  std::uniform_real_distribution<double> exponent(-3.0, 6.0);
  std::uniform_real_distribution<double> moderate(0.5, 50.0);
  int sandwich = 0, recurrence = 0, derivative = 0;
  for (int i = 0; i < 10000; ++i) {
    const double x = std::pow(10.0, exponent(rng));
    const double t = *Trigamma(x);
    if (!(t > 1.0 / x + 1.0 / (2.0 * x * x) && t < 1.0 / x + 1.0 / (x * x))) {
      ++sandwich;
    }
    const long double lx = x;
    const long double dr =
        static_cast<long double>(*Digamma(x + 1.0)) - *Digamma(x) - 1.0L / lx;
    const long double tr =
        static_cast<long double>(*Trigamma(x + 1.0)) - t + 1.0L / (lx * lx);
    if (std::abs(dr) > 1e-10L || std::abs(tr) > 1e-10L) ++recurrence;

    const double z = moderate(rng);
    const double h = 1e-5 * z;
    const double psi = *Digamma(z);
    const double tri = *Trigamma(z);
    const double dlg = (*LogGamma(z + h) - *LogGamma(z - h)) / (2.0 * h);
    const double dpsi = (*Digamma(z + h) - *Digamma(z - h)) / (2.0 * h);
    if (std::abs(dlg - psi) > 1e-6 * std::max(std::abs(psi), 1.0) ||
        std::abs(dpsi - tri) > 1e-6 * tri) {
      ++derivative;
    }
  }
  return {sandwich == 0 && recurrence == 0 && derivative == 0,
          absl::StrFormat("failures: sandwich %d, recurrence %d, derivative %d",
                          sandwich, recurrence, derivative)};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace dirichlet_privacy

int main() {
  using namespace dirichlet_privacy;
  const std::vector<Criterion> criteria = {
      {1, "prior floor worked example", 1.0, WorkedExample},
      {2, "guarantee dominates exact divergence", 10.0, GuaranteeDomination},
      {3, "approximate DP conversion", 10.0, Conversion},
      {4, "utility tail coverage", 30.0, TailCoverage},
      {5, "histogram crossover", 300.0, Crossover},
      {6, "KL utility bound and shape", 120.0, KlUtility},
      {7, "private PSRL ordering", 600.0, PsrlOrdering},
      {8, "unbounded density ratio", 1.0, UnboundedDensityRatio},
      {9, "special functions", 5.0, SpecialFunctions},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome outcome = c.run();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = outcome.pass && seconds < c.limit_seconds;
    if (!pass) ++failed;
    std::printf("criterion %d %s: %s (%.3f s, limit %.0f s) %s\n", c.id,
                pass ? "PASS" : "FAIL", c.name, seconds, c.limit_seconds,
                outcome.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
