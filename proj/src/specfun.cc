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

#include "dirichlet_privacy/specfun.h"

#include <array>
#include <cmath>
#include <numbers>

#include "absl/strings/str_format.h"

namespace dirichlet_privacy {
namespace {

// B_2, B_4, ..., B_20.
constexpr std::array<double, 10> kBernoulli = {
    1.0 / 6.0,       -1.0 / 30.0,    1.0 / 42.0,         -1.0 / 30.0,
    5.0 / 66.0,      -691.0 / 2730.0, 7.0 / 6.0,         -3617.0 / 510.0,
    43867.0 / 798.0, -174611.0 / 330.0};

// Arguments at or above this value go straight to the asymptotic series.
constexpr double kAsymptoticThreshold = 10.0;

// Radius of the zeta-series window around the roots of ln Gamma.
constexpr double kRootWindow = 0.25;
constexpr int kZetaTerms = 32;

// zeta(k) for k = 0..kZetaTerms (entries 0 and 1 unused), by Euler-Maclaurin
// summation with cutoff N = 10.
const std::array<double, kZetaTerms + 1>& ZetaTable() {
  static const std::array<double, kZetaTerms + 1> table = [] {
    std::array<double, kZetaTerms + 1> zeta{};
    constexpr int kCutoff = 10;
    const double n = kCutoff;
    for (int k = 2; k <= kZetaTerms; ++k) {
      const double s = k;
      double sum = 0.0;
      for (int m = kCutoff - 1; m >= 1; --m) sum += std::pow(m, -s);
      sum += std::pow(n, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(n, -s);
      double rising = s;  // s (s+1) ... (s+2j-2)
      double factorial = 2.0;  // (2j)!
      for (int j = 1; j <= 8; ++j) {
        sum += kBernoulli[j - 1] / factorial * rising *
               std::pow(n, -s - 2.0 * j + 1.0);
        rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
      }
      zeta[k] = sum;
    }
    return zeta;
  }();
  return table;
}

// ln Gamma(1 + z) for |z| <= kRootWindow.
double LogGammaOnePlus(double z) {
  const auto& zeta = ZetaTable();
  double series = 0.0;
  for (int k = kZetaTerms; k >= 2; --k) {
    const double term = zeta[k] / k * ((k % 2 == 0) ? 1.0 : -1.0);
    series = series * z + term;
  }
  return z * (-std::numbers::egamma + z * series);
}

double StirlingLogGamma(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double correction = 0.0;
  double power = inv;  // x^{-(2k-1)}
  for (int k = 1; k <= 9; ++k) {
    correction += kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * power;
    power *= inv2;
  }
  return (x - 0.5) * std::log(x) - x +
         0.5 * std::log(2.0 * std::numbers::pi) + correction;
}

}  // namespace

absl::Status CheckPositiveReal(double x, const char* name) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s must be finite and positive, got %g", name, x));
  }
  return absl::OkStatus();
}

namespace internal {

double LogGammaUnchecked(double x) {
  if (std::abs(x - 1.0) <= kRootWindow) return LogGammaOnePlus(x - 1.0);
  if (std::abs(x - 2.0) <= kRootWindow) {
    const double z = x - 2.0;
    return LogGammaOnePlus(z) + std::log1p(z);
  }
  if (x >= kAsymptoticThreshold) return StirlingLogGamma(x);
  double product = 1.0;
  double shifted = x;
  while (shifted < kAsymptoticThreshold) {
    product *= shifted;
    shifted += 1.0;
  }
  return StirlingLogGamma(shifted) - std::log(product);
}

// The recurrence shifts accumulate in extended precision so that the result
// is rounded once; near zero the shift dominates the value.
double DigammaUnchecked(double x) {
  long double accumulated = 0.0L;
  while (x < kAsymptoticThreshold) {
    accumulated -= 1.0L / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  double series = 0.0;
  double power = inv2;  // x^{-2k}
  for (int k = 1; k <= 9; ++k) {
    series += kBernoulli[k - 1] / (2.0 * k) * power;
    power *= inv2;
  }
  return static_cast<double>(accumulated + (std::log(x) - 0.5 / x - series));
}

double TrigammaUnchecked(double x) {
  long double accumulated = 0.0L;
  while (x < kAsymptoticThreshold) {
    const long double shifted = x;
    accumulated += 1.0L / (shifted * shifted);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double tail = 0.0;
  double power = inv2 * inv;  // x^{-(2k+1)}
  for (int k = 1; k <= 9; ++k) {
    tail += kBernoulli[k - 1] * power;
    power *= inv2;
  }
  // The leading terms are summed first so that the positive tail is what
  // separates the result from 1/x + 1/(2x^2) at very large x.
  const double asymptotic = (inv + 0.5 * inv2) + tail;
  if (accumulated == 0.0L) return asymptotic;
  return static_cast<double>(accumulated + asymptotic);
}

double LogBetaUnchecked(std::span<const double> u) {
  double sum = 0.0;
  double log_gamma_sum = 0.0;
  for (double v : u) {
    sum += v;
    log_gamma_sum += LogGammaUnchecked(v);
  }
  return log_gamma_sum - LogGammaUnchecked(sum);
}

}  // namespace internal

absl::StatusOr<double> LogGamma(double x) {
  if (absl::Status s = CheckPositiveReal(x, "LogGamma argument"); !s.ok()) {
    return s;
  }
  return internal::LogGammaUnchecked(x);
}

absl::StatusOr<double> Digamma(double x) {
  if (absl::Status s = CheckPositiveReal(x, "Digamma argument"); !s.ok()) {
    return s;
  }
  return internal::DigammaUnchecked(x);
}

absl::StatusOr<double> Trigamma(double x) {
  if (absl::Status s = CheckPositiveReal(x, "Trigamma argument"); !s.ok()) {
    return s;
  }
  return internal::TrigammaUnchecked(x);
}

absl::StatusOr<double> LogBeta(std::span<const double> u) {
  if (u.size() < 2) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "LogBeta needs at least two parameters, got %d", u.size()));
  }
  for (double v : u) {
    if (absl::Status s = CheckPositiveReal(v, "LogBeta parameter"); !s.ok()) {
      return s;
    }
  }
  double sum = 0.0;
  for (double v : u) sum += v;
  if (!std::isfinite(sum)) {
    return absl::InvalidArgumentError("LogBeta parameters overflow when summed");
  }
  return internal::LogBetaUnchecked(u);
}

}  // namespace dirichlet_privacy
