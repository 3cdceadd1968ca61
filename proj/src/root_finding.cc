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

#include "dirichlet_privacy/root_finding.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/strings/str_format.h"

namespace dirichlet_privacy {
namespace {

bool SameSign(double a, double b) { return std::signbit(a) == std::signbit(b); }

}  // namespace

absl::StatusOr<RootResult> FindRootBracketed(
    const std::function<double(double)>& f, double lo, double hi,
    const RootFindingOptions& options) {
  if (!(lo < hi)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("empty bracket [%g, %g]", lo, hi));
  }
  double a = lo;
  double b = hi;
  double fa = f(a);
  double fb = f(b);
  if (std::isnan(fa) || std::isnan(fb)) {
    return absl::InvalidArgumentError("function is NaN at a bracket endpoint");
  }
  if (fa == 0.0) return RootResult{a, fa, 0};
  if (fb == 0.0) return RootResult{b, fb, 0};
  if (SameSign(fa, fb)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "no sign change on [%g, %g]: f = %g, %g", lo, hi, fa, fb));
  }

  double x = 0.5 * (a + b);
  double fx = fa;
  int retained_side = 0;  // -1: a kept last step, +1: b kept last step
  double width_one_ago = b - a;
  double width_two_ago = std::numeric_limits<double>::infinity();
  int iteration = 0;
  while (iteration < options.max_iterations) {
    ++iteration;
    const double mid = 0.5 * (a + b);
    bool bisect = (b - a) > 0.5 * width_two_ago;
    if (!bisect) {
      x = b - fb * (b - a) / (fb - fa);
      bisect = !std::isfinite(x) || !(x > a && x < b);
    }
    if (bisect) x = mid;

    fx = f(x);
    if (std::isnan(fx)) {
      return absl::InternalError(absl::StrFormat("function is NaN at %g", x));
    }
    if (fx == 0.0 || std::abs(fx) <= options.f_tolerance) break;

    if (SameSign(fx, fb)) {
      b = x;
      fb = fx;
      if (retained_side == -1) fa *= 0.5;
      retained_side = -1;
    } else {
      a = x;
      fa = fx;
      if (retained_side == 1) fb *= 0.5;
      retained_side = 1;
    }
    width_two_ago = width_one_ago;
    width_one_ago = b - a;
    if (b - a <= options.x_tolerance + options.relative_x_tolerance * std::abs(x)) {
      break;
    }
  }
  return RootResult{x, fx, iteration};
}

absl::StatusOr<MinimizeResult> GoldenSectionMinimize(
    const std::function<double(double)>& f, double lo, double hi,
    double x_tolerance, int max_iterations) {
  if (!(lo < hi)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("empty search interval [%g, %g]", lo, hi));
  }
  // NaN compares false against everything; treat it as +infinity.
  auto eval = [&f](double x) {
    const double v = f(x);
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  int iteration = 0;
  while (b - a > x_tolerance && iteration < max_iterations) {
    ++iteration;
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = eval(d);
    }
  }
  if (fc <= fd) return MinimizeResult{c, fc, iteration};
  return MinimizeResult{d, fd, iteration};
}

}  // namespace dirichlet_privacy
