// Copyright 2026 The Simpeval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "simpeval/stats.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "simpeval/error.h"

namespace simpeval {
namespace {

constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;
constexpr int kMaxIterations = 10000;

// Continued fraction for I_x(a, b), modified Lentz.
double BetaContinuedFraction(double a, double b, double x) {
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw Error(ErrorCode::kDegenerateInput,
              "incomplete beta continued fraction did not converge");
}

// I_x(a, b) with y = 1 - x supplied separately to avoid cancellation.
double IncompleteBeta(double a, double b, double x, double y) {
  if (x <= 0.0) return 0.0;
  if (y <= 0.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log(y);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * BetaContinuedFraction(a, b, x) / a;
  }
  return 1.0 - front * BetaContinuedFraction(b, a, y) / b;
}

}  // namespace

double RegularizedIncompleteBeta(double a, double b, double x) {
  if (!(a > 0) || !(b > 0) || !(x >= 0 && x <= 1)) {
    throw Error(ErrorCode::kInvalidArgument, "incomplete beta arguments out of range");
  }
  return IncompleteBeta(a, b, x, 1.0 - x);
}

double StudentTTwoTailedP(double t, double df) {
  if (!(df > 0)) throw Error(ErrorCode::kInvalidArgument, "df must be positive");
  if (std::isinf(t)) return 0.0;
  const double t2 = t * t;
  return IncompleteBeta(df / 2.0, 0.5, df / (df + t2), t2 / (df + t2));
}

double PearsonPValue(double r, long n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "correlation needs n >= 3");
  const double ar = std::min(std::fabs(r), 1.0);
  if (ar == 1.0) return 0.0;
  // With t = r sqrt(df / (1 - r^2)), df / (df + t^2) reduces to 1 - r^2.
  const double df = static_cast<double>(n - 2);
  return IncompleteBeta(df / 2.0, 0.5, (1.0 - ar) * (1.0 + ar), ar * ar);
}

Stars StarsForP(double p) {
  if (p < 0.001) return Stars::kTwo;
  if (p < 0.01) return Stars::kOne;
  return Stars::kNone;
}

std::string_view StarsText(Stars stars) {
  switch (stars) {
    case Stars::kNone: return "";
    case Stars::kOne: return "*";
    case Stars::kTwo: return "**";
  }
  return "";
}

CorrelationCell Pearson(const PairedSeries& series) {
  const auto& pairs = series.pairs;
  const long n = static_cast<long>(pairs.size());
  if (n < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "correlation " + series.label_x + "/" + series.label_y +
                    " needs at least 3 pairs, got " + std::to_string(n));
  }
  bool x_const = true, y_const = true;
  for (const auto& [x, y] : pairs) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw Error(ErrorCode::kInvalidArgument, "correlation input must be finite");
    }
    x_const = x_const && x == pairs.front().first;
    y_const = y_const && y == pairs.front().second;
  }
  if (x_const || y_const) {
    throw Error(ErrorCode::kDegenerateInput,
                "zero variance in " + (x_const ? series.label_x : series.label_y));
  }
  double mx = 0, my = 0;
  for (const auto& [x, y] : pairs) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0, syy = 0;
  for (const auto& [x, y] : pairs) {
    const double dx = x - mx, dy = y - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  CorrelationCell cell;
  cell.n = n;
  cell.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  cell.p = PearsonPValue(cell.r, n);
  cell.stars = StarsForP(cell.p);
  return cell;
}

}  // namespace simpeval
