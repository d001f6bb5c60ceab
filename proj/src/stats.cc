// Copyright 2026 The forumgame Authors.
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

#include "forumgame/stats.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "forumgame/error.h"

namespace forumgame::analysis {

std::vector<double> AverageRanks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> rank(n);
  for (std::size_t lo = 0; lo < n;) {
    std::size_t hi = lo;
    while (hi + 1 < n && values[order[hi + 1]] == values[order[lo]]) ++hi;
    const double avg = (static_cast<double>(lo) + static_cast<double>(hi)) / 2.0 + 1.0;
    for (std::size_t j = lo; j <= hi; ++j) rank[order[j]] = avg;
    lo = hi + 1;
  }
  return rank;
}

double Pearson(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

CorrelationResult Spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw InvalidArgument("spearman: inputs differ in length");
  }
  if (x.size() < 3) throw InvalidArgument("spearman: need at least 3 points");
  CorrelationResult r;
  r.n = static_cast<int>(x.size());
  const std::vector<double> rx = AverageRanks(x);
  const std::vector<double> ry = AverageRanks(y);
  const double rho = Pearson(rx, ry);
  if (std::isnan(rho)) {
    r.defined = false;
    return r;
  }
  r.rho = rho;
  if (std::abs(rho) >= 1.0) {
    r.p_value = 0.0;
    return r;
  }
  const double df = r.n - 2.0;
  const double t = rho * std::sqrt(df / (1.0 - rho * rho));
  r.p_value = StudentTTwoSidedP(t, df);
  return r;
}

namespace {

// Continued fraction for I_x(a, b) (modified Lentz).
double BetaContinuedFraction(double a, double b, double x) {
  constexpr int kMaxIterations = 10000;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double RegularizedIncompleteBeta(double a, double b, double x) {
  if (!(a > 0.0 && b > 0.0)) {
    throw InvalidArgument("incomplete beta: a and b must be positive");
  }
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  // The fraction converges fast for x < (a + 1) / (a + b + 2); use the
  // symmetry I_x(a, b) = 1 - I_{1-x}(b, a) otherwise.
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * BetaContinuedFraction(a, b, x) / a;
  }
  return 1.0 - front * BetaContinuedFraction(b, a, 1.0 - x) / b;
}

double StudentTTwoSidedP(double t, double df) {
  if (!(df > 0.0)) throw InvalidArgument("t distribution: df must be positive");
  if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
  if (std::isinf(t)) return 0.0;
  const double x = df / (df + t * t);
  return std::clamp(RegularizedIncompleteBeta(df / 2.0, 0.5, x), 0.0, 1.0);
}

double StudentTCdf(double t, double df) {
  const double tail = StudentTTwoSidedP(t, df) / 2.0;
  return t >= 0.0 ? 1.0 - tail : tail;
}

namespace {

double Mean(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double SampleVariance(std::span<const double> v, double mean) {
  double s = 0.0;
  for (double x : v) s += (x - mean) * (x - mean);
  return s / static_cast<double>(v.size() - 1);
}

}  // namespace

TTestResult WeeklyTTest(std::span<const double> a, std::span<const double> b,
                        bool paired) {
  if (a.size() < 2 || b.size() < 2) {
    throw InvalidArgument("t-test: each sample needs at least two points");
  }
  TTestResult r;
  r.paired = paired;
  r.mean_a = Mean(a);
  r.mean_b = Mean(b);
  if (paired) {
    if (a.size() != b.size()) {
      throw InvalidArgument("paired t-test: samples differ in length");
    }
    std::vector<double> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = b[i] - a[i];
    const double md = Mean(d);
    const double var = SampleVariance(d, md);
    r.df = static_cast<double>(d.size() - 1);
    if (var == 0.0) {
      if (md == 0.0) {
        r.t_stat = 0.0;
        r.p_value = 1.0;
      } else {
        r.t_stat = md > 0 ? std::numeric_limits<double>::infinity()
                          : -std::numeric_limits<double>::infinity();
        r.p_value = 0.0;
      }
      return r;
    }
    r.t_stat = md / std::sqrt(var / static_cast<double>(d.size()));
    r.p_value = StudentTTwoSidedP(r.t_stat, r.df);
    return r;
  }
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double va = SampleVariance(a, r.mean_a) / na;
  const double vb = SampleVariance(b, r.mean_b) / nb;
  const double diff = r.mean_b - r.mean_a;
  if (va + vb == 0.0) {
    r.df = na + nb - 2.0;
    r.t_stat = diff == 0.0 ? 0.0
               : diff > 0  ? std::numeric_limits<double>::infinity()
                           : -std::numeric_limits<double>::infinity();
    r.p_value = diff == 0.0 ? 1.0 : 0.0;
    return r;
  }
  r.t_stat = diff / std::sqrt(va + vb);
  r.df = (va + vb) * (va + vb) /
         (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
  r.p_value = StudentTTwoSidedP(r.t_stat, r.df);
  return r;
}

}  // namespace forumgame::analysis
