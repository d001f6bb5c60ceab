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

#ifndef FORUMGAME_STATS_H_
#define FORUMGAME_STATS_H_

#include <span>
#include <string>
#include <vector>

namespace forumgame::analysis {

// 1-based ranks; tied values share the mean of their positions.
std::vector<double> AverageRanks(std::span<const double> values);

// Sample Pearson correlation. Returns NaN when either input is constant.
double Pearson(std::span<const double> x, std::span<const double> y);

struct CorrelationResult {
  double rho = 0.0;
  double p_value = 1.0;
  int n = 0;
  std::string domain;
  std::string model;
  // False when an input is constant; rho and p_value are then 0 and 1.
  bool defined = true;
};

// Tie-corrected Spearman correlation (Pearson of average ranks) with a
// two-sided p-value from t = rho * sqrt((n - 2) / (1 - rho^2)), df = n - 2.
// Throws InvalidArgument unless the lengths match and n >= 3.
CorrelationResult Spearman(std::span<const double> x, std::span<const double> y);

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double RegularizedIncompleteBeta(double a, double b, double x);

// Student t distribution with `df` degrees of freedom (df may be fractional).
double StudentTCdf(double t, double df);
// P(|T| >= |t|).
double StudentTTwoSidedP(double t, double df);

struct TTestResult {
  double mean_a = 0.0;
  double mean_b = 0.0;
  // Positive when b's mean exceeds a's.
  double t_stat = 0.0;
  double df = 0.0;
  double p_value = 1.0;
  bool paired = true;
};

// Paired t-test on per-week values (differences b - a) or Welch's unequal
// variance test. All-zero paired differences give t = 0, p = 1.
// Throws InvalidArgument when a sample has fewer than two points or a
// paired test gets unequal lengths.
TTestResult WeeklyTTest(std::span<const double> a, std::span<const double> b,
                        bool paired = true);

// Significance marker threshold used in reports.
inline constexpr double kSignificanceLevel = 0.01;

}  // namespace forumgame::analysis

#endif  // FORUMGAME_STATS_H_
