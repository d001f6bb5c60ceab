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

// Cardinality-constrained bilinear maximization:
//
//   max_{S, |S| = k}  (sum_{i in S} f_i) * (sum_{i in S} g_i)
//
// with f, g >= 0. The problem is NP-hard; this header provides the exact
// enumeration oracle used at desk scale, a pseudo-polynomial DP for integer
// f, the selection heuristics, and the subset-sum reduction used to build
// hard test instances.
//
// Instances are templated on the value type so that reduced subset-sum
// instances can be solved in exact integer arithmetic. Every argmax breaks
// ties by lowest index.

#ifndef FORUMGAME_NASH_OPT_H_
#define FORUMGAME_NASH_OPT_H_

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "forumgame/error.h"
#include "forumgame/random.h"

namespace forumgame::nash {

template <typename T>
concept Value = std::same_as<T, double> || std::same_as<T, std::int64_t>;

template <Value T>
struct Item {
  T f{};
  T g{};
};

template <Value T>
struct BasicInstance {
  std::vector<Item<T>> items;
  int k = 0;

  int size() const { return static_cast<int>(items.size()); }

  // Throws InvalidArgument unless f, g >= 0 (finite) and 1 <= k <= n.
  void Validate() const {
    if (k < 1 || k > size()) {
      throw InvalidArgument("cardinality cap k=" + std::to_string(k) +
                            " outside [1, " + std::to_string(size()) + "]");
    }
    for (const Item<T>& it : items) {
      bool ok = it.f >= 0 && it.g >= 0;
      if constexpr (std::is_floating_point_v<T>) {
        ok = ok && std::isfinite(it.f) && std::isfinite(it.g);
      }
      if (!ok) throw InvalidArgument("item utilities must be non-negative");
    }
  }
};

using BilinearInstance = BasicInstance<double>;
using IntegerInstance = BasicInstance<std::int64_t>;

namespace internal {

inline std::int64_t CheckedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw InvalidArgument("integer overflow in bilinear objective");
  }
  return r;
}
inline double CheckedAdd(double a, double b) { return a + b; }

inline std::int64_t CheckedMul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw InvalidArgument("integer overflow in bilinear objective");
  }
  return r;
}
inline double CheckedMul(double a, double b) { return a * b; }

}  // namespace internal

// (sum f) * (sum g) over `subset`. Throws InvalidArgument on an
// out-of-range or repeated index, or when |subset| > k.
template <Value T>
T NashObjective(const BasicInstance<T>& inst, std::span<const int> subset) {
  if (subset.size() > static_cast<std::size_t>(inst.k)) {
    throw InvalidArgument("subset larger than the cardinality cap");
  }
  std::vector<bool> seen(inst.items.size(), false);
  T fs{}, gs{};
  for (int i : subset) {
    if (i < 0 || i >= inst.size()) {
      throw InvalidArgument("item index " + std::to_string(i) +
                            " out of range");
    }
    if (seen[i]) throw InvalidArgument("repeated item index");
    seen[i] = true;
    fs = internal::CheckedAdd(fs, inst.items[i].f);
    gs = internal::CheckedAdd(gs, inst.items[i].g);
  }
  return internal::CheckedMul(fs, gs);
}

inline constexpr double kDefaultEnumerationBudget = 5e6;

// Number of k-subsets of an n-set, as a double (saturates to +inf).
inline double BinomialCount(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c);
}

template <Value T>
struct OracleResult {
  std::vector<int> indices;  // ascending
  T value{};
};

// Exhaustive search over all subsets of size exactly k. With non-negative
// utilities this is also the optimum over |S| <= k. Subsets are visited in
// lexicographic order and only a strict improvement replaces the incumbent,
// so the lexicographically smallest argmax is returned.
//
// Throws InstanceTooLarge when C(n, k) exceeds `budget`.
template <Value T>
OracleResult<T> OracleExact(const BasicInstance<T>& inst,
                            double budget = kDefaultEnumerationBudget) {
  inst.Validate();
  const int n = inst.size();
  const int k = inst.k;
  const double count = BinomialCount(n, k);
  if (count > budget) {
    throw InstanceTooLarge("C(" + std::to_string(n) + ", " +
                           std::to_string(k) + ") = " + std::to_string(count) +
                           " subsets exceeds the enumeration budget of " +
                           std::to_string(budget));
  }
  OracleResult<T> best;
  bool have_best = false;
  std::vector<int> current(k);
  // Prefix sums along the current combination: fsum[d] covers current[0..d).
  std::vector<T> fsum(k + 1, T{}), gsum(k + 1, T{});
  auto visit = [&](auto&& self, int depth, int start) -> void {
    if (depth == k) {
      const T v = internal::CheckedMul(fsum[k], gsum[k]);
      if (!have_best || v > best.value) {
        best.value = v;
        best.indices = current;
        have_best = true;
      }
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) {
      current[depth] = i;
      fsum[depth + 1] = internal::CheckedAdd(fsum[depth], inst.items[i].f);
      gsum[depth + 1] = internal::CheckedAdd(gsum[depth], inst.items[i].g);
      self(self, depth + 1, i + 1);
    }
  };
  visit(visit, 0, 0);
  return best;
}

// Pseudo-polynomial exact solver for integer f. Tracks, for every
// (count, f-sum) state, the largest reachable g-sum; the optimum is the best
// f-sum * g-sum over states with count == k. Memory is O(k * sum f).
// The returned argmax may differ from OracleExact's among ties.
//
// Throws InstanceTooLarge when k * (sum of the k largest f) exceeds
// `max_states`.
template <Value T>
OracleResult<T> OracleDp(const BasicInstance<T>& inst,
                         double max_states = 5e7) {
  inst.Validate();
  const int n = inst.size();
  const int k = inst.k;
  std::vector<std::int64_t> fvals(n);
  for (int i = 0; i < n; ++i) {
    const T f = inst.items[i].f;
    if constexpr (std::is_floating_point_v<T>) {
      if (f != std::floor(f) || f > 1e15) {
        throw InvalidArgument("OracleDp requires integer-valued f");
      }
    }
    fvals[i] = static_cast<std::int64_t>(f);
  }
  std::vector<std::int64_t> sorted = fvals;
  std::sort(sorted.rbegin(), sorted.rend());
  std::int64_t fmax = 0;
  for (int i = 0; i < k; ++i) fmax += sorted[i];
  if (static_cast<double>(k + 1) * static_cast<double>(fmax + 1) > max_states) {
    throw InstanceTooLarge("DP state space too large");
  }
  const std::size_t width = static_cast<std::size_t>(fmax) + 1;
  // best_g[c * width + s]: max g-sum using c items with f-sum s; unreachable
  // states are marked with has[] = false.
  std::vector<T> best_g((k + 1) * width, T{});
  std::vector<char> has((k + 1) * width, 0);
  // choice[i][c][s]: item i taken to reach state (c, s) after processing i.
  std::vector<std::vector<char>> took(n, std::vector<char>((k + 1) * width, 0));
  has[0] = 1;
  for (int i = 0; i < n; ++i) {
    const std::int64_t fi = fvals[i];
    const T gi = inst.items[i].g;
    for (int c = std::min(i + 1, k); c >= 1; --c) {
      for (std::int64_t s = fmax; s >= fi; --s) {
        const std::size_t from = (c - 1) * width + (s - fi);
        if (!has[from]) continue;
        const T cand = internal::CheckedAdd(best_g[from], gi);
        const std::size_t to = c * width + s;
        if (!has[to] || cand > best_g[to]) {
          best_g[to] = cand;
          has[to] = 1;
          took[i][to] = 1;
        }
      }
    }
  }
  OracleResult<T> best;
  bool have_best = false;
  std::int64_t best_s = 0;
  for (std::int64_t s = 0; s <= fmax; ++s) {
    const std::size_t idx = k * width + s;
    if (!has[idx]) continue;
    const T v = internal::CheckedMul(static_cast<T>(s), best_g[idx]);
    if (!have_best || v > best.value) {
      best.value = v;
      best_s = s;
      have_best = true;
    }
  }
  // Walk the decisions backward. took[i][state] records that item i improved
  // the state when processed, so the last such item is part of an optimal
  // witness.
  int c = k;
  std::int64_t s = best_s;
  for (int i = n - 1; i >= 0 && c > 0; --i) {
    if (took[i][c * width + s]) {
      best.indices.push_back(i);
      s -= fvals[i];
      --c;
    }
  }
  std::sort(best.indices.begin(), best.indices.end());
  return best;
}

// Alternating picks: G takes the unselected item with the largest f, then F
// the unselected item with the largest g, until k items are chosen.
// Returned in pick order.
template <Value T>
std::vector<int> HeuristicMpp(const BasicInstance<T>& inst) {
  inst.Validate();
  const int n = inst.size();
  std::vector<bool> used(n, false);
  std::vector<int> picks;
  picks.reserve(inst.k);
  for (int step = 0; step < inst.k; ++step) {
    const bool g_turn = step % 2 == 0;
    int arg = -1;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      const T v = g_turn ? inst.items[i].f : inst.items[i].g;
      const T b = arg < 0 ? T{} : (g_turn ? inst.items[arg].f : inst.items[arg].g);
      if (arg < 0 || v > b) arg = i;
    }
    used[arg] = true;
    picks.push_back(arg);
  }
  return picks;
}

// The k items with the largest f_i * g_i, in descending product order.
template <Value T>
std::vector<int> HeuristicMaxSp(const BasicInstance<T>& inst) {
  inst.Validate();
  std::vector<int> order(inst.items.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<T> prod(inst.items.size());
  for (std::size_t i = 0; i < prod.size(); ++i) {
    prod[i] = internal::CheckedMul(inst.items[i].f, inst.items[i].g);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return prod[a] > prod[b]; });
  order.resize(inst.k);
  return order;
}

// Greedy marginal Nash product: repeatedly add the item maximizing
// (U_G(S + q)) * (U_F(S + q)). Returned in pick order.
template <Value T>
std::vector<int> HeuristicGreedyNp(const BasicInstance<T>& inst) {
  inst.Validate();
  const int n = inst.size();
  std::vector<bool> used(n, false);
  std::vector<int> picks;
  picks.reserve(inst.k);
  T fs{}, gs{};
  for (int step = 0; step < inst.k; ++step) {
    int arg = -1;
    T best{};
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      const T v =
          internal::CheckedMul(internal::CheckedAdd(fs, inst.items[i].f),
                               internal::CheckedAdd(gs, inst.items[i].g));
      if (arg < 0 || v > best) {
        arg = i;
        best = v;
      }
    }
    used[arg] = true;
    picks.push_back(arg);
    fs = internal::CheckedAdd(fs, inst.items[arg].f);
    gs = internal::CheckedAdd(gs, inst.items[arg].g);
  }
  return picks;
}

// Uniform size-k subset, ascending, reproducible from `seed`.
template <Value T>
std::vector<int> HeuristicRandom(const BasicInstance<T>& inst,
                                 std::uint64_t seed) {
  inst.Validate();
  Rng rng(seed);
  return rng.Subset(inst.size(), inst.k);
}

enum class Heuristic { kMpp, kMaxSp, kGreedyNp, kRandom };

inline constexpr Heuristic kAllHeuristics[] = {
    Heuristic::kMpp, Heuristic::kMaxSp, Heuristic::kGreedyNp,
    Heuristic::kRandom};

std::string_view ToString(Heuristic h);
// Case-insensitive: "mpp", "maxsp", "greedynp", "random".
Heuristic ParseHeuristic(std::string_view name);

template <Value T>
std::vector<int> RunHeuristic(Heuristic h, const BasicInstance<T>& inst,
                              std::uint64_t seed = 0) {
  switch (h) {
    case Heuristic::kMpp:
      return HeuristicMpp(inst);
    case Heuristic::kMaxSp:
      return HeuristicMaxSp(inst);
    case Heuristic::kGreedyNp:
      return HeuristicGreedyNp(inst);
    case Heuristic::kRandom:
      return HeuristicRandom(inst, seed);
  }
  throw InvalidArgument("unknown heuristic");
}

// Cardinality-constrained subset sum: is there S with |S| = k and
// sum_{i in S} a_i = target?
struct CcssInstance {
  std::vector<std::int64_t> a;
  std::int64_t target = 0;
  int k = 0;
};

// The reduced bilinear instance, scaled by k so that every value is an
// integer: f_i = k * a_i, g_i = 2 * target - k * a_i. For |S| = k the
// objective equals k^2 * A_S * (2T - A_S), which is maximized uniquely at
// A_S = T with value k^2 * T^2 (`yes_value`).
struct CcssReduction {
  IntegerInstance instance;
  std::int64_t yes_value = 0;
  int scale = 1;

  // The unscaled instance f_i = a_i, g_i = 2T/k - a_i in floating point.
  BilinearInstance Unscaled() const;
  // Optimum of the scaled instance equals yes_value exactly.
  bool IsYes(std::int64_t optimum) const { return optimum == yes_value; }
};

// Throws ReductionInfeasible unless a_i > 0, target > 0, 1 <= k <= n and
// k * a_i <= 2 * target for every i (so that g >= 0).
CcssReduction ReduceCcss(const CcssInstance& c);

// Solves the reduced instance exactly and reports whether the subset-sum
// instance is a yes-instance.
bool DecideCcss(const CcssInstance& c,
                double budget = kDefaultEnumerationBudget);

}  // namespace forumgame::nash

#endif  // FORUMGAME_NASH_OPT_H_
