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

#include "forumgame/nash_opt.h"

#include <cctype>

namespace forumgame::nash {

std::string_view ToString(Heuristic h) {
  switch (h) {
    case Heuristic::kMpp:
      return "MPP";
    case Heuristic::kMaxSp:
      return "MaxSP";
    case Heuristic::kGreedyNp:
      return "GreedyNP";
    case Heuristic::kRandom:
      return "Random";
  }
  return "unknown";
}

Heuristic ParseHeuristic(std::string_view name) {
  std::string lower;
  for (char c : name) {
    lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (lower == "mpp") return Heuristic::kMpp;
  if (lower == "maxsp") return Heuristic::kMaxSp;
  if (lower == "greedynp") return Heuristic::kGreedyNp;
  if (lower == "random") return Heuristic::kRandom;
  throw ConfigError("unknown heuristic '" + std::string(name) +
                    "' (expected MPP, MaxSP, GreedyNP or Random)");
}

BilinearInstance CcssReduction::Unscaled() const {
  BilinearInstance out;
  out.k = instance.k;
  for (const Item<std::int64_t>& it : instance.items) {
    out.items.push_back({static_cast<double>(it.f) / scale,
                         static_cast<double>(it.g) / scale});
  }
  return out;
}

CcssReduction ReduceCcss(const CcssInstance& c) {
  const int n = static_cast<int>(c.a.size());
  if (c.k < 1 || c.k > n) {
    throw ReductionInfeasible("subset size k must lie in [1, n]");
  }
  if (c.target <= 0) throw ReductionInfeasible("target must be positive");
  const std::int64_t two_t = internal::CheckedMul(2, c.target);
  CcssReduction red;
  red.scale = c.k;
  red.instance.k = c.k;
  for (std::int64_t a : c.a) {
    if (a <= 0) throw ReductionInfeasible("subset-sum values must be positive");
    const std::int64_t ka = internal::CheckedMul(c.k, a);
    if (ka > two_t) {
      throw ReductionInfeasible("value " + std::to_string(a) +
                                " exceeds 2*target/k; reduced g would be "
                                "negative");
    }
    red.instance.items.push_back({ka, two_t - ka});
  }
  const std::int64_t kt = internal::CheckedMul(c.k, c.target);
  red.yes_value = internal::CheckedMul(kt, kt);
  return red;
}

bool DecideCcss(const CcssInstance& c, double budget) {
  const CcssReduction red = ReduceCcss(c);
  return red.IsYes(OracleExact(red.instance, budget).value);
}

}  // namespace forumgame::nash
