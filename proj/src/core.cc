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

#include "forumgame/core.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "forumgame/error.h"

namespace forumgame {

double Question::Utility(Side side) const {
  if (side == Side::kG) return u_g;
  if (!u_f_norm.has_value()) {
    throw ConfigError("question '" + id + "' has no normalized forum utility");
  }
  return *u_f_norm;
}

void ValidateQuestion(const Question& q) {
  if (q.id.empty()) throw DataError("question with empty id");
  if (q.view_count < 0) {
    throw DataError("question '" + q.id + "' has negative view_count");
  }
  if (!(q.u_g >= 0.0) || !std::isfinite(q.u_g)) {
    throw DataError("question '" + q.id + "' has invalid u_g");
  }
  if (q.u_f_norm && !(*q.u_f_norm >= 0.0 && *q.u_f_norm <= 1.0)) {
    throw DataError("question '" + q.id + "' has u_f_norm outside [0,1]");
  }
  if (q.forum_score && !(*q.forum_score >= 0.0 && *q.forum_score <= 1.0)) {
    throw DataError("question '" + q.id + "' has forum_score outside [0,1]");
  }
}

RoundPool::RoundPool(int week, std::vector<Question> questions,
                     std::optional<double> norm_stat)
    : week_(week), questions_(std::move(questions)), norm_stat_(norm_stat) {
  if (questions_.empty()) {
    throw DataError("round pool for week " + std::to_string(week) +
                    " is empty");
  }
  for (const Question& q : questions_) {
    if (q.week != week_) {
      throw DataError("question '" + q.id + "' belongs to week " +
                      std::to_string(q.week) + ", not " +
                      std::to_string(week_));
    }
  }
}

bool RoundPool::degenerate_views() const {
  return std::all_of(questions_.begin(), questions_.end(),
                     [](const Question& q) { return q.view_count == 0; });
}

double MaxViewStatistic(std::span<const Question> questions) {
  std::int64_t best = 0;
  for (const Question& q : questions) best = std::max(best, q.view_count);
  return static_cast<double>(best);
}

RoundPool SetUtility(const RoundPool& pool) {
  if (!pool.norm_stat().has_value()) {
    throw ConfigError("week " + std::to_string(pool.week()) +
                      " has no normalization statistic");
  }
  const double stat = *pool.norm_stat();
  std::vector<Question> out = pool.questions();
  for (Question& q : out) {
    q.u_f_norm =
        stat > 0.0 ? std::clamp(static_cast<double>(q.view_count) / stat, 0.0, 1.0)
                   : 0.0;
  }
  return RoundPool(pool.week(), std::move(out), stat);
}

double UtilityOfSet(std::span<const Question> set, Side side) {
  double total = 0.0;
  for (const Question& q : set) total += q.Utility(side);
  return total;
}

double UtilityOfSet(const RoundPool& pool, std::span<const int> indices,
                    Side side) {
  double total = 0.0;
  for (int i : indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= pool.size()) {
      throw InvalidArgument("question index out of range");
    }
    total += pool[i].Utility(side);
  }
  return total;
}

std::string_view ToString(ProposalStrategy s) {
  switch (s) {
    case ProposalStrategy::kGreedy:
      return "greedy";
    case ProposalStrategy::kUtility:
      return "utility";
    case ProposalStrategy::kRandom:
      return "random";
  }
  return "unknown";
}

ProposalStrategy ParseProposalStrategy(std::string_view name) {
  if (name == "greedy") return ProposalStrategy::kGreedy;
  if (name == "utility") return ProposalStrategy::kUtility;
  if (name == "random") return ProposalStrategy::kRandom;
  throw ConfigError("unknown strategy '" + std::string(name) +
                    "' (expected greedy, utility or random)");
}

void GameConfig::Validate() const {
  if (k_cap <= 0) throw ConfigError("k_cap must be positive");
  if (k_cap > m_cap) {
    throw ConfigError("k_cap (" + std::to_string(k_cap) +
                      ") must not exceed m_cap (" + std::to_string(m_cap) + ")");
  }
  if (rounds < 1) throw ConfigError("rounds must be at least 1");
  if (retrain_period < 1) throw ConfigError("retrain_period must be at least 1");
  if (theta && !(*theta >= 0.0 && *theta <= 1.0)) {
    throw ConfigError("theta must lie in [0,1]");
  }
}

SelectionOutcome SelectionOutcome::Make(const RoundPool& pool,
                                        std::span<const int> proposed,
                                        std::span<const int> published,
                                        int m_cap, int k_cap) {
  if (m_cap > 0 && proposed.size() > static_cast<std::size_t>(m_cap)) {
    throw InvalidArgument("proposal exceeds M");
  }
  if (k_cap > 0 && published.size() > static_cast<std::size_t>(k_cap)) {
    throw InvalidArgument("publication exceeds K");
  }
  std::set<int> proposed_set;
  for (int i : proposed) {
    if (i < 0 || static_cast<std::size_t>(i) >= pool.size()) {
      throw InvalidArgument("proposed index out of range");
    }
    if (!proposed_set.insert(i).second) {
      throw InvalidArgument("duplicate question in proposal");
    }
  }
  std::set<int> published_set;
  for (int i : published) {
    if (!proposed_set.count(i)) {
      throw InvalidArgument("published question was not proposed");
    }
    if (!published_set.insert(i).second) {
      throw InvalidArgument("duplicate question in publication");
    }
  }
  SelectionOutcome out;
  out.week = pool.week();
  for (int i : proposed) out.proposed.push_back(pool[i].id);
  for (int i : published) out.published.push_back(pool[i].id);
  out.u_g_realized = UtilityOfSet(pool, published, Side::kG);
  out.u_f_realized = UtilityOfSet(pool, published, Side::kF);
  return out;
}

SelectionOutcome SelectionOutcome::FromTotals(int week,
                                              std::size_t proposed_count,
                                              std::size_t published_count,
                                              double u_g, double u_f) {
  if (published_count > proposed_count) {
    throw InvalidArgument("published count exceeds proposed count");
  }
  SelectionOutcome out;
  out.week = week;
  for (std::size_t i = 0; i < proposed_count; ++i) {
    out.proposed.push_back("#" + std::to_string(i));
  }
  out.published.assign(out.proposed.begin(),
                       out.proposed.begin() + published_count);
  out.u_g_realized = u_g;
  out.u_f_realized = u_f;
  return out;
}

bool operator==(const SelectionOutcome& a, const SelectionOutcome& b) {
  return a.week == b.week && a.proposed == b.proposed &&
         a.published == b.published && a.u_g_realized == b.u_g_realized &&
         a.u_f_realized == b.u_f_realized;
}

void GameLedger::Append(SelectionOutcome outcome) {
  cum_u_g_ += outcome.u_g_realized;
  cum_u_f_ += outcome.u_f_realized;
  outcomes_.push_back(std::move(outcome));
}

double GameLedger::SumRange(Side side, std::size_t first,
                            std::size_t last) const {
  last = std::min(last, outcomes_.size());
  double total = 0.0;
  for (std::size_t i = first; i < last; ++i) {
    total += side == Side::kG ? outcomes_[i].u_g_realized
                              : outcomes_[i].u_f_realized;
  }
  return total;
}

bool GameLedger::operator==(const GameLedger& other) const {
  return outcomes_ == other.outcomes_ && cum_u_g_ == other.cum_u_g_ &&
         cum_u_f_ == other.cum_u_f_;
}

}  // namespace forumgame
