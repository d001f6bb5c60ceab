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

// Domain types shared by the simulator: questions, weekly pools, the game
// configuration, and the per-round / cumulative utility records.

#ifndef FORUMGAME_CORE_H_
#define FORUMGAME_CORE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace forumgame {

// Which player's utility to read.
enum class Side { kG, kF };

// A candidate question. Utilities are deterministic scalars fixed at
// ingestion; `u_f_norm` stays empty until weekly normalization runs.
struct Question {
  std::string id;
  int week = 0;
  std::string domain;
  std::string title;
  std::string body;
  std::int64_t view_count = 0;
  double u_g = 0.0;
  std::optional<double> u_f_norm;
  // Externally supplied forum classifier score in [0, 1], if any.
  std::optional<double> forum_score;
  // Unix seconds; zero when unknown.
  std::int64_t timestamp = 0;
  // Alternative player-G utility columns (e.g. one per language model).
  std::map<std::string, double> model_utilities;

  std::string Text() const { return title + " " + body; }
  double Utility(Side side) const;
};

// Checks the per-question invariants; throws DataError on violation.
void ValidateQuestion(const Question& q);

// The candidate set of one round. Non-empty; every question carries the
// pool's week.
class RoundPool {
 public:
  RoundPool(int week, std::vector<Question> questions,
            std::optional<double> norm_stat = std::nullopt);

  int week() const { return week_; }
  const std::vector<Question>& questions() const { return questions_; }
  const Question& operator[](std::size_t i) const { return questions_[i]; }
  std::size_t size() const { return questions_.size(); }
  // Week maximum of the view counts, used for normalization.
  std::optional<double> norm_stat() const { return norm_stat_; }
  // True when the week has only zero view counts.
  bool degenerate_views() const;

 private:
  int week_;
  std::vector<Question> questions_;
  std::optional<double> norm_stat_;
};

// Maximum view count of the pool, the statistic used by SetUtility.
double MaxViewStatistic(std::span<const Question> questions);

// Returns a copy of `pool` with u_f_norm = view_count / norm_stat bound on
// every question. An all-zero week (norm_stat == 0) maps every question to
// 0. Throws ConfigError when the pool has no normalization statistic.
RoundPool SetUtility(const RoundPool& pool);

// Additive utility of a set; the empty set is worth 0. Throws ConfigError
// if side F is requested before normalization.
double UtilityOfSet(std::span<const Question> set, Side side);
double UtilityOfSet(const RoundPool& pool, std::span<const int> indices,
                    Side side);

enum class ProposalStrategy { kGreedy, kUtility, kRandom };

std::string_view ToString(ProposalStrategy s);
// Accepts "greedy", "utility", "random". Throws ConfigError otherwise.
ProposalStrategy ParseProposalStrategy(std::string_view name);

struct GameConfig {
  int m_cap = 100;
  int k_cap = 50;
  int rounds = 52;
  int retrain_period = 13;
  // Forum threshold; empty means "calibrate from validation data".
  std::optional<double> theta;
  std::uint64_t seed = 0;
  ProposalStrategy strategy_g = ProposalStrategy::kGreedy;
  std::string scorer_f = "builtin";

  // Throws ConfigError unless 0 < k_cap <= m_cap, rounds >= 1 and
  // retrain_period >= 1.
  void Validate() const;
};

// One round of play. Construct through Make, which enforces
// published ⊆ proposed and the caps.
struct SelectionOutcome {
  int week = 0;
  std::vector<std::string> proposed;
  std::vector<std::string> published;
  double u_g_realized = 0.0;
  double u_f_realized = 0.0;

  // `proposed` and `published` index into `pool`. Caps are checked when
  // given (values <= 0 disable the check).
  static SelectionOutcome Make(const RoundPool& pool,
                               std::span<const int> proposed,
                               std::span<const int> published, int m_cap = 0,
                               int k_cap = 0);

  // Ledger CSVs store counts, not ids. Outcomes read back from disk carry
  // positional placeholder ids ("#0", "#1", ...); published are the first
  // `published_count` of them.
  static SelectionOutcome FromTotals(int week, std::size_t proposed_count,
                                     std::size_t published_count, double u_g,
                                     double u_f);
};

// Full trajectory of a game. Cumulative totals are maintained by
// left-to-right summation, identical to summing the outcomes afterward.
class GameLedger {
 public:
  void Append(SelectionOutcome outcome);

  const std::vector<SelectionOutcome>& outcomes() const { return outcomes_; }
  std::size_t rounds() const { return outcomes_.size(); }
  double cum_u_g() const { return cum_u_g_; }
  double cum_u_f() const { return cum_u_f_; }
  double cum(Side side) const { return side == Side::kG ? cum_u_g_ : cum_u_f_; }

  // Totals over rounds [first, last).
  double SumRange(Side side, std::size_t first, std::size_t last) const;

  bool operator==(const GameLedger& other) const;

 private:
  std::vector<SelectionOutcome> outcomes_;
  double cum_u_g_ = 0.0;
  double cum_u_f_ = 0.0;
};

bool operator==(const SelectionOutcome& a, const SelectionOutcome& b);

}  // namespace forumgame

#endif  // FORUMGAME_CORE_H_
