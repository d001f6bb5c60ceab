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

#include <vector>

#include "forumgame/error.h"
#include "forumgame/random.h"
#include "gtest/gtest.h"

namespace forumgame {
namespace {

Question MakeQuestion(std::string id, int week, std::int64_t views,
                      double u_g = 1.0) {
  Question q;
  q.id = std::move(id);
  q.week = week;
  q.view_count = views;
  q.u_g = u_g;
  return q;
}

RoundPool PoolWithViews(const std::vector<std::int64_t>& views) {
  std::vector<Question> qs;
  for (std::size_t i = 0; i < views.size(); ++i) {
    qs.push_back(MakeQuestion("q" + std::to_string(i), 3, views[i]));
  }
  return RoundPool(3, qs, MaxViewStatistic(qs));
}

std::vector<double> Normalized(const RoundPool& pool) {
  std::vector<double> out;
  for (const Question& q : pool.questions()) out.push_back(*q.u_f_norm);
  return out;
}

TEST(SetUtilityTest, MaxNormalization) {
  EXPECT_EQ(Normalized(SetUtility(PoolWithViews({10, 40, 50}))),
            (std::vector<double>{0.2, 0.8, 1.0}));
}

TEST(SetUtilityTest, Singleton) {
  EXPECT_EQ(Normalized(SetUtility(PoolWithViews({7}))),
            std::vector<double>{1.0});
}

TEST(SetUtilityTest, AllZeroWeekMapsToZero) {
  const RoundPool pool = SetUtility(PoolWithViews({0, 0}));
  EXPECT_EQ(Normalized(pool), (std::vector<double>{0.0, 0.0}));
  EXPECT_TRUE(pool.degenerate_views());
}

TEST(SetUtilityTest, MissingStatisticIsConfigError) {
  RoundPool pool(0, {MakeQuestion("a", 0, 5)});
  EXPECT_THROW(SetUtility(pool), ConfigError);
}

TEST(RoundPoolTest, RejectsEmptyAndMixedWeeks) {
  EXPECT_THROW(RoundPool(0, {}), DataError);
  EXPECT_THROW(RoundPool(0, {MakeQuestion("a", 0, 1), MakeQuestion("b", 1, 1)}),
               DataError);
}

TEST(UtilityOfSetTest, Examples) {
  EXPECT_EQ(UtilityOfSet(std::span<const Question>{}, Side::kG), 0.0);
  Question a = MakeQuestion("a", 0, 0, 2.0);
  a.u_f_norm = 3.0;  // Utility algebra does not care about the [0,1] range.
  Question b = MakeQuestion("b", 0, 0, 1.0);
  b.u_f_norm = 1.0;
  const std::vector<Question> set = {a, b};
  EXPECT_EQ(UtilityOfSet(set, Side::kG), 3.0);
  EXPECT_EQ(UtilityOfSet(set, Side::kF), 4.0);
}

TEST(UtilityOfSetTest, ForumSideRequiresNormalization) {
  const std::vector<Question> set = {MakeQuestion("a", 0, 3)};
  EXPECT_THROW(UtilityOfSet(set, Side::kF), ConfigError);
}

TEST(UtilityOfSetTest, AdditiveProperty) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Question> set;
    const int n = 1 + static_cast<int>(rng.UniformIndex(20));
    for (int i = 0; i < n; ++i) {
      Question q = MakeQuestion("q" + std::to_string(i), 0, 0,
                                rng.UniformDouble() * 100);
      q.u_f_norm = rng.UniformDouble();
      set.push_back(q);
    }
    const std::span<const Question> all(set);
    for (Side side : {Side::kG, Side::kF}) {
      EXPECT_EQ(UtilityOfSet(all, side),
                UtilityOfSet(all.first(n - 1), side) +
                    set.back().Utility(side));
    }
  }
}

TEST(SelectionOutcomeTest, RejectsPublishedOutsideProposal) {
  const RoundPool pool = SetUtility(PoolWithViews({1, 2, 3}));
  const std::vector<int> proposed = {0, 1};
  const std::vector<int> bad = {2};
  EXPECT_THROW(SelectionOutcome::Make(pool, proposed, bad), InvalidArgument);
  const std::vector<int> ok = {1};
  const SelectionOutcome out = SelectionOutcome::Make(pool, proposed, ok);
  EXPECT_EQ(out.published, std::vector<std::string>{"q1"});
  EXPECT_DOUBLE_EQ(out.u_f_realized, 2.0 / 3.0);
}

TEST(SelectionOutcomeTest, EnforcesCaps) {
  const RoundPool pool = SetUtility(PoolWithViews({1, 2, 3}));
  const std::vector<int> proposed = {0, 1, 2};
  const std::vector<int> published = {0, 1};
  EXPECT_THROW(SelectionOutcome::Make(pool, proposed, published, 2, 2),
               InvalidArgument);
  EXPECT_THROW(SelectionOutcome::Make(pool, proposed, published, 3, 1),
               InvalidArgument);
  EXPECT_NO_THROW(SelectionOutcome::Make(pool, proposed, published, 3, 2));
}

TEST(GameLedgerTest, CumulativeTotalsMatchSumWithoutDrift) {
  Rng rng(5);
  GameLedger ledger;
  for (int t = 0; t < 10000; ++t) {
    ledger.Append(SelectionOutcome::FromTotals(t, 2, 1, rng.UniformDouble() * 1e3,
                                               rng.UniformDouble()));
  }
  double g = 0.0, f = 0.0;
  for (const SelectionOutcome& o : ledger.outcomes()) {
    g += o.u_g_realized;
    f += o.u_f_realized;
  }
  EXPECT_EQ(ledger.cum_u_g(), g);
  EXPECT_EQ(ledger.cum_u_f(), f);
  EXPECT_EQ(ledger.SumRange(Side::kG, 0, ledger.rounds()), g);
  EXPECT_EQ(ledger.rounds(), 10000u);
}

TEST(GameConfigTest, Validation) {
  GameConfig c;
  EXPECT_NO_THROW(c.Validate());
  c.k_cap = 101;
  EXPECT_THROW(c.Validate(), ConfigError);
  c = GameConfig{};
  c.rounds = 0;
  EXPECT_THROW(c.Validate(), ConfigError);
  c = GameConfig{};
  c.retrain_period = 0;
  EXPECT_THROW(c.Validate(), ConfigError);
  c = GameConfig{};
  c.k_cap = 0;
  EXPECT_THROW(c.Validate(), ConfigError);
}

TEST(ProposalStrategyTest, ParseRoundTrip) {
  for (ProposalStrategy s : {ProposalStrategy::kGreedy, ProposalStrategy::kUtility,
                             ProposalStrategy::kRandom}) {
    EXPECT_EQ(ParseProposalStrategy(ToString(s)), s);
  }
  EXPECT_THROW(ParseProposalStrategy("oracle"), ConfigError);
}

TEST(RngTest, SubsetIsSortedDistinctAndSeeded) {
  Rng a(42), b(42);
  const std::vector<int> s = a.Subset(30, 7);
  EXPECT_EQ(s, b.Subset(30, 7));
  ASSERT_EQ(s.size(), 7u);
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_LT(s[i - 1], s[i]);
  EXPECT_NE(DeriveSeed(1, 0), DeriveSeed(1, 1));
}

}  // namespace
}  // namespace forumgame
