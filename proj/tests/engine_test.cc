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

#include "forumgame/engine.h"

#include <algorithm>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "forumgame/data.h"
#include "forumgame/error.h"
#include "gtest/gtest.h"

namespace forumgame::engine {
namespace {

RoundPool MakePool(int week, const std::vector<double>& u_g,
                   const std::vector<std::int64_t>& views,
                   const std::vector<double>& scores = {}) {
  std::vector<Question> qs;
  for (std::size_t i = 0; i < u_g.size(); ++i) {
    Question q;
    q.id = "w" + std::to_string(week) + "q" + std::to_string(i);
    q.week = week;
    q.u_g = u_g[i];
    q.view_count = views[i];
    if (!scores.empty()) q.forum_score = scores[i];
    qs.push_back(q);
  }
  return SetUtility(RoundPool(week, qs, MaxViewStatistic(qs)));
}

strategies::ForumScorer Precomputed(double theta) {
  strategies::ForumScorer s;
  s.model = std::make_shared<strategies::PrecomputedScoringModel>();
  s.theta = theta;
  return s;
}

GameConfig Config(int rounds, int m, int k, ProposalStrategy st = ProposalStrategy::kGreedy) {
  GameConfig c;
  c.rounds = rounds;
  c.m_cap = m;
  c.k_cap = k;
  c.strategy_g = st;
  return c;
}

TEST(RunAsymmetricTest, HandTraceThroughBothStages) {
  const std::vector<RoundPool> pools = {MakePool(0, {10, 8, 50}, {1, 2, 3}, {0.9, 0.1, 0.1})};
  const GameLedger l = RunAsymmetric(pools, Config(1, 2, 1), Precomputed(0.5));
  ASSERT_EQ(l.rounds(), 1u);
  EXPECT_EQ(l.outcomes()[0].proposed, (std::vector<std::string>{"w0q2", "w0q0"}));
  EXPECT_EQ(l.outcomes()[0].published, std::vector<std::string>{"w0q0"});
  EXPECT_EQ(l.cum_u_g(), 10.0);
  EXPECT_DOUBLE_EQ(l.cum_u_f(), 1.0 / 3.0);
}

TEST(RunAsymmetricTest, RejectingScorerPublishesNothing) {
  std::vector<RoundPool> pools;
  for (int w = 0; w < 3; ++w) pools.push_back(MakePool(w, {1, 2, 3}, {3, 2, 1}, {0.2, 0.3, 0.4}));
  const GameLedger l = RunAsymmetric(pools, Config(3, 3, 2), Precomputed(0.9));
  for (const SelectionOutcome& o : l.outcomes()) EXPECT_TRUE(o.published.empty());
  EXPECT_EQ(l.cum_u_g(), 0.0);
  EXPECT_EQ(l.cum_u_f(), 0.0);
}

TEST(RunAsymmetricTest, ConfigThetaOverridesScorer) {
  const std::vector<RoundPool> pools = {MakePool(0, {1, 2}, {1, 1}, {0.5, 0.6})};
  GameConfig c = Config(1, 2, 2);
  c.theta = 0.55;
  EXPECT_EQ(RunAsymmetric(pools, c, Precomputed(0.0)).outcomes()[0].published.size(), 1u);
}

TEST(RunAsymmetricTest, TooFewPoolsIsConfigError) {
  const std::vector<RoundPool> pools = {MakePool(0, {1}, {1}, {1})};
  EXPECT_THROW(RunAsymmetric(pools, Config(2, 1, 1), Precomputed(0)), ConfigError);
  EXPECT_THROW(RunAsymmetric(pools, Config(1, 1, 2), Precomputed(0)), ConfigError);
}

struct Scenario {
  std::vector<RoundPool> simulation;
  strategies::ForumScorer scorer;
};

Scenario SmallScenario(std::uint64_t seed) {
  data::SyntheticSpec spec;
  spec.weeks = 45;
  spec.questions_per_week = 60;
  spec.topic_effect = 0.5;
  spec.utility_correlation = 0.0;
  spec.seed = seed;
  const data::Dataset d = data::GenerateSynthetic(spec).dataset;
  const data::Split split = data::SplitPretrain(d, 5);
  return {split.simulation, strategies::TrainTextForumScorer(split.train, split.validation)};
}

TEST(RunAsymmetricTest, CapsAndSubsetInvariantsHold) {
  const Scenario s = SmallScenario(3);
  for (ProposalStrategy st :
       {ProposalStrategy::kGreedy, ProposalStrategy::kUtility, ProposalStrategy::kRandom}) {
    const GameLedger l = RunAsymmetric(s.simulation, Config(40, 20, 8, st), s.scorer);
    ASSERT_EQ(l.rounds(), 40u);
    double cg = 0;
    for (const SelectionOutcome& o : l.outcomes()) {
      EXPECT_LE(o.proposed.size(), 20u);
      EXPECT_LE(o.published.size(), 8u);
      for (const std::string& id : o.published) {
        EXPECT_NE(std::find(o.proposed.begin(), o.proposed.end(), id), o.proposed.end());
      }
      cg += o.u_g_realized;
    }
    EXPECT_EQ(cg, l.cum_u_g());
  }
}

TEST(RunAsymmetricTest, RetrainsAtPeriodBoundaries) {
  const Scenario s = SmallScenario(4);
  GameConfig c = Config(40, 20, 8, ProposalStrategy::kUtility);
  const AsymmetricResult r = RunAsymmetricDetailed(s.simulation, c, s.scorer);
  EXPECT_EQ(r.retrain_rounds, (std::vector<int>{13, 26, 39}));
  EXPECT_TRUE(r.final_model.trained());
  c.strategy_g = ProposalStrategy::kGreedy;
  EXPECT_TRUE(RunAsymmetricDetailed(s.simulation, c, s.scorer).retrain_rounds.empty());
}

TEST(RunAsymmetricTest, DeterministicForFixedSeed) {
  const Scenario s = SmallScenario(5);
  for (ProposalStrategy st : {ProposalStrategy::kUtility, ProposalStrategy::kRandom}) {
    GameConfig c = Config(40, 20, 8, st);
    c.seed = 11;
    const GameLedger a = RunAsymmetric(s.simulation, c, s.scorer);
    const GameLedger b = RunAsymmetric(s.simulation, c, s.scorer);
    EXPECT_EQ(a, b);
    std::ostringstream wa, wb;
    WriteLedgerCsv(a, wa);
    WriteLedgerCsv(b, wb);
    EXPECT_EQ(wa.str(), wb.str());
  }
}

TEST(RunAsymmetricTest, WithoutAcceptanceModelUtilityEqualsGreedy) {
  const Scenario s = SmallScenario(6);
  AsymmetricOptions off;
  off.learn_acceptance = false;
  const GameLedger u =
      RunAsymmetric(s.simulation, Config(40, 20, 8, ProposalStrategy::kUtility), s.scorer, off);
  const GameLedger g =
      RunAsymmetric(s.simulation, Config(40, 20, 8, ProposalStrategy::kGreedy), s.scorer);
  EXPECT_EQ(u, g);
}

TEST(RunFullInformationTest, GreedyNpHandTrace) {
  // f = views / 5 = (1, 0.8, 0.6), g = (1, 10, 2): picks {0, 1}, Nash product
  // (1.8)(11) = 99 / 5.
  const std::vector<RoundPool> pools = {MakePool(0, {1, 10, 2}, {5, 4, 3})};
  const GameLedger l = RunFullInformation(pools, nash::Heuristic::kGreedyNp, 2);
  EXPECT_EQ(l.outcomes()[0].published, (std::vector<std::string>{"w0q0", "w0q1"}));
  EXPECT_DOUBLE_EQ(l.cum_u_f() * l.cum_u_g() * 5.0, 99.0);
}

TEST(RunFullInformationTest, SaturatedCapAndReproducibleRandom) {
  std::vector<RoundPool> pools = {MakePool(0, {1, 2, 3}, {3, 1, 2}),
                                  MakePool(1, {5, 1, 1, 2}, {1, 1, 4, 2})};
  const GameLedger all = RunFullInformation(pools, nash::Heuristic::kMaxSp, 10);
  EXPECT_EQ(all.outcomes()[0].published.size(), 3u);
  EXPECT_EQ(all.outcomes()[1].published.size(), 4u);
  EXPECT_EQ(all.cum_u_g(), 6.0 + 9.0);
  EXPECT_EQ(RunFullInformation(pools, nash::Heuristic::kRandom, 2, 9),
            RunFullInformation(pools, nash::Heuristic::kRandom, 2, 9));
  const GameLedger random = RunFullInformation(pools, nash::Heuristic::kRandom, 2, 9);
  for (const SelectionOutcome& o : random.outcomes()) {
    EXPECT_EQ(o.published.size(), 2u);
    EXPECT_EQ(o.proposed, o.published);
  }
}

GameLedger Totals(double u_g, double u_f) {
  GameLedger l;
  l.Append(SelectionOutcome::FromTotals(0, 1, 1, u_g, u_f));
  return l;
}

TEST(ComputeEurrTest, RatioAndPerPlayerMaxima) {
  const std::vector<NamedLedger> full = {
      {"MPP", Totals(80, 10)}, {"MaxSP", Totals(40, 20)}, {"GreedyNP", Totals(100, 5)}};
  const EurrReport r = ComputeEurr(Totals(50, 10), full);
  EXPECT_EQ(r.tilde_u_g, 100.0);
  EXPECT_EQ(r.tilde_u_f, 20.0);
  EXPECT_EQ(r.best_heuristic_g, "GreedyNP");
  EXPECT_EQ(r.best_heuristic_f, "MaxSP");
  EXPECT_EQ(r.eurr_g, 0.5);
  EXPECT_EQ(r.eurr_f, 0.5);
}

TEST(ComputeEurrTest, IdentityTiesAndErrors) {
  const std::vector<NamedLedger> full = {{"A", Totals(7, 3)}, {"B", Totals(7, 3)}};
  const EurrReport r = ComputeEurr(full[1].ledger, full);
  EXPECT_EQ(r.eurr_g, 1.0);
  EXPECT_EQ(r.eurr_f, 1.0);
  EXPECT_EQ(r.best_heuristic_g, "A");
  EXPECT_THROW(ComputeEurr(Totals(1, 1), std::vector<NamedLedger>{}), InvalidArgument);
  const std::vector<NamedLedger> zero = {{"A", Totals(0, 3)}};
  EXPECT_THROW(ComputeEurr(Totals(1, 1), zero), UndefinedRateError);
}

TEST(ExactUrrTest, ThreeQuestionExample) {
  // u_g = (3, 1, 2), u_f = (1, 3, 2) / 3: optimum {0, 1}.
  const std::vector<RoundPool> pools = {MakePool(0, {3, 1, 2}, {1, 3, 2})};
  GameLedger asym;
  asym.Append(SelectionOutcome::Make(pools[0], std::vector<int>{0}, std::vector<int>{0}));
  const UrrReport r = ExactUrr(asym, pools, 2);
  EXPECT_EQ(r.optimum_sets, (std::vector<std::vector<int>>{{0, 1}}));
  EXPECT_DOUBLE_EQ(r.urr_g, 0.75);
  EXPECT_DOUBLE_EQ(r.urr_f, 0.25);

  GameLedger same;
  same.Append(SelectionOutcome::Make(pools[0], std::vector<int>{0, 1}, std::vector<int>{0, 1}));
  EXPECT_DOUBLE_EQ(ExactUrr(same, pools, 2).urr_g, 1.0);
  EXPECT_DOUBLE_EQ(ExactUrr(same, pools, 2).urr_f, 1.0);

  GameLedger empty;
  empty.Append(SelectionOutcome::Make(pools[0], std::vector<int>{0}, std::vector<int>{}));
  EXPECT_EQ(ExactUrr(empty, pools, 2).urr_g, 0.0);
}

TEST(ExactUrrTest, BudgetExceededSuggestsEurr) {
  std::vector<double> u(30, 1.0);
  std::vector<std::int64_t> v(30, 1);
  const std::vector<RoundPool> pools = {MakePool(0, u, v)};
  GameLedger asym;
  asym.Append(SelectionOutcome::Make(pools[0], std::vector<int>{0}, std::vector<int>{0}));
  try {
    ExactUrr(asym, pools, 10, 1000);
    FAIL();
  } catch (const InstanceTooLarge& e) {
    EXPECT_NE(std::string(e.what()).find("eurr"), std::string::npos);
  }
}

TEST(LedgerCsvTest, RoundTripsAndRewritesIdentically) {
  GameLedger l;
  l.Append(SelectionOutcome::FromTotals(13, 100, 50, 1234.5678901234567, 0.1));
  l.Append(SelectionOutcome::FromTotals(14, 100, 0, 0.0, 0.0));
  l.Append(SelectionOutcome::FromTotals(15, 80, 3, 1e-300, 2.0 / 3.0));
  std::ostringstream out;
  WriteLedgerCsv(l, out, "abc123");
  EXPECT_EQ(out.str().substr(0, 21), "# manifest_hash=abc12");
  std::istringstream in(out.str());
  const GameLedger back = ReadLedgerCsv(in);
  EXPECT_EQ(back, l);
  std::ostringstream again;
  WriteLedgerCsv(back, again, "abc123");
  EXPECT_EQ(again.str(), out.str());
}

TEST(LedgerCsvTest, RejectsMalformedFiles) {
  const std::string header = "week,proposed,published,u_g_realized,u_f_realized,cum_u_g,cum_u_f\n";
  for (const std::string& text :
       {std::string(""), std::string("a,b\n"), header + "1,2,3,4,5,6,7\n",
        header + "1,2,1,x,5,6,7\n", header + "1,2,1\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(ReadLedgerCsv(in), DataError) << text;
  }
}

TEST(ReportJsonTest, ContainsEurrFields) {
  EurrReport r;
  r.eurr_g = 0.521;
  r.eurr_f = 0.664;
  r.best_heuristic_g = "GreedyNP";
  const std::string j = EurrReportJson(r, "h");
  for (const char* key : {"\"eurr_g\": 0.521", "\"eurr_f\": 0.664", "\"manifest_hash\": \"h\"",
                          "\"best_heuristic_g\": \"GreedyNP\"", "under-estimates"}) {
    EXPECT_NE(j.find(key), std::string::npos) << key;
  }
}

}  // namespace
}  // namespace forumgame::engine
