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

// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "forumgame/acceptance_model.h"
#include "forumgame/cli/cli.h"
#include "forumgame/core.h"
#include "forumgame/data.h"
#include "forumgame/engine.h"
#include "forumgame/error.h"
#include "forumgame/nash_opt.h"
#include "forumgame/random.h"
#include "forumgame/stats.h"
#include "forumgame/strategies.h"

namespace fg = forumgame;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // <= 0: untimed
  std::function<Verdict()> run;
};

std::string Fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

// 1. Heuristics never beat the exact optimum.
Verdict OracleDominance() {
  fg::Rng rng(20240601);
  int violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    fg::nash::IntegerInstance inst;
    inst.k = 4;
    for (int i = 0; i < 15; ++i) {
      inst.items.push_back({static_cast<std::int64_t>(1 + rng.UniformIndex(100)),
                            static_cast<std::int64_t>(1 + rng.UniformIndex(100))});
    }
    const std::int64_t best = fg::nash::OracleExact(inst).value;
    for (fg::nash::Heuristic h : fg::nash::kAllHeuristics) {
      const std::vector<int> s = fg::nash::RunHeuristic(h, inst, fg::DeriveSeed(7, trial));
      if (fg::nash::NashObjective(inst, std::span<const int>(s)) > best) ++violations;
    }
  }
  return {violations == 0, std::to_string(violations) + " violations over 200 instances x 4 heuristics"};
}

// Brute-force subset-sum decision, independent of the reduction.
bool HasKSubsetSum(const std::vector<std::int64_t>& a, int k, std::int64_t target) {
  const int n = static_cast<int>(a.size());
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::int64_t s = 0;
    for (int i : idx) s += a[i];
    if (s == target) return true;
    int p = k - 1;
    while (p >= 0 && idx[p] == n - k + p) --p;
    if (p < 0) return false;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

// 2. Planted yes-instances reach T^2 exactly; perturbed no-instances fall short.
Verdict ReductionFidelity() {
  fg::Rng rng(777);
  int yes_ok = 0, no_ok = 0, not_checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + static_cast<int>(rng.UniformIndex(5));           // 2..6
    const int n = k + 1 + static_cast<int>(rng.UniformIndex(18 - k));  // k+1..18
    std::vector<std::int64_t> planted(k);
    std::int64_t target = 0;
    for (std::int64_t& x : planted) {
      // Planted values in [20, 39] stay below 2T/k >= 40.
      x = 20 + static_cast<std::int64_t>(rng.UniformIndex(20));
      target += x;
    }
    // Every element must satisfy k * a_i <= 2T.
    const std::int64_t cap = 2 * target / k;
    fg::nash::CcssInstance yes;
    yes.k = k;
    yes.target = target;
    yes.a = planted;
    while (static_cast<int>(yes.a.size()) < n) {
      yes.a.push_back(1 + static_cast<std::int64_t>(rng.UniformIndex(cap)));
    }
    for (int i = n - 1; i > 0; --i) {
      std::swap(yes.a[i], yes.a[rng.UniformIndex(i + 1)]);
    }
    const fg::nash::CcssReduction ry = fg::nash::ReduceCcss(yes);
    const std::int64_t opt_y = fg::nash::OracleExact(ry.instance).value;
    const std::int64_t k2 = static_cast<std::int64_t>(k) * k;
    // Optimum / k^2 is the unscaled optimum, compared as an exact rational.
    if (opt_y % k2 == 0 && opt_y / k2 == target * target) ++yes_ok;

    // Doubling every element and the target, then adding one, leaves an odd
    // target that no sum of even elements can reach.
    fg::nash::CcssInstance no = yes;
    for (std::int64_t& x : no.a) x *= 2;
    no.target = 2 * target + 1;
    if (HasKSubsetSum(no.a, k, no.target)) {
      ++not_checked;
      continue;
    }
    const fg::nash::CcssReduction rn = fg::nash::ReduceCcss(no);
    const std::int64_t opt_n = fg::nash::OracleExact(rn.instance).value;
    // opt_n / k^2 < T^2  <=>  opt_n < k^2 T^2 in integers.
    if (opt_n < k2 * no.target * no.target) ++no_ok;
  }
  return {yes_ok == 100 && no_ok == 100 && not_checked == 0,
          std::to_string(yes_ok) + "/100 yes-instances equal T^2, " + std::to_string(no_ok) +
              "/100 no-instances below T^2"};
}

// 3. Full-information skew pattern on negatively correlated utilities.
Verdict HeuristicSkew() {
  int skew = 0, random_worst = 0;
  const int runs = 50;
  for (int seed = 1; seed <= runs; ++seed) {
    fg::data::SyntheticSpec spec;
    spec.weeks = 52;
    spec.questions_per_week = 400;
    spec.utility_correlation = -0.5;
    spec.seed = static_cast<std::uint64_t>(seed);
    const fg::data::Dataset d = fg::data::GenerateSynthetic(spec).dataset;
    std::map<fg::nash::Heuristic, fg::GameLedger> l;
    for (fg::nash::Heuristic h : fg::nash::kAllHeuristics) {
      l[h] = fg::engine::RunFullInformation(d.pools, h, 50, static_cast<std::uint64_t>(seed));
    }
    using H = fg::nash::Heuristic;
    bool maxsp_best_f = true, random_low = true;
    for (H h : fg::nash::kAllHeuristics) {
      if (h != H::kMaxSp && l[h].cum_u_f() >= l[H::kMaxSp].cum_u_f()) maxsp_best_f = false;
      if (h != H::kRandom && (l[H::kRandom].cum_u_f() >= l[h].cum_u_f() ||
                              l[H::kRandom].cum_u_g() >= l[h].cum_u_g())) {
        random_low = false;
      }
    }
    if (maxsp_best_f && l[H::kGreedyNp].cum_u_g() > l[H::kMaxSp].cum_u_g()) ++skew;
    if (random_low) ++random_worst;
  }
  return {skew >= 40 && random_worst >= 48,
          "skew pattern in " + std::to_string(skew) + "/50 runs, Random strictly worst in " +
              std::to_string(random_worst) + "/50"};
}

// 4. G-Utility beats G-Greedy when acceptance depends on a latent topic.
Verdict UtilityAdvantage() {
  const int seeds = 20;
  double ratio_sum = 0.0, f_util = 0.0, f_greedy = 0.0;
  for (int seed = 1; seed <= seeds; ++seed) {
    fg::data::SyntheticSpec spec;
    spec.topic_effect = 0.5;
    spec.seed = static_cast<std::uint64_t>(seed);
    const fg::data::Dataset d = fg::data::GenerateSynthetic(spec).dataset;
    const fg::data::Split split = fg::data::SplitPretrain(d, 13);
    const fg::strategies::ForumScorer scorer =
        fg::strategies::TrainTextForumScorer(split.train, split.validation);
    fg::GameConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(seed);
    cfg.strategy_g = fg::ProposalStrategy::kUtility;
    const fg::GameLedger u = fg::engine::RunAsymmetric(split.simulation, cfg, scorer);
    cfg.strategy_g = fg::ProposalStrategy::kGreedy;
    const fg::GameLedger g = fg::engine::RunAsymmetric(split.simulation, cfg, scorer);
    // Rounds 14..52 are indices 13..51.
    ratio_sum += u.SumRange(fg::Side::kG, 13, 52) / g.SumRange(fg::Side::kG, 13, 52);
    f_util += u.SumRange(fg::Side::kF, 13, 52);
    f_greedy += g.SumRange(fg::Side::kF, 13, 52);
  }
  const double mean_ratio = ratio_sum / seeds;
  return {mean_ratio >= 1.10 && f_util > f_greedy,
          "mean u_g ratio " + Fmt("%.3f", mean_ratio) + ", mean forum utility " +
              Fmt("%.3f", f_util / seeds) + " vs " + Fmt("%.3f", f_greedy / seeds)};
}

// 5. With P(accept) = 1 the utility strategy reduces to greedy.
Verdict ArgmaxInvariance() {
  int identical = 0, total = 0;
  for (int seed = 1; seed <= 5; ++seed) {
    fg::data::SyntheticSpec spec;
    spec.weeks = 30;
    spec.questions_per_week = 120;
    spec.topic_effect = 0.3 * seed / 5.0;
    spec.utility_correlation = -0.4 + 0.2 * seed;
    spec.seed = static_cast<std::uint64_t>(seed);
    const fg::data::Dataset d = fg::data::GenerateSynthetic(spec).dataset;
    const fg::data::Split split = fg::data::SplitPretrain(d, 5);
    const fg::strategies::ForumScorer scorer =
        fg::strategies::TrainTextForumScorer(split.train, split.validation);
    fg::GameConfig cfg;
    cfg.rounds = 25;
    cfg.m_cap = 40;
    cfg.k_cap = 15;
    cfg.seed = static_cast<std::uint64_t>(seed);
    fg::engine::AsymmetricOptions off;
    off.learn_acceptance = false;
    cfg.strategy_g = fg::ProposalStrategy::kUtility;
    const fg::GameLedger u = fg::engine::RunAsymmetric(split.simulation, cfg, scorer, off);
    cfg.strategy_g = fg::ProposalStrategy::kGreedy;
    const fg::GameLedger g = fg::engine::RunAsymmetric(split.simulation, cfg, scorer, off);
    ++total;
    if (u == g) ++identical;
  }
  return {identical == total,
          std::to_string(identical) + "/" + std::to_string(total) + " datasets give identical ledgers"};
}

// 6. EURR <= URR and both within [0, 1] at desk scale.
Verdict UrrRelationship() {
  int order_violations = 0, g_side = 0, f_side = 0, range_violations = 0, checks = 0;
  std::string first_problem;
  const double slack = 1e-12;
  for (int seed = 1; seed <= 20; ++seed) {
    fg::data::SyntheticSpec spec;
    spec.weeks = 39;
    spec.questions_per_week = 20;
    spec.topic_effect = 0.5;
    spec.seed = static_cast<std::uint64_t>(seed);
    const fg::data::Dataset d = fg::data::GenerateSynthetic(spec).dataset;
    const fg::data::Split split = fg::data::SplitPretrain(d, 13);
    const fg::strategies::ForumScorer scorer =
        fg::strategies::TrainTextForumScorer(split.train, split.validation);
    fg::GameConfig cfg;
    cfg.rounds = 26;
    cfg.m_cap = 10;
    cfg.k_cap = 4;
    cfg.seed = static_cast<std::uint64_t>(seed);
    const std::vector<fg::RoundPool> window(split.simulation.begin(),
                                            split.simulation.begin() + cfg.rounds);
    std::vector<fg::engine::NamedLedger> full;
    for (fg::nash::Heuristic h : fg::nash::kAllHeuristics) {
      full.push_back({std::string(fg::nash::ToString(h)),
                      fg::engine::RunFullInformation(window, h, cfg.k_cap, cfg.seed)});
    }
    for (fg::ProposalStrategy st : {fg::ProposalStrategy::kGreedy,
                                    fg::ProposalStrategy::kUtility,
                                    fg::ProposalStrategy::kRandom}) {
      cfg.strategy_g = st;
      const fg::GameLedger l = fg::engine::RunAsymmetric(window, cfg, scorer);
      const fg::engine::EurrReport e = fg::engine::ComputeEurr(l, full);
      const fg::engine::UrrReport u = fg::engine::ExactUrr(l, window, cfg.k_cap);
      ++checks;
      const bool order_g = e.eurr_g <= u.urr_g * (1 + slack);
      const bool order_f = e.eurr_f <= u.urr_f * (1 + slack);
      const bool order = order_g && order_f;
      g_side += !order_g;
      f_side += !order_f;
      const bool range = e.eurr_g >= 0 && e.eurr_f >= 0 && u.urr_g >= 0 && u.urr_f >= 0 &&
                         e.eurr_g <= 1 + slack && e.eurr_f <= 1 + slack &&
                         u.urr_g <= 1 + slack && u.urr_f <= 1 + slack;
      if (!order) ++order_violations;
      if (!range) ++range_violations;
      if ((!order || !range) && first_problem.empty()) {
        first_problem = "; first at seed " + std::to_string(seed) + " " +
                        std::string(fg::ToString(st)) + ": EURR_G " + Fmt("%.4f", e.eurr_g) +
                        " URR_G " + Fmt("%.4f", u.urr_g) + " EURR_F " + Fmt("%.4f", e.eurr_f) +
                        " URR_F " + Fmt("%.4f", u.urr_f);
      }
    }
  }
  return {order_violations == 0 && range_violations == 0,
          std::to_string(order_violations) + " ordering (G " + std::to_string(g_side) + ", F " +
              std::to_string(f_side) + ") and " +
              std::to_string(range_violations) + " range violations over " +
              std::to_string(checks) + " runs" + first_problem};
}

// Rank-then-Pearson written out directly.
double OracleSpearman(const std::vector<double>& x, const std::vector<double>& y) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      double less = 0, equal = 0;
      for (double w : v) {
        less += w < v[i];
        equal += w == v[i];
      }
      r[i] = less + (equal + 1) / 2;
    }
    return r;
  };
  const std::vector<double> rx = ranks(x), ry = ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// Two-sided critical value by bisection on the library's p-value.
double CriticalValue(double alpha, double df) {
  double lo = 0, hi = 100;
  for (int i = 0; i < 200; ++i) {
    const double mid = (lo + hi) / 2;
    (fg::analysis::StudentTTwoSidedP(mid, df) > alpha ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

// 7. Spearman and t-test against independent references.
Verdict StatisticsCorrectness() {
  fg::Rng rng(99);
  double worst = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + static_cast<int>(rng.UniformIndex(60));
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) {
      // Coarse grids produce ties.
      x[i] = trial % 2 ? std::round(rng.UniformDouble() * 10) : rng.Normal();
      y[i] = trial % 3 ? std::round(rng.UniformDouble() * 8) : rng.Normal();
    }
    const fg::analysis::CorrelationResult r = fg::analysis::Spearman(x, y);
    const double o = OracleSpearman(x, y);
    if (!r.defined) {
      if (!std::isnan(o)) worst = 1;
      continue;
    }
    worst = std::max(worst, std::abs(r.rho - o));
  }
  const std::vector<double> up = {1, 2, 3, 4, 5}, down = {9, 7, 5, 3, 1};
  const bool exact = fg::analysis::Spearman(up, up).rho == 1.0 &&
                     fg::analysis::Spearman(up, down).rho == -1.0;

  const std::vector<double> a = {1, 2, 3, 4, 5}, b = {1, 2, 3, 4, 6};
  const fg::analysis::TTestResult t = fg::analysis::WeeklyTTest(a, b);
  const bool hand = std::abs(t.t_stat - 1.0) < 1e-12 && t.df == 4.0 &&
                    std::abs(t.p_value - 0.374) < 1e-3;

  struct Published {
    double df, alpha, t;
  };
  const Published table[] = {{4, 0.05, 2.776},  {4, 0.01, 4.604},  {10, 0.05, 2.228},
                             {10, 0.01, 3.169}, {51, 0.05, 2.008}, {51, 0.01, 2.676}};
  double worst_crit = 0;
  for (const Published& p : table) {
    worst_crit = std::max(worst_crit, std::abs(CriticalValue(p.alpha, p.df) - p.t));
  }
  // Published values carry three decimals.
  const bool crit = worst_crit <= 1e-3;
  return {worst <= 1e-12 && exact && hand && crit,
          "max |rho - oracle| " + Fmt("%.1e", worst) + ", +-1 " + (exact ? "exact" : "inexact") +
              ", hand example p " + Fmt("%.4f", t.p_value) + ", max critical-value gap " +
              Fmt("%.1e", worst_crit)};
}

double ThresholdSweepOracle(const std::vector<fg::strategies::ScoredLabel>& v) {
  int positives = 0;
  for (const auto& s : v) positives += s.positive;
  double best_theta = -1;
  long best_num = -1, best_den = 1;
  for (const auto& cand : v) {
    long tp = 0, pp = 0;
    for (const auto& s : v) {
      if (s.score >= cand.score) {
        ++pp;
        tp += s.positive;
      }
    }
    if (tp == 0) continue;
    // |tp/pp - 2 tp/P| = |tp P - 2 tp pp| / (pp P)
    const long num = std::abs(tp * positives - 2 * tp * pp);
    const long den = pp * positives;
    const bool better = best_num < 0 || num * best_den < best_num * den ||
                        (num * best_den == best_num * den && cand.score > best_theta);
    if (better) {
      best_num = num;
      best_den = den;
      best_theta = cand.score;
    }
  }
  return best_theta;
}

// 8. Text classifier accuracy and threshold calibration.
Verdict ClassifierSanity() {
  fg::Rng rng(4242);
  std::vector<fg::strategies::LabeledText> docs;
  for (int i = 0; i < 500; ++i) {
    const bool pos = i % 2 == 0;
    std::string t;
    for (int w = 0; w < 12; ++w) {
      if (rng.Bernoulli(0.4)) {
        t += (pos ? "alpha" : "beta") + std::to_string(rng.UniformIndex(40)) + " ";
      } else {
        t += "shared" + std::to_string(rng.UniformIndex(200)) + " ";
      }
    }
    docs.push_back({t, pos});
  }
  const std::vector<fg::strategies::LabeledText> train(docs.begin(), docs.begin() + 400);
  const fg::strategies::AcceptanceModel m = fg::strategies::AcceptanceModel::FitAndTrain(train);
  int correct = 0;
  for (std::size_t i = 400; i < docs.size(); ++i) {
    correct += (m.PredictPositive(docs[i].text) >= 0.5) == docs[i].positive;
  }
  const double accuracy = correct / 100.0;

  const std::vector<fg::strategies::ScoredLabel> v = {
      {0.9, true}, {0.8, false}, {0.7, true}, {0.6, true}, {0.5, false},
      {0.4, true}, {0.3, true},  {0.2, false}, {0.1, true}, {0.05, false}};
  const double theta = fg::strategies::CalibrateTheta(v).theta;
  const double expected = ThresholdSweepOracle(v);
  return {accuracy >= 0.95 && theta == expected,
          "held-out accuracy " + Fmt("%.3f", accuracy) + ", theta " + Fmt("%.2f", theta) +
              " vs sweep " + Fmt("%.2f", expected)};
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::string, std::string> Tree(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    files[e.path().filename().string()] = Slurp(e.path());
  }
  return files;
}

int Cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = fg::cli::Main(args, o, e);
  if (out) *out = o.str();
  if (code != 0) std::cerr << e.str();
  return code;
}

// 9. Replaying a manifest reproduces every output byte for byte.
Verdict Determinism() {
  const fs::path root = fs::absolute("acceptance_work");
  fs::remove_all(root);
  fs::create_directories(root);
  const fs::path cfg = root / "run.toml";
  std::ofstream(cfg) << "pretrain_weeks = 5\nrounds = 20\nm_cap = 20\nk_cap = 4\n"
                        "synthetic.weeks = 26\nsynthetic.questions_per_week = 20\n"
                        "synthetic.topic_effect = 0.5\n";
  std::ofstream(root / "instance.csv") << "f,g\n3,1\n1,3\n2,2\n5,1\n";
  const std::string c = cfg.string();
  const std::string data = (root / "gen" / "dataset.jsonl").string();
  const std::string ledger = (root / "sim" / "ledger_utility.csv").string();
  struct Step {
    std::string dir;
    std::vector<std::string> args;
  };
  const std::vector<Step> steps = {
      {"gen", {"generate", "--config", c, "--seed", "8"}},
      {"val", {"validate", "--data", data}},
      {"sim", {"simulate", "--config", c, "--data", data, "--strategy", "utility"}},
      {"full", {"full-info", "--config", c, "--data", data}},
      {"eurr", {"eurr", "--config", c, "--data", data, "--strategy", "random", "--exact"}},
      {"orc", {"oracle", "--instance", (root / "instance.csv").string(), "--k", "2"}},
      {"ana", {"analyze", "--data", data, "--ledger", ledger, "--ledger",
               (root / "full" / "full_info_GreedyNP.csv").string()}},
      {"rep", {"report", "--config", c, "--data", data, "--seed", "3"}},
  };
  int identical = 0;
  std::string failed;
  for (const Step& s : steps) {
    std::vector<std::string> args = s.args;
    args.insert(args.end(), {"--out-dir", (root / s.dir).string()});
    std::string out1, out2;
    if (Cli(args, &out1) != 0) {
      failed += " " + s.args[0] + "(run)";
      continue;
    }
    const fs::path replay = root / (s.dir + "_replay");
    if (Cli({s.args[0], "--manifest", (root / s.dir / "manifest.json").string(), "--out-dir",
             replay.string()},
            &out2) != 0) {
      failed += " " + s.args[0] + "(replay)";
      continue;
    }
    if (Tree(root / s.dir) == Tree(replay) && out1 == out2) {
      ++identical;
    } else {
      failed += " " + s.args[0];
    }
  }
  const int total = static_cast<int>(steps.size());
  return {identical == total, std::to_string(identical) + "/" + std::to_string(total) +
                                  " commands replay byte-identically" +
                                  (failed.empty() ? "" : "; differing:" + failed)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "oracle dominance", 10, OracleDominance},
      {2, "subset-sum reduction fidelity", 60, ReductionFidelity},
      {3, "heuristic skew pattern", 120, HeuristicSkew},
      {4, "G-Utility advantage", 180, UtilityAdvantage},
      {5, "argmax invariance", 0, ArgmaxInvariance},
      {6, "EURR <= URR within [0, 1]", 0, UrrRelationship},
      {7, "statistics correctness", 0, StatisticsCorrectness},
      {8, "classifier sanity", 0, ClassifierSanity},
      {9, "manifest determinism", 0, Determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      v.pass = false;
      v.detail += "; exceeded " + Fmt("%.0f", c.time_limit_s) + " s";
    }
    if (!v.pass) ++failures;
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << ": " << v.detail
              << " (" << Fmt("%.2f", secs) << " s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
