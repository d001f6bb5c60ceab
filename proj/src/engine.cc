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
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "forumgame/error.h"
#include "forumgame/random.h"
#include "json.hpp"

namespace forumgame::engine {
namespace {

using strategies::AcceptanceModel;
using strategies::LabeledText;

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<int> Propose(const RoundPool& pool, const GameConfig& config,
                         const AcceptanceModel& model, int round) {
  switch (config.strategy_g) {
    case ProposalStrategy::kGreedy:
      return strategies::ProposeGreedy(pool, config.m_cap);
    case ProposalStrategy::kUtility:
      return strategies::ProposeUtility(pool, config.m_cap, model);
    case ProposalStrategy::kRandom:
      return strategies::ProposeRandom(pool, config.m_cap,
                                       DeriveSeed(config.seed, round));
  }
  throw ConfigError("unknown proposal strategy");
}

}  // namespace

AsymmetricResult RunAsymmetricDetailed(std::span<const RoundPool> pools,
                                       const GameConfig& config,
                                       const strategies::ForumScorer& scorer,
                                       const AsymmetricOptions& options) {
  config.Validate();
  if (pools.size() < static_cast<std::size_t>(config.rounds)) {
    throw ConfigError("simulation needs " + std::to_string(config.rounds) +
                      " weekly pools but the dataset provides " +
                      std::to_string(pools.size()));
  }
  if (!scorer.model) throw ConfigError("forum scorer has no model");
  strategies::ForumScorer forum = scorer;
  if (config.theta) forum.theta = *config.theta;

  AsymmetricResult result;
  std::vector<LabeledText> history;
  const bool learns =
      options.learn_acceptance && config.strategy_g == ProposalStrategy::kUtility;
  for (int t = 0; t < config.rounds; ++t) {
    if (learns && t > 0 && t % config.retrain_period == 0) {
      result.final_model =
          AcceptanceModel::FitAndTrain(history, options.featurizer, options.alpha);
      result.retrain_rounds.push_back(t);
    }
    const RoundPool& pool = pools[t];
    const std::vector<int> proposed = Propose(pool, config, result.final_model, t);
    const std::vector<int> published =
        strategies::ForumSelect(pool, proposed, forum, config.k_cap);
    if (learns) {
      std::vector<bool> accepted(pool.size(), false);
      for (int i : published) accepted[i] = true;
      for (int i : proposed) history.push_back({pool[i].Text(), accepted[i]});
    }
    result.ledger.Append(SelectionOutcome::Make(pool, proposed, published,
                                                config.m_cap, config.k_cap));
  }
  return result;
}

GameLedger RunAsymmetric(std::span<const RoundPool> pools, const GameConfig& config,
                         const strategies::ForumScorer& scorer,
                         const AsymmetricOptions& options) {
  return RunAsymmetricDetailed(pools, config, scorer, options).ledger;
}

nash::BilinearInstance InstanceOf(const RoundPool& pool, int k) {
  if (k < 1) throw ConfigError("cardinality cap must be positive");
  nash::BilinearInstance inst;
  inst.k = std::min<int>(k, static_cast<int>(pool.size()));
  inst.items.reserve(pool.size());
  for (const Question& q : pool.questions()) {
    inst.items.push_back({q.Utility(Side::kF), q.Utility(Side::kG)});
  }
  return inst;
}

GameLedger RunFullInformation(std::span<const RoundPool> pools,
                              nash::Heuristic heuristic, int k, std::uint64_t seed) {
  GameLedger ledger;
  for (std::size_t t = 0; t < pools.size(); ++t) {
    const nash::BilinearInstance inst = InstanceOf(pools[t], k);
    std::vector<int> picks = nash::RunHeuristic(heuristic, inst, DeriveSeed(seed, t));
    std::sort(picks.begin(), picks.end());
    ledger.Append(SelectionOutcome::Make(pools[t], picks, picks));
  }
  return ledger;
}

EurrReport ComputeEurr(const GameLedger& asym, std::span<const NamedLedger> full_runs) {
  if (full_runs.empty()) {
    throw InvalidArgument("EURR needs at least one full-information ledger");
  }
  EurrReport r;
  r.realized_u_g = asym.cum_u_g();
  r.realized_u_f = asym.cum_u_f();
  r.tilde_u_g = full_runs[0].ledger.cum_u_g();
  r.tilde_u_f = full_runs[0].ledger.cum_u_f();
  r.best_heuristic_g = r.best_heuristic_f = full_runs[0].name;
  for (const NamedLedger& run : full_runs.subspan(1)) {
    if (run.ledger.cum_u_g() > r.tilde_u_g) {
      r.tilde_u_g = run.ledger.cum_u_g();
      r.best_heuristic_g = run.name;
    }
    if (run.ledger.cum_u_f() > r.tilde_u_f) {
      r.tilde_u_f = run.ledger.cum_u_f();
      r.best_heuristic_f = run.name;
    }
  }
  if (r.tilde_u_g <= 0.0 || r.tilde_u_f <= 0.0) {
    throw UndefinedRateError(
        "EURR is undefined: the best full-information heuristic has zero utility "
        "for player " + std::string(r.tilde_u_g <= 0.0 ? "G" : "F"));
  }
  r.eurr_g = r.realized_u_g / r.tilde_u_g;
  r.eurr_f = r.realized_u_f / r.tilde_u_f;
  return r;
}

UrrReport ExactUrr(const GameLedger& asym, std::span<const RoundPool> pools, int k,
                   double budget) {
  if (pools.size() < asym.rounds()) {
    throw ConfigError("URR: ledger has more rounds than the dataset has pools");
  }
  UrrReport r;
  r.realized_u_g = asym.cum_u_g();
  r.realized_u_f = asym.cum_u_f();
  for (std::size_t t = 0; t < asym.rounds(); ++t) {
    const nash::BilinearInstance inst = InstanceOf(pools[t], k);
    nash::OracleResult<double> best;
    try {
      best = nash::OracleExact(inst, budget);
    } catch (const InstanceTooLarge& e) {
      throw InstanceTooLarge("round " + std::to_string(t) + ": " + e.what() +
                             "; use the EURR estimate (eurr command) instead");
    }
    r.optimum_u_g += UtilityOfSet(pools[t], best.indices, Side::kG);
    r.optimum_u_f += UtilityOfSet(pools[t], best.indices, Side::kF);
    r.optimum_sets.push_back(std::move(best.indices));
  }
  if (r.optimum_u_g <= 0.0 || r.optimum_u_f <= 0.0) {
    throw UndefinedRateError("URR is undefined: the optimum has zero utility for player " +
                             std::string(r.optimum_u_g <= 0.0 ? "G" : "F"));
  }
  r.urr_g = r.realized_u_g / r.optimum_u_g;
  r.urr_f = r.realized_u_f / r.optimum_u_f;
  return r;
}

namespace {
constexpr const char* kLedgerHeader =
    "week,proposed,published,u_g_realized,u_f_realized,cum_u_g,cum_u_f";
constexpr const char* kManifestPrefix = "# manifest_hash=";
}  // namespace

void WriteLedgerCsv(const GameLedger& ledger, std::ostream& out,
                    const std::string& manifest_hash) {
  if (!manifest_hash.empty()) out << kManifestPrefix << manifest_hash << '\n';
  out << kLedgerHeader << '\n';
  double cg = 0.0, cf = 0.0;
  for (const SelectionOutcome& o : ledger.outcomes()) {
    cg += o.u_g_realized;
    cf += o.u_f_realized;
    out << o.week << ',' << o.proposed.size() << ',' << o.published.size() << ','
        << Num(o.u_g_realized) << ',' << Num(o.u_f_realized) << ',' << Num(cg) << ','
        << Num(cf) << '\n';
  }
}

GameLedger ReadLedgerCsv(std::istream& in) {
  std::string line;
  long n = 0;
  bool header = false;
  GameLedger ledger;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != kLedgerHeader) throw DataError("unexpected ledger header", n);
      header = true;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 7) throw DataError("ledger row needs 7 columns", n);
    try {
      std::size_t pos = 0;
      auto whole = [&](const std::string& s) {
        if (pos != s.size()) throw std::invalid_argument(s);
      };
      const int week = std::stoi(cells[0], &pos);
      whole(cells[0]);
      const long long proposed = std::stoll(cells[1], &pos);
      whole(cells[1]);
      const long long published = std::stoll(cells[2], &pos);
      whole(cells[2]);
      const double ug = std::stod(cells[3], &pos);
      whole(cells[3]);
      const double uf = std::stod(cells[4], &pos);
      whole(cells[4]);
      if (proposed < 0 || published < 0 || published > proposed) {
        throw DataError("ledger counts are inconsistent", n);
      }
      ledger.Append(SelectionOutcome::FromTotals(week, proposed, published, ug, uf));
    } catch (const std::logic_error&) {
      throw DataError("malformed ledger number", n);
    }
  }
  if (!header) throw DataError("ledger file is empty");
  return ledger;
}

std::string EurrReportJson(const EurrReport& r, const std::string& manifest_hash) {
  nlohmann::ordered_json j;
  if (!manifest_hash.empty()) j["manifest_hash"] = manifest_hash;
  j["realized_u_g"] = r.realized_u_g;
  j["realized_u_f"] = r.realized_u_f;
  j["tilde_u_g"] = r.tilde_u_g;
  j["tilde_u_f"] = r.tilde_u_f;
  j["best_heuristic_g"] = r.best_heuristic_g;
  j["best_heuristic_f"] = r.best_heuristic_f;
  j["eurr_g"] = r.eurr_g;
  j["eurr_f"] = r.eurr_f;
  j["note"] =
      "EURR divides by per-player maxima over full-information heuristics and "
      "under-estimates the exact URR";
  return j.dump(2) + "\n";
}

std::string UrrReportJson(const UrrReport& r, const std::string& manifest_hash) {
  nlohmann::ordered_json j;
  if (!manifest_hash.empty()) j["manifest_hash"] = manifest_hash;
  j["realized_u_g"] = r.realized_u_g;
  j["realized_u_f"] = r.realized_u_f;
  j["optimum_u_g"] = r.optimum_u_g;
  j["optimum_u_f"] = r.optimum_u_f;
  j["urr_g"] = r.urr_g;
  j["urr_f"] = r.urr_f;
  j["optimum_sets"] = r.optimum_sets;
  return j.dump(2) + "\n";
}

}  // namespace forumgame::engine
