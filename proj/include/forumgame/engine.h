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

// The T-round game loops: the asymmetric-information protocol, where Player
// G proposes and Player F curates, and the idealized full-information
// experiment, where a heuristic jointly picks the published set. Also the
// recovery-rate accounting over their ledgers.

#ifndef FORUMGAME_ENGINE_H_
#define FORUMGAME_ENGINE_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "forumgame/acceptance_model.h"
#include "forumgame/core.h"
#include "forumgame/nash_opt.h"
#include "forumgame/strategies.h"

namespace forumgame::engine {

struct AsymmetricOptions {
  // Featurizer and smoothing for Player G's acceptance model.
  text::FeaturizerConfig featurizer;
  double alpha = strategies::AcceptanceModel::kDefaultAlpha;
  // When false the acceptance model is never trained (P(accept) = 1).
  bool learn_acceptance = true;
};

struct AsymmetricResult {
  GameLedger ledger;
  // Player G's acceptance model after the last retrain.
  strategies::AcceptanceModel final_model;
  // Rounds (0-based) at whose start the model was retrained.
  std::vector<int> retrain_rounds;
};

// Plays config.rounds rounds over the first config.rounds pools, which must
// be normalized. Per round t: Player G proposes A_t (|A_t| <= m_cap), the
// forum publishes S_t = ForumSelect(A_t) (|S_t| <= k_cap), and the proposals
// join the acceptance history (accepted iff published). For the utility
// strategy the acceptance model is retrained from the whole history at the
// start of every round t > 0 with t % retrain_period == 0. config.theta,
// when set, overrides the scorer's threshold.
//
// Throws ConfigError when there are fewer pools than rounds.
AsymmetricResult RunAsymmetricDetailed(std::span<const RoundPool> pools,
                                       const GameConfig& config,
                                       const strategies::ForumScorer& scorer,
                                       const AsymmetricOptions& options = {});

GameLedger RunAsymmetric(std::span<const RoundPool> pools,
                         const GameConfig& config,
                         const strategies::ForumScorer& scorer,
                         const AsymmetricOptions& options = {});

// Builds the bilinear instance of one pool: f = u_f_norm, g = u_g, with
// cardinality min(k, |pool|).
nash::BilinearInstance InstanceOf(const RoundPool& pool, int k);

// Every pool is one independent round: the heuristic selects S_t with
// |S_t| = min(k, |pool|) from the whole pool (proposed = published = S_t).
// The Random heuristic draws from DeriveSeed(seed, t).
GameLedger RunFullInformation(std::span<const RoundPool> pools,
                              nash::Heuristic heuristic, int k,
                              std::uint64_t seed = 0);

struct NamedLedger {
  std::string name;
  GameLedger ledger;
};

struct EurrReport {
  double tilde_u_g = 0.0;
  double tilde_u_f = 0.0;
  double realized_u_g = 0.0;
  double realized_u_f = 0.0;
  double eurr_g = 0.0;
  double eurr_f = 0.0;
  std::string best_heuristic_g;
  std::string best_heuristic_f;
};

// Denominators are per-player maxima over the full-information ledgers
// (possibly from different heuristics; the first listed wins ties). Since
// no heuristic need reach the Nash optimum's per-player totals, EURR
// tends to under-estimate the exact recovery rate.
//
// Throws InvalidArgument when `full_runs` is empty and UndefinedRateError
// when a denominator is zero.
EurrReport ComputeEurr(const GameLedger& asym,
                       std::span<const NamedLedger> full_runs);

struct UrrReport {
  // Per-player totals of the per-round Nash optimum S*_t.
  double optimum_u_g = 0.0;
  double optimum_u_f = 0.0;
  double realized_u_g = 0.0;
  double realized_u_f = 0.0;
  double urr_g = 0.0;
  double urr_f = 0.0;
  // Per-round optimum indices into the pool.
  std::vector<std::vector<int>> optimum_sets;
};

// Exact recovery rates against the enumerated optimum of each round's pool
// with cardinality min(k, |pool|). `asym` covers the first asym.rounds()
// pools.
//
// Throws InstanceTooLarge (suggesting ComputeEurr) when a round exceeds the
// enumeration budget and UndefinedRateError when a denominator is zero.
UrrReport ExactUrr(const GameLedger& asym, std::span<const RoundPool> pools,
                   int k,
                   double budget = nash::kDefaultEnumerationBudget);

// Ledger CSV: header
//   week,proposed,published,u_g_realized,u_f_realized,cum_u_g,cum_u_f
// then one row per round, numbers printed with 17 significant digits. An
// optional first line "# manifest_hash=<hex>" ties the file to its run.
void WriteLedgerCsv(const GameLedger& ledger, std::ostream& out,
                    const std::string& manifest_hash = "");
// Throws DataError on a malformed file.
GameLedger ReadLedgerCsv(std::istream& in);

// Summary report as a JSON object.
std::string EurrReportJson(const EurrReport& report,
                           const std::string& manifest_hash = "");
std::string UrrReportJson(const UrrReport& report,
                          const std::string& manifest_hash = "");

}  // namespace forumgame::engine

#endif  // FORUMGAME_ENGINE_H_
