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

// Run configuration file: one `key = value` per line, `#` comments, optional
// `[section]` headers that prefix the following keys with "section.".
// String values may be double-quoted, so simple TOML files parse as-is.
//
//   m_cap, k_cap, rounds, retrain_period   integers (GameConfig caps)
//   theta                                  number, or "auto" to calibrate
//   seed                                   unsigned integer
//   strategy                               greedy | utility | random
//   scorer                                 builtin | precomputed
//   pretrain_weeks                         integer, scorer training window
//   utility_column                         field holding u_g
//   heuristics                             comma list of MPP, MaxSP, ...
//   oracle_budget                          max subsets for exact search
//   ttest                                  paired | welch
//   significance                           report marker level
//   models                                 comma list of utility columns
//   data, out_dir                          paths
//   synthetic.weeks, synthetic.questions_per_week,
//   synthetic.utility_correlation, synthetic.topic_effect,
//   synthetic.view_log_mean, synthetic.view_log_sigma,
//   synthetic.utility_log_mean, synthetic.utility_log_sigma,
//   synthetic.topic_vocabulary, synthetic.shared_vocabulary,
//   synthetic.topic_word_share, synthetic.domains,
//   synthetic.start_unix_seconds          generator parameters

#ifndef FORUMGAME_CLI_RUN_CONFIG_H_
#define FORUMGAME_CLI_RUN_CONFIG_H_

#include <string>
#include <vector>

#include "forumgame/core.h"
#include "forumgame/data.h"
#include "forumgame/nash_opt.h"

namespace forumgame::cli {

struct RunConfig {
  GameConfig game;
  int pretrain_weeks = 13;
  std::string utility_column = "u_g";
  std::vector<nash::Heuristic> heuristics = {std::begin(nash::kAllHeuristics),
                                             std::end(nash::kAllHeuristics)};
  double oracle_budget = nash::kDefaultEnumerationBudget;
  bool paired = true;
  double significance = 0.01;
  // Empty means every utility column present in the data.
  std::vector<std::string> models;
  data::SyntheticSpec synthetic;
  // Paths. Not part of the canonical text: inputs are identified by content.
  std::string data;
  std::string out_dir = "out";

  // Applies one setting. Throws ConfigError on an unknown key or bad value.
  void Set(const std::string& key, const std::string& value);

  // Throws ConfigError on contradictions (k_cap > m_cap, ...).
  void Validate() const;

  // Every setting except the paths, one `key = value` per line in a fixed
  // order. Parse(Canonical()) reproduces the configuration.
  std::string Canonical() const;

  // Throws ConfigError with the line number on malformed input.
  static RunConfig Parse(const std::string& text);
  static RunConfig Load(const std::string& path);
};

}  // namespace forumgame::cli

#endif  // FORUMGAME_CLI_RUN_CONFIG_H_
