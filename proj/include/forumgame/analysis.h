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

// Misalignment correlations, cross-strategy significance tests, and the
// report tables for full-information and asymmetric runs.

#ifndef FORUMGAME_ANALYSIS_H_
#define FORUMGAME_ANALYSIS_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "forumgame/core.h"
#include "forumgame/data.h"
#include "forumgame/engine.h"
#include "forumgame/stats.h"
#include "forumgame/table.h"

namespace forumgame::analysis {

struct MisalignmentReport {
  // One row per (domain, model), domains in sorted order, models in the
  // order requested.
  std::vector<CorrelationResult> rows;
  // Mean and sample standard deviation of rho over the defined rows.
  double mean_rho = 0.0;
  double std_rho = 0.0;
  int defined_rows = 0;
};

// Spearman correlation between u_f_norm and each model's utility column
// (Question::model_utilities), per domain. Questions missing a column are
// left out of that column's rows; a row with fewer than 3 questions or a
// constant input is reported as undefined. Requires a normalized dataset.
MisalignmentReport ComputeMisalignment(const data::Dataset& dataset,
                                       std::span<const std::string> models);

// Columns: domain, model, n, rho, p_value, significant ("*" when
// p < kSignificanceLevel), followed by a pooled mean/std row.
Table MisalignmentTable(const MisalignmentReport& report);

// Per-round realized utility of one player, the unit of the weekly t-test.
std::vector<double> WeeklySeries(const GameLedger& ledger, Side side);

struct PairwiseTest {
  std::string a;
  std::string b;
  Side side = Side::kG;
  TTestResult result;
};

// Tests every ordered pair (i < j) of ledgers on both players' weekly series.
std::vector<PairwiseTest> PairwiseTTests(std::span<const engine::NamedLedger> ledgers,
                                         bool paired = true);
Table PairwiseTable(std::span<const PairwiseTest> tests);

// Rows of (week, domain, u_f_norm, u_g) for external scatter plots.
void WriteScatterCsv(const data::Dataset& dataset, std::ostream& out);

// Heuristic x {cumulative normalized views, cumulative u_G}.
// Throws InvalidArgument on an empty input.
Table FullInformationTable(std::span<const engine::NamedLedger> runs);

struct AsymmetricRow {
  std::string strategy;
  GameLedger ledger;
  engine::EurrReport eurr;
};

// Strategy x {cumulative normalized views, cumulative u_G, EURR_F, EURR_G};
// EURR values print with 3 decimals in both formats.
// Throws InvalidArgument on an empty input.
Table AsymmetricTable(std::span<const AsymmetricRow> rows);

}  // namespace forumgame::analysis

#endif  // FORUMGAME_ANALYSIS_H_
