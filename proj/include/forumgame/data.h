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

// Dataset ingestion, weekly pooling and normalization, train/validation
// windowing, and synthetic scenario generation.
//
// Record schema (JSON Lines, one object per line, UTF-8; or CSV with a
// header row using the same column names):
//
//   id          string, unique                       required
//   timestamp   ISO-8601 date/time or unix seconds   required
//   domain      string                               optional ("")
//   title       string                               optional ("")
//   body        string, HTML tags are stripped       optional ("")
//   view_count  non-negative integer                 required
//   u_g         non-negative number                  required unless another
//                                                    column is mapped
//   forum_score number in [0, 1]                     optional
//
// Blank JSONL lines and lines starting with '#' are skipped.
//
// Any other numeric field is kept in Question::model_utilities (together
// with u_g) so that alternative player-G utilities can be selected or
// analyzed side by side.

#ifndef FORUMGAME_DATA_H_
#define FORUMGAME_DATA_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "forumgame/core.h"

namespace forumgame::data {

struct DatasetMetadata {
  // Number of questions per domain tag.
  std::map<std::string, int> domain_counts;
  // ISO week label ("2024-W30") of each pool, parallel to Dataset::pools.
  std::vector<std::string> week_labels;
  // Week indices whose view counts are all zero (normalized to 0).
  std::vector<int> degenerate_weeks;
};

struct Dataset {
  // Strictly increasing week indices. Index 0 is the first ISO week present;
  // empty weeks leave gaps.
  std::vector<RoundPool> pools;
  // Leading pools reserved for forum-scorer training.
  int pretrain_weeks = 13;
  DatasetMetadata metadata;

  std::size_t num_questions() const;
};

enum class Format { kAuto, kJsonl, kCsv };

// Picks a format from the file extension (".csv" -> CSV, else JSONL).
Format DetectFormat(const std::string& path);

struct IngestOptions {
  Format format = Format::kAuto;
  // Field holding player G's utility.
  std::string utility_column = "u_g";
};

// Reads a dataset. Throws DataError with a line number on schema
// violations, duplicate ids, or an empty file.
Dataset Ingest(const std::string& path, const IngestOptions& options = {});
Dataset IngestStream(std::istream& in, Format format,
                     const IngestOptions& options = {});

// Schema check only; returns the number of valid records.
std::size_t ValidateFile(const std::string& path,
                         const IngestOptions& options = {});

// Binds u_f_norm = view_count / weekly max on every pool. Idempotent.
Dataset NormalizeWeekly(const Dataset& dataset);

struct Split {
  std::vector<RoundPool> train;
  std::vector<RoundPool> validation;
  std::vector<RoundPool> simulation;
};

// First `weeks` pools feed the forum scorer: the last ceil(20%) of them are
// the validation split, the rest training. Remaining pools are simulated.
// Throws ConfigError unless 2 <= weeks < pools.
Split SplitPretrain(const Dataset& dataset, int weeks);

struct SyntheticSpec {
  int weeks = 65;
  int questions_per_week = 400;
  // Recorded on the dataset, capped at `weeks`.
  int pretrain_weeks = 13;
  // Target Spearman correlation between u_g and view_count over the whole
  // dataset.
  double utility_correlation = -0.064;
  // Loading of the standardized log-view latent on the topic sign (+1 for
  // topic A, -1 for topic B); in [0, 1). u_g never depends on the topic.
  double topic_effect = 0.0;
  std::uint64_t seed = 0;

  // Log-normal marginals.
  double view_log_mean = 4.0;
  double view_log_sigma = 1.25;
  double utility_log_mean = 3.0;
  double utility_log_sigma = 0.75;

  int topic_vocabulary = 200;
  int shared_vocabulary = 800;
  // Probability that a word is drawn from the question's topic vocabulary.
  double topic_word_share = 0.5;
  std::vector<std::string> domains = {"synthetic"};
  // 2024-04-22, a Monday.
  std::int64_t start_unix_seconds = 1713744000;

  void Validate() const;
};

struct SyntheticDataset {
  Dataset dataset;
  // Latent topic per question id (true = topic A).
  std::map<std::string, bool> topic_a;
  // Loading on u_g found by calibration, and the measured correlation.
  double calibrated_loading = 0.0;
  double measured_correlation = 0.0;
};

// Gaussian-copula generator. Views and u_g are log-normal; the copula
// loading is calibrated by bisection on the realized draws so the measured
// Spearman correlation meets the target. Throws ConfigError when the target
// is outside the reachable range or missed by more than 0.05.
SyntheticDataset GenerateSynthetic(const SyntheticSpec& spec);

void WriteJsonl(const Dataset& dataset, std::ostream& out);
void WriteCsv(const Dataset& dataset, std::ostream& out);

// Helpers exposed for tests.
// Days since 1970-01-01 -> Monday-based week index (ISO weeks).
std::int64_t WeekIndexOfDay(std::int64_t days_since_epoch);
// "YYYY-Www" for the ISO week containing the given day.
std::string IsoWeekLabel(std::int64_t days_since_epoch);
// Parses ISO-8601 ("2024-07-23", "2024-07-23T10:00:00Z", with optional
// fractional seconds and +hh:mm offset) or an integer of unix seconds.
std::int64_t ParseTimestamp(const std::string& text);
std::string FormatTimestamp(std::int64_t unix_seconds);
// Removes <...> tags and decodes the five basic HTML entities.
std::string StripHtml(const std::string& html);

}  // namespace forumgame::data

#endif  // FORUMGAME_DATA_H_
