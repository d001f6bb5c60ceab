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

// Player policies. Player G proposes at most M questions per round; Player F
// publishes the top-K proposals whose classifier score clears a threshold.
// All selections index into the round pool and break ties by lowest index.

#ifndef FORUMGAME_STRATEGIES_H_
#define FORUMGAME_STRATEGIES_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "forumgame/acceptance_model.h"
#include "forumgame/core.h"

namespace forumgame::strategies {

// Top-m questions by u_g.
std::vector<int> ProposeGreedy(const RoundPool& pool, int m);

// Top-m questions by u_g(q) * P(accept | q) under `model`. An untrained
// model predicts 1, reducing to ProposeGreedy.
std::vector<int> ProposeUtility(const RoundPool& pool, int m,
                                const AcceptanceModel& model);

// Top-m by u_g(q) * acceptance[q], for callers with precomputed estimates.
std::vector<int> ProposeUtility(const RoundPool& pool, int m,
                                std::span<const double> acceptance);

// Uniform size-min(m, |pool|) subset, ascending.
std::vector<int> ProposeRandom(const RoundPool& pool, int m,
                               std::uint64_t seed);

// Scores a question for publication. Implementations must return values in
// [0, 1] and be safe to call concurrently.
class ScoringModel {
 public:
  virtual ~ScoringModel() = default;
  virtual double Score(const Question& q) const = 0;
  virtual std::string name() const = 0;
};

// Reads Question::forum_score; throws DataError when it is missing.
class PrecomputedScoringModel : public ScoringModel {
 public:
  double Score(const Question& q) const override;
  std::string name() const override { return "precomputed"; }
};

// TF-IDF + Naive Bayes text classifier.
class TextScoringModel : public ScoringModel {
 public:
  explicit TextScoringModel(AcceptanceModel model) : model_(std::move(model)) {}
  double Score(const Question& q) const override;
  std::string name() const override { return "builtin"; }
  const AcceptanceModel& model() const { return model_; }

 private:
  AcceptanceModel model_;
};

struct Calibration {
  double theta = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  int positives = 0;
  int negatives = 0;
  // Set when the validation data has too few positives to trust the sweep.
  bool low_confidence = false;
};

// Player F's selection rule R(A) = Top_K { q in A : score(q) >= theta }.
struct ForumScorer {
  std::shared_ptr<const ScoringModel> model;
  double theta = 0.0;
  Calibration calibration;

  double Score(const Question& q) const { return model->Score(q); }
};

// Among proposals scoring at least theta, the k highest-scoring ones in
// descending score order. May return fewer than k, or none.
std::vector<int> ForumSelect(const RoundPool& pool,
                             std::span<const int> proposal,
                             const ForumScorer& scorer, int k);

// Same rule over precomputed scores, `scores[i]` belonging to `proposal[i]`.
std::vector<int> ForumSelect(std::span<const int> proposal,
                             std::span<const double> scores, double theta,
                             int k);

struct ScoredLabel {
  double score = 0.0;
  bool positive = false;
};

// Positives below this count mark a calibration as low-confidence.
inline constexpr int kMinConfidentPositives = 5;

// Sweeps every observed score as a candidate threshold (predict positive
// when score >= theta) and returns the one minimizing
// |precision - 2 * recall|, preferring the larger threshold on ties. The
// comparison is done in exact integer arithmetic.
//
// Throws CalibrationError when either label is missing.
Calibration CalibrateTheta(std::span<const ScoredLabel> validation);

enum class PercentileLabel { kNegative, kPositive, kExcluded };

struct LabeledQuestion {
  const Question* question = nullptr;
  PercentileLabel label = PercentileLabel::kExcluded;
};

// Per week, ranks questions by u_f_norm (average ranks for ties) and maps
// rank percentile p = 100 * (rank - 1) / (n - 1) to positive when p >= 60,
// negative when p <= 40, excluded otherwise. A single-question week is
// excluded. Requires normalized pools.
std::vector<LabeledQuestion> LabelByPercentile(std::span<const RoundPool> pools);

struct ScorerTrainingOptions {
  text::FeaturizerConfig featurizer;
  double alpha = AcceptanceModel::kDefaultAlpha;
};

// Trains the built-in text scorer on percentile labels of `train`, then
// calibrates theta on percentile labels of `validation`.
ForumScorer TrainTextForumScorer(std::span<const RoundPool> train,
                                 std::span<const RoundPool> validation,
                                 const ScorerTrainingOptions& options = {});

// Calibrates theta for the precomputed-score model on `validation`.
ForumScorer CalibratePrecomputedScorer(std::span<const RoundPool> validation);

}  // namespace forumgame::strategies

#endif  // FORUMGAME_STRATEGIES_H_
