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

#include "forumgame/strategies.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "forumgame/error.h"
#include "forumgame/random.h"

namespace forumgame::strategies {
namespace {

// Indices of the `m` largest keys, descending, ties by lowest index.
std::vector<int> TopByKey(std::span<const double> keys, int m) {
  std::vector<int> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return keys[a] > keys[b]; });
  order.resize(std::min<std::size_t>(std::max(m, 0), order.size()));
  return order;
}

}  // namespace

std::vector<int> ProposeGreedy(const RoundPool& pool, int m) {
  std::vector<double> keys;
  keys.reserve(pool.size());
  for (const Question& q : pool.questions()) keys.push_back(q.u_g);
  return TopByKey(keys, m);
}

std::vector<int> ProposeUtility(const RoundPool& pool, int m,
                                std::span<const double> acceptance) {
  if (acceptance.size() != pool.size()) {
    throw InvalidArgument("one acceptance estimate per question required");
  }
  std::vector<double> keys;
  keys.reserve(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    keys.push_back(pool[i].u_g * acceptance[i]);
  }
  return TopByKey(keys, m);
}

std::vector<int> ProposeUtility(const RoundPool& pool, int m,
                                const AcceptanceModel& model) {
  std::vector<double> acceptance;
  acceptance.reserve(pool.size());
  for (const Question& q : pool.questions()) {
    acceptance.push_back(model.PredictPositive(q.Text()));
  }
  return ProposeUtility(pool, m, acceptance);
}

std::vector<int> ProposeRandom(const RoundPool& pool, int m,
                               std::uint64_t seed) {
  const int n = static_cast<int>(pool.size());
  Rng rng(seed);
  return rng.Subset(n, std::clamp(m, 0, n));
}

double PrecomputedScoringModel::Score(const Question& q) const {
  if (!q.forum_score.has_value()) {
    throw DataError("question '" + q.id +
                    "' has no forum_score for the precomputed scorer");
  }
  return *q.forum_score;
}

double TextScoringModel::Score(const Question& q) const {
  return model_.PredictPositive(q.Text());
}

std::vector<int> ForumSelect(std::span<const int> proposal,
                             std::span<const double> scores, double theta,
                             int k) {
  if (proposal.size() != scores.size()) {
    throw InvalidArgument("one score per proposed question required");
  }
  std::vector<std::size_t> passing;
  for (std::size_t i = 0; i < proposal.size(); ++i) {
    if (scores[i] >= theta) passing.push_back(i);
  }
  std::sort(passing.begin(), passing.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return proposal[a] < proposal[b];
  });
  passing.resize(std::min<std::size_t>(std::max(k, 0), passing.size()));
  std::vector<int> out;
  out.reserve(passing.size());
  for (std::size_t i : passing) out.push_back(proposal[i]);
  return out;
}

std::vector<int> ForumSelect(const RoundPool& pool,
                             std::span<const int> proposal,
                             const ForumScorer& scorer, int k) {
  std::vector<double> scores;
  scores.reserve(proposal.size());
  for (int i : proposal) scores.push_back(scorer.Score(pool[i]));
  return ForumSelect(proposal, scores, scorer.theta, k);
}

Calibration CalibrateTheta(std::span<const ScoredLabel> validation) {
  std::vector<ScoredLabel> sorted(validation.begin(), validation.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ScoredLabel& a, const ScoredLabel& b) {
                     return a.score > b.score;
                   });
  std::int64_t total_pos = 0;
  for (const ScoredLabel& s : sorted) total_pos += s.positive ? 1 : 0;
  const std::int64_t total_neg =
      static_cast<std::int64_t>(sorted.size()) - total_pos;
  if (total_pos == 0 || total_neg == 0) {
    throw CalibrationError(
        "calibration needs both positive and negative validation examples");
  }

  // |tp/pp - 2 tp/P| = |tp * (P - 2 pp)| / (pp * P); compare as fractions.
  bool have = false;
  std::int64_t best_num = 0, best_den = 1, best_tp = 0, best_pp = 0;
  double best_theta = 0.0;
  std::int64_t tp = 0, pp = 0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    const double theta = sorted[i].score;
    while (i < sorted.size() && sorted[i].score == theta) {
      tp += sorted[i].positive ? 1 : 0;
      ++pp;
      ++i;
    }
    // With no true positives, precision = recall = 0 meets the target
    // trivially while publishing nothing useful; such thresholds are skipped.
    if (tp == 0) continue;
    const std::int64_t num = std::llabs(tp * (total_pos - 2 * pp));
    const std::int64_t den = pp * total_pos;
    // Thresholds are visited in decreasing order, so only a strict
    // improvement may replace the incumbent (larger theta wins ties).
    if (!have || static_cast<__int128>(num) * best_den <
                     static_cast<__int128>(best_num) * den) {
      have = true;
      best_num = num;
      best_den = den;
      best_theta = theta;
      best_tp = tp;
      best_pp = pp;
    }
  }
  if (!have || best_pp == 0) {
    throw CalibrationError("no threshold yields predicted positives");
  }
  Calibration c;
  c.theta = best_theta;
  c.precision = static_cast<double>(best_tp) / static_cast<double>(best_pp);
  c.recall = static_cast<double>(best_tp) / static_cast<double>(total_pos);
  c.positives = static_cast<int>(total_pos);
  c.negatives = static_cast<int>(total_neg);
  c.low_confidence = total_pos < kMinConfidentPositives;
  return c;
}

std::vector<LabeledQuestion> LabelByPercentile(
    std::span<const RoundPool> pools) {
  std::vector<LabeledQuestion> out;
  for (const RoundPool& pool : pools) {
    const std::size_t n = pool.size();
    std::vector<double> value(n);
    for (std::size_t i = 0; i < n; ++i) value[i] = pool[i].Utility(Side::kF);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return value[a] < value[b];
                     });
    // Average 1-based ranks over tie groups.
    std::vector<double> rank(n);
    for (std::size_t lo = 0; lo < n;) {
      std::size_t hi = lo;
      while (hi + 1 < n && value[order[hi + 1]] == value[order[lo]]) ++hi;
      const double avg = (static_cast<double>(lo + 1) + (hi + 1)) / 2.0;
      for (std::size_t j = lo; j <= hi; ++j) rank[order[j]] = avg;
      lo = hi + 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
      LabeledQuestion lq{&pool[i], PercentileLabel::kExcluded};
      if (n > 1) {
        // 100 * (rank - 1) / (n - 1) against 40 and 60, cross-multiplied.
        // Ranks are multiples of 1/2, so both sides are exact.
        const double scaled = 100.0 * (rank[i] - 1.0);
        const double span = static_cast<double>(n - 1);
        if (scaled >= 60.0 * span) {
          lq.label = PercentileLabel::kPositive;
        } else if (scaled <= 40.0 * span) {
          lq.label = PercentileLabel::kNegative;
        }
      }
      out.push_back(lq);
    }
  }
  return out;
}

namespace {

std::vector<LabeledText> ToLabeledText(std::span<const LabeledQuestion> lqs) {
  std::vector<LabeledText> out;
  for (const LabeledQuestion& lq : lqs) {
    if (lq.label == PercentileLabel::kExcluded) continue;
    out.push_back({lq.question->Text(), lq.label == PercentileLabel::kPositive});
  }
  return out;
}

Calibration CalibrateOn(const ScoringModel& model,
                        std::span<const RoundPool> validation) {
  std::vector<ScoredLabel> scored;
  for (const LabeledQuestion& lq : LabelByPercentile(validation)) {
    if (lq.label == PercentileLabel::kExcluded) continue;
    scored.push_back(
        {model.Score(*lq.question), lq.label == PercentileLabel::kPositive});
  }
  return CalibrateTheta(scored);
}

}  // namespace

ForumScorer TrainTextForumScorer(std::span<const RoundPool> train,
                                 std::span<const RoundPool> validation,
                                 const ScorerTrainingOptions& options) {
  const std::vector<LabeledText> examples =
      ToLabeledText(LabelByPercentile(train));
  AcceptanceModel model =
      AcceptanceModel::FitAndTrain(examples, options.featurizer, options.alpha);
  if (!model.trained()) {
    throw CalibrationError(
        "forum scorer training data lacks one of the two classes");
  }
  ForumScorer scorer;
  scorer.model = std::make_shared<TextScoringModel>(std::move(model));
  scorer.calibration = CalibrateOn(*scorer.model, validation);
  scorer.theta = scorer.calibration.theta;
  return scorer;
}

ForumScorer CalibratePrecomputedScorer(std::span<const RoundPool> validation) {
  ForumScorer scorer;
  scorer.model = std::make_shared<PrecomputedScoringModel>();
  scorer.calibration = CalibrateOn(*scorer.model, validation);
  scorer.theta = scorer.calibration.theta;
  return scorer;
}

}  // namespace forumgame::strategies
