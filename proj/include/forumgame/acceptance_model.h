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

#ifndef FORUMGAME_ACCEPTANCE_MODEL_H_
#define FORUMGAME_ACCEPTANCE_MODEL_H_

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "forumgame/text.h"

namespace forumgame::strategies {

struct LabeledText {
  std::string text;
  bool positive = false;
};

// Binary multinomial Naive Bayes over tf-idf weights used as fractional
// counts, with Laplace smoothing. Class 1 is "accepted" / "positive".
//
// An untrained model predicts 1.0 for every input.
class AcceptanceModel {
 public:
  static constexpr double kDefaultAlpha = 1.0;

  AcceptanceModel() = default;

  // Fits on `examples`. If only one class is present (or `examples` is
  // empty) the result is an untrained model.
  static AcceptanceModel Train(std::span<const LabeledText> examples,
                               text::TextFeaturizer featurizer,
                               double alpha = kDefaultAlpha);

  // Fits the featurizer on the example texts first, then trains.
  static AcceptanceModel FitAndTrain(std::span<const LabeledText> examples,
                                     const text::FeaturizerConfig& config = {},
                                     double alpha = kDefaultAlpha);

  bool trained() const { return featurizer_.has_value(); }

  // P(class 1 | text) in [0, 1].
  double PredictPositive(std::string_view text) const;
  // {P(class 0), P(class 1)}; sums to 1 up to rounding.
  std::array<double, 2> PredictBoth(std::string_view text) const;

  const std::optional<text::TextFeaturizer>& featurizer() const {
    return featurizer_;
  }
  const std::array<double, 2>& class_log_priors() const { return log_prior_; }
  const std::array<std::vector<double>, 2>& feature_log_likelihoods() const {
    return log_likelihood_;
  }
  double alpha() const { return alpha_; }

  // Versioned text snapshot; round-trips bit-exactly.
  void Write(std::ostream& out) const;
  static AcceptanceModel Read(std::istream& in);
  std::string Serialize() const;
  static AcceptanceModel Deserialize(const std::string& s);

  bool operator==(const AcceptanceModel& other) const;

 private:
  // Log-odds log P(1|x) - log P(0|x).
  double LogOdds(std::string_view text) const;

  std::optional<text::TextFeaturizer> featurizer_;
  double alpha_ = kDefaultAlpha;
  std::array<double, 2> log_prior_{};
  std::array<std::vector<double>, 2> log_likelihood_;
};

}  // namespace forumgame::strategies

#endif  // FORUMGAME_ACCEPTANCE_MODEL_H_
