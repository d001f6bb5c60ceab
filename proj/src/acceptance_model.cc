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

#include "forumgame/acceptance_model.h"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "forumgame/error.h"

namespace forumgame::strategies {

AcceptanceModel AcceptanceModel::Train(std::span<const LabeledText> examples,
                                       text::TextFeaturizer featurizer,
                                       double alpha) {
  if (!(alpha > 0.0)) throw InvalidArgument("smoothing alpha must be positive");
  std::array<int, 2> class_count{0, 0};
  for (const LabeledText& e : examples) ++class_count[e.positive ? 1 : 0];
  AcceptanceModel model;
  model.alpha_ = alpha;
  if (class_count[0] == 0 || class_count[1] == 0) return model;

  const int vocab = featurizer.vocabulary_size();
  std::array<std::vector<double>, 2> mass{std::vector<double>(vocab, 0.0),
                                          std::vector<double>(vocab, 0.0)};
  for (const LabeledText& e : examples) {
    std::vector<double>& row = mass[e.positive ? 1 : 0];
    for (const auto& [col, w] : featurizer.Transform(e.text)) row[col] += w;
  }
  const double total = static_cast<double>(examples.size());
  for (int c = 0; c < 2; ++c) {
    model.log_prior_[c] = std::log(class_count[c] / total);
    double row_total = 0.0;
    for (double m : mass[c]) row_total += m;
    const double denom = row_total + alpha * vocab;
    model.log_likelihood_[c].resize(vocab);
    for (int j = 0; j < vocab; ++j) {
      model.log_likelihood_[c][j] = std::log((mass[c][j] + alpha) / denom);
    }
  }
  model.featurizer_ = std::move(featurizer);
  return model;
}

AcceptanceModel AcceptanceModel::FitAndTrain(
    std::span<const LabeledText> examples, const text::FeaturizerConfig& config,
    double alpha) {
  if (examples.empty()) return Train(examples, text::TextFeaturizer{}, alpha);
  std::vector<std::string> corpus;
  corpus.reserve(examples.size());
  for (const LabeledText& e : examples) corpus.push_back(e.text);
  return Train(examples, text::TextFeaturizer::Fit(corpus, config), alpha);
}

double AcceptanceModel::LogOdds(std::string_view text) const {
  double diff = log_prior_[1] - log_prior_[0];
  for (const auto& [col, w] : featurizer_->Transform(text)) {
    diff += w * (log_likelihood_[1][col] - log_likelihood_[0][col]);
  }
  return diff;
}

std::array<double, 2> AcceptanceModel::PredictBoth(std::string_view text) const {
  if (!trained()) return {0.0, 1.0};
  const double d = LogOdds(text);
  // Logistic of the log-odds, evaluated on the side that cannot overflow.
  double p1;
  if (d >= 0) {
    p1 = 1.0 / (1.0 + std::exp(-d));
  } else {
    const double e = std::exp(d);
    p1 = e / (1.0 + e);
  }
  return {1.0 - p1, p1};
}

double AcceptanceModel::PredictPositive(std::string_view text) const {
  return PredictBoth(text)[1];
}

// Format:
//   acceptance-model v1
//   trained <0|1>
//   alpha <hex>
//   [featurizer block]              (only when trained)
//   prior <hex0> <hex1>
//   loglik0 <V hex values>
//   loglik1 <V hex values>
//   end
void AcceptanceModel::Write(std::ostream& out) const {
  out << "acceptance-model v1\n";
  out << "trained " << (trained() ? 1 : 0) << "\n";
  out << "alpha " << text::FormatHexDouble(alpha_) << "\n";
  if (trained()) {
    featurizer_->Write(out);
    out << "prior " << text::FormatHexDouble(log_prior_[0]) << ' '
        << text::FormatHexDouble(log_prior_[1]) << "\n";
    for (int c = 0; c < 2; ++c) {
      out << "loglik" << c;
      for (double v : log_likelihood_[c]) out << ' ' << text::FormatHexDouble(v);
      out << "\n";
    }
  }
  out << "end\n";
}

namespace {

std::string NextWord(std::istream& in, const char* what) {
  std::string w;
  if (!(in >> w)) {
    throw DataError(std::string("model snapshot truncated while reading ") +
                    what);
  }
  return w;
}

void ExpectWord(std::istream& in, const std::string& expected) {
  const std::string w = NextWord(in, expected.c_str());
  if (w != expected) {
    throw DataError("model snapshot: expected '" + expected + "', got '" + w +
                    "'");
  }
}

}  // namespace

AcceptanceModel AcceptanceModel::Read(std::istream& in) {
  ExpectWord(in, "acceptance-model");
  const std::string version = NextWord(in, "version");
  if (version != "v1") {
    throw DataError("unsupported acceptance-model snapshot version " + version);
  }
  ExpectWord(in, "trained");
  const std::string trained = NextWord(in, "trained flag");
  ExpectWord(in, "alpha");
  AcceptanceModel model;
  model.alpha_ = text::ParseHexDouble(NextWord(in, "alpha"));
  if (trained == "1") {
    text::TextFeaturizer f = text::TextFeaturizer::Read(in);
    const int vocab = f.vocabulary_size();
    ExpectWord(in, "prior");
    model.log_prior_[0] = text::ParseHexDouble(NextWord(in, "prior"));
    model.log_prior_[1] = text::ParseHexDouble(NextWord(in, "prior"));
    for (int c = 0; c < 2; ++c) {
      ExpectWord(in, "loglik" + std::to_string(c));
      model.log_likelihood_[c].resize(vocab);
      for (int j = 0; j < vocab; ++j) {
        model.log_likelihood_[c][j] =
            text::ParseHexDouble(NextWord(in, "likelihood"));
      }
    }
    model.featurizer_ = std::move(f);
  } else if (trained != "0") {
    throw DataError("model snapshot: bad trained flag '" + trained + "'");
  }
  ExpectWord(in, "end");
  return model;
}

std::string AcceptanceModel::Serialize() const {
  std::ostringstream out;
  Write(out);
  return out.str();
}

AcceptanceModel AcceptanceModel::Deserialize(const std::string& s) {
  std::istringstream in(s);
  return Read(in);
}

bool AcceptanceModel::operator==(const AcceptanceModel& other) const {
  return featurizer_ == other.featurizer_ && alpha_ == other.alpha_ &&
         log_prior_ == other.log_prior_ &&
         log_likelihood_ == other.log_likelihood_;
}

}  // namespace forumgame::strategies
