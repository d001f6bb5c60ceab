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

#include "forumgame/text.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include "forumgame/error.h"

namespace forumgame::text {

std::vector<std::string> Tokenize(std::string_view text,
                                  const TokenizerConfig& config) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    if (static_cast<int>(current.size()) >= config.min_token_length) {
      out.push_back(current);
    }
    current.clear();
  };
  for (char ch : text) {
    const unsigned char c = static_cast<unsigned char>(ch);
    if (std::isalnum(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else {
      flush();
    }
  }
  flush();
  return out;
}

TextFeaturizer TextFeaturizer::Fit(std::span<const std::string> corpus,
                                   const FeaturizerConfig& config) {
  if (corpus.empty()) throw InvalidArgument("cannot fit featurizer: empty corpus");
  std::map<std::string, int> df;
  for (const std::string& doc : corpus) {
    const std::vector<std::string> toks = Tokenize(doc, config.tokenizer);
    const std::set<std::string> unique(toks.begin(), toks.end());
    for (const std::string& t : unique) ++df[t];
  }
  TextFeaturizer f;
  f.config_ = config;
  f.num_documents_ = static_cast<int>(corpus.size());
  const double n = static_cast<double>(corpus.size());
  for (const auto& [token, count] : df) {
    if (count < config.min_df) continue;
    f.tokens_.push_back(token);
    f.df_.push_back(count);
    f.idf_.push_back(std::log((1.0 + n) / (1.0 + count)) + 1.0);
  }
  f.BuildIndex();
  return f;
}

void TextFeaturizer::BuildIndex() {
  index_.clear();
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    index_.emplace(tokens_[i], static_cast<int>(i));
  }
}

int TextFeaturizer::ColumnOf(std::string_view token) const {
  auto it = index_.find(std::string(token));
  return it == index_.end() ? -1 : it->second;
}

SparseVector TextFeaturizer::Transform(std::string_view document) const {
  std::map<int, double> tf;
  for (const std::string& t : Tokenize(document, config_.tokenizer)) {
    const int col = ColumnOf(t);
    if (col >= 0) tf[col] += 1.0;
  }
  SparseVector v;
  v.reserve(tf.size());
  double norm2 = 0.0;
  for (const auto& [col, count] : tf) {
    const double w = count * idf_[col];
    v.emplace_back(col, w);
    norm2 += w * w;
  }
  if (norm2 > 0.0) {
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& [col, w] : v) w *= inv;
  }
  return v;
}

bool TextFeaturizer::operator==(const TextFeaturizer& other) const {
  return config_.min_df == other.config_.min_df &&
         config_.tokenizer.min_token_length ==
             other.config_.tokenizer.min_token_length &&
         num_documents_ == other.num_documents_ && tokens_ == other.tokens_ &&
         df_ == other.df_ && idf_ == other.idf_;
}

std::string FormatHexDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%a", v);
  return buf;
}

double ParseHexDouble(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') {
    throw DataError("malformed number '" + s + "' in model snapshot");
  }
  return v;
}

namespace {

void Expect(std::istream& in, const std::string& keyword) {
  std::string word;
  if (!(in >> word) || word != keyword) {
    throw DataError("model snapshot: expected '" + keyword + "', got '" + word +
                    "'");
  }
}

}  // namespace

// Format:
//   featurizer v1
//   min_df <int>
//   min_token_length <int>
//   documents <int>
//   vocabulary <V>
//   <token> <df> <idf-hex>     (V lines, ascending token order)
void TextFeaturizer::Write(std::ostream& out) const {
  out << "featurizer v1\n";
  out << "min_df " << config_.min_df << "\n";
  out << "min_token_length " << config_.tokenizer.min_token_length << "\n";
  out << "documents " << num_documents_ << "\n";
  out << "vocabulary " << tokens_.size() << "\n";
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    out << tokens_[i] << ' ' << df_[i] << ' ' << FormatHexDouble(idf_[i])
        << "\n";
  }
}

TextFeaturizer TextFeaturizer::Read(std::istream& in) {
  Expect(in, "featurizer");
  Expect(in, "v1");
  TextFeaturizer f;
  std::size_t vocab = 0;
  Expect(in, "min_df");
  in >> f.config_.min_df;
  Expect(in, "min_token_length");
  in >> f.config_.tokenizer.min_token_length;
  Expect(in, "documents");
  in >> f.num_documents_;
  Expect(in, "vocabulary");
  in >> vocab;
  if (!in) throw DataError("model snapshot: truncated featurizer header");
  for (std::size_t i = 0; i < vocab; ++i) {
    std::string token, idf;
    int df = 0;
    if (!(in >> token >> df >> idf)) {
      throw DataError("model snapshot: truncated vocabulary");
    }
    if (!f.tokens_.empty() && token <= f.tokens_.back()) {
      throw DataError("model snapshot: vocabulary not sorted");
    }
    f.tokens_.push_back(token);
    f.df_.push_back(df);
    f.idf_.push_back(ParseHexDouble(idf));
  }
  f.BuildIndex();
  return f;
}

}  // namespace forumgame::text
