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

#ifndef FORUMGAME_TEXT_H_
#define FORUMGAME_TEXT_H_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace forumgame::text {

struct TokenizerConfig {
  // Tokens shorter than this are dropped.
  int min_token_length = 2;
};

// Lowercases ASCII letters and splits on every non-alphanumeric byte.
std::vector<std::string> Tokenize(std::string_view text,
                                  const TokenizerConfig& config = {});

// Sparse feature vector: (column, weight) pairs in ascending column order.
using SparseVector = std::vector<std::pair<int, double>>;

struct FeaturizerConfig {
  TokenizerConfig tokenizer;
  int min_df = 2;
};

// TF-IDF featurizer with smoothed idf:
//   idf(t) = ln((1 + N) / (1 + df(t))) + 1
// and L2-normalized tf * idf document vectors. Immutable after Fit.
class TextFeaturizer {
 public:
  // Throws InvalidArgument on an empty corpus.
  static TextFeaturizer Fit(std::span<const std::string> corpus,
                            const FeaturizerConfig& config = {});

  SparseVector Transform(std::string_view document) const;

  int vocabulary_size() const { return static_cast<int>(tokens_.size()); }
  // Column of `token`, or -1.
  int ColumnOf(std::string_view token) const;
  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::vector<double>& idf() const { return idf_; }
  const std::vector<int>& document_frequency() const { return df_; }
  int num_documents() const { return num_documents_; }
  const FeaturizerConfig& config() const { return config_; }

  void Write(std::ostream& out) const;
  // Throws DataError on malformed input.
  static TextFeaturizer Read(std::istream& in);

  bool operator==(const TextFeaturizer& other) const;

 private:
  void BuildIndex();

  FeaturizerConfig config_;
  int num_documents_ = 0;
  std::vector<std::string> tokens_;  // sorted; position == column
  std::vector<int> df_;
  std::vector<double> idf_;
  std::unordered_map<std::string, int> index_;
};

// Serialization helpers: doubles are written as C99 hex floats so that
// snapshots round-trip bit-exactly.
std::string FormatHexDouble(double v);
double ParseHexDouble(const std::string& s);

}  // namespace forumgame::text

#endif  // FORUMGAME_TEXT_H_
