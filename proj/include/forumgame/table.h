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

#ifndef FORUMGAME_TABLE_H_
#define FORUMGAME_TABLE_H_

#include <optional>
#include <string>
#include <vector>

namespace forumgame {

// A small report table rendered as aligned UTF-8 text or CSV.
class Table {
 public:
  struct Cell {
    std::string text;
    // Numeric cells print with `decimals` digits in text output. In CSV they
    // print with 17 significant digits, or with `decimals` digits when
    // `fixed_in_csv` is set.
    std::optional<double> value;
    int decimals = 3;
    bool fixed_in_csv = false;

    static Cell Text(std::string s) { return {std::move(s), std::nullopt, 0, false}; }
    static Cell Number(double v, int decimals = 3, bool fixed_in_csv = false) {
      return {"", v, decimals, fixed_in_csv};
    }
  };

  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  // Throws InvalidArgument when the row width differs from the header.
  void AddRow(std::vector<Cell> row);

  const std::vector<std::string>& header() const { return header_; }
  std::size_t rows() const { return rows_.size(); }
  // Cell text as rendered in CSV.
  std::string CsvCell(std::size_t row, std::size_t col) const;

  // Columns padded to their widest entry; numbers right-aligned.
  std::string ToText() const;
  std::string ToCsv() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace forumgame

#endif  // FORUMGAME_TABLE_H_
