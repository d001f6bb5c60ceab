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

#include "forumgame/table.h"

#include <algorithm>
#include <cstdio>

#include "forumgame/error.h"

namespace forumgame {
namespace {

std::string Fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string Full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string CsvQuote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

// Display width in code points, so UTF-8 labels align.
std::size_t Width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s) w += (c & 0xC0) != 0x80;
  return w;
}

std::string TextOf(const Table::Cell& c) {
  return c.value ? Fixed(*c.value, c.decimals) : c.text;
}

}  // namespace

void Table::AddRow(std::vector<Cell> row) {
  if (row.size() != header_.size()) {
    throw InvalidArgument("table row has " + std::to_string(row.size()) +
                          " cells, header has " + std::to_string(header_.size()));
  }
  rows_.push_back(std::move(row));
}

std::string Table::CsvCell(std::size_t row, std::size_t col) const {
  const Cell& c = rows_.at(row).at(col);
  if (!c.value) return c.text;
  return c.fixed_in_csv ? Fixed(*c.value, c.decimals) : Full(*c.value);
}

std::string Table::ToText() const {
  std::vector<std::size_t> width(header_.size());
  for (std::size_t c = 0; c < header_.size(); ++c) width[c] = Width(header_[c]);
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], Width(TextOf(row[c])));
    }
  }
  auto pad = [](const std::string& s, std::size_t w, bool right) {
    const std::string fill(w - Width(s), ' ');
    return right ? fill + s : s + fill;
  };
  std::string out;
  for (std::size_t c = 0; c < header_.size(); ++c) {
    if (c > 0) out += "  ";
    out += pad(header_[c], width[c], c > 0);
  }
  out += '\n';
  std::size_t total = 0;
  for (std::size_t w : width) total += w;
  out += std::string(total + 2 * (width.size() - 1), '-') + '\n';
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += "  ";
      out += pad(TextOf(row[c]), width[c], row[c].value.has_value() || c > 0);
    }
    out += '\n';
  }
  return out;
}

std::string Table::ToCsv() const {
  std::string out;
  for (std::size_t c = 0; c < header_.size(); ++c) {
    if (c > 0) out += ',';
    out += CsvQuote(header_[c]);
  }
  out += '\n';
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < header_.size(); ++c) {
      if (c > 0) out += ',';
      out += CsvQuote(CsvCell(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace forumgame
