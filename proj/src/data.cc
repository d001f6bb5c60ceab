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

#include "forumgame/data.h"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "forumgame/error.h"
#include "forumgame/random.h"
#include "forumgame/stats.h"
#include "json.hpp"

namespace forumgame::data {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::int64_t kSecondsPerDay = 86400;

std::int64_t FloorDiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Howard Hinnant's days_from_civil / civil_from_days.
std::int64_t DaysFromCivil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = FloorDiv(y, 400);
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m > 2 ? m - 3 : m + 9) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

struct Civil {
  std::int64_t year;
  unsigned month;
  unsigned day;
};

Civil CivilFromDays(std::int64_t z) {
  z += 719468;
  const std::int64_t era = FloorDiv(z, 146097);
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp < 10 ? mp + 3 : mp - 9;
  return {static_cast<std::int64_t>(yoe) + era * 400 + (m <= 2), m, d};
}

bool IsDigits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

int ParseFixed(std::string_view s, std::size_t pos, std::size_t len,
               const std::string& text) {
  if (pos + len > s.size() || !IsDigits(s.substr(pos, len))) {
    throw DataError("invalid timestamp '" + text + "'");
  }
  int v = 0;
  for (std::size_t i = pos; i < pos + len; ++i) v = v * 10 + (s[i] - '0');
  return v;
}

std::optional<double> ParseDouble(const std::string& s) {
  if (s.empty()) return std::nullopt;
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::optional<std::int64_t> ParseInt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size() || errno == ERANGE) return std::nullopt;
  return v;
}

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// A field value from either input format.
struct Cell {
  enum Kind { kString, kNumber, kInteger } kind = kString;
  std::string text;
  double number = 0.0;
  std::int64_t integer = 0;
};

using Record = std::vector<std::pair<std::string, Cell>>;

const Cell* Find(const Record& r, const std::string& key) {
  for (const auto& [k, v] : r) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::optional<double> AsNumber(const Cell& c) {
  switch (c.kind) {
    case Cell::kNumber:
      return c.number;
    case Cell::kInteger:
      return static_cast<double>(c.integer);
    case Cell::kString:
      return ParseDouble(c.text);
  }
  return std::nullopt;
}

std::optional<std::int64_t> AsInteger(const Cell& c) {
  switch (c.kind) {
    case Cell::kInteger:
      return c.integer;
    case Cell::kNumber:
      if (c.number == std::floor(c.number) && std::abs(c.number) < 9e18) {
        return static_cast<std::int64_t>(c.number);
      }
      return std::nullopt;
    case Cell::kString:
      return ParseInt(c.text);
  }
  return std::nullopt;
}

std::string AsString(const Cell& c) {
  switch (c.kind) {
    case Cell::kString:
      return c.text;
    case Cell::kInteger:
      return std::to_string(c.integer);
    case Cell::kNumber:
      return FormatDouble(c.number);
  }
  return {};
}

const std::set<std::string>& ReservedFields() {
  static const std::set<std::string> kReserved = {
      "id", "timestamp", "domain", "title", "body", "view_count", "forum_score"};
  return kReserved;
}

Question BuildQuestion(const Record& r, long line, const IngestOptions& opts) {
  Question q;
  const Cell* id = Find(r, "id");
  if (id == nullptr || AsString(*id).empty()) throw DataError("missing 'id'", line);
  q.id = AsString(*id);

  const Cell* ts = Find(r, "timestamp");
  if (ts == nullptr) throw DataError("record '" + q.id + "': missing 'timestamp'", line);
  try {
    q.timestamp = ts->kind == Cell::kInteger ? ts->integer : ParseTimestamp(AsString(*ts));
  } catch (const DataError& e) {
    throw DataError("record '" + q.id + "': " + e.what(), line);
  }

  if (const Cell* c = Find(r, "domain")) q.domain = AsString(*c);
  if (const Cell* c = Find(r, "title")) q.title = StripHtml(AsString(*c));
  if (const Cell* c = Find(r, "body")) q.body = StripHtml(AsString(*c));

  const Cell* views = Find(r, "view_count");
  if (views == nullptr) throw DataError("record '" + q.id + "': missing 'view_count'", line);
  const std::optional<std::int64_t> v = AsInteger(*views);
  if (!v || *v < 0) {
    throw DataError("record '" + q.id + "': view_count must be a non-negative integer",
                    line);
  }
  q.view_count = *v;

  const Cell* util = Find(r, opts.utility_column);
  if (util == nullptr) {
    throw DataError("record '" + q.id + "': missing utility field '" +
                        opts.utility_column +
                        "'; map another column with the utility_column config key",
                    line);
  }
  const std::optional<double> u = AsNumber(*util);
  if (!u || *u < 0.0) {
    throw DataError("record '" + q.id + "': '" + opts.utility_column +
                        "' must be a non-negative number",
                    line);
  }
  q.u_g = *u;

  if (const Cell* c = Find(r, "forum_score")) {
    const std::optional<double> s = AsNumber(*c);
    if (!s || *s < 0.0 || *s > 1.0) {
      throw DataError("record '" + q.id + "': forum_score must be in [0, 1]", line);
    }
    q.forum_score = *s;
  }

  for (const auto& [key, cell] : r) {
    if (ReservedFields().count(key) != 0) continue;
    if (const std::optional<double> x = AsNumber(cell)) q.model_utilities[key] = *x;
  }
  q.model_utilities[opts.utility_column] = q.u_g;
  return q;
}

Cell CellFromJson(const Json& j) {
  Cell c;
  if (j.is_number_integer()) {
    c.kind = Cell::kInteger;
    c.integer = j.get<std::int64_t>();
  } else if (j.is_number_unsigned()) {
    c.kind = Cell::kInteger;
    c.integer = static_cast<std::int64_t>(j.get<std::uint64_t>());
  } else if (j.is_number_float()) {
    c.kind = Cell::kNumber;
    c.number = j.get<double>();
  } else if (j.is_string()) {
    c.text = j.get<std::string>();
  } else if (j.is_boolean()) {
    c.text = j.get<bool>() ? "true" : "false";
  } else if (!j.is_null()) {
    c.text = j.dump();
  }
  return c;
}

struct ParsedRecord {
  Record record;
  long line;
};

std::vector<ParsedRecord> ReadJsonl(std::istream& in) {
  std::vector<ParsedRecord> out;
  std::string text;
  long line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    const std::size_t first = text.find_first_not_of(" \t");
    if (first == std::string::npos || text[first] == '#') continue;
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw DataError(std::string("invalid JSON: ") + e.what(), line);
    }
    if (!j.is_object()) throw DataError("record is not a JSON object", line);
    Record r;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_null()) continue;
      r.emplace_back(it.key(), CellFromJson(it.value()));
    }
    out.push_back({std::move(r), line});
  }
  return out;
}

// RFC 4180 rows. Quoted fields may contain separators, doubled quotes and
// newlines. Reports the line on which each row starts.
std::vector<std::pair<std::vector<std::string>, long>> ReadCsvRows(std::istream& in) {
  const std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<std::pair<std::vector<std::string>, long>> rows;
  std::vector<std::string> row;
  std::string field;
  long line = 1;
  long row_line = 1;
  bool in_quotes = false;
  bool any = false;
  auto end_row = [&]() {
    row.push_back(std::move(field));
    field.clear();
    const bool blank = row.size() == 1 && row[0].empty();
    if (!blank) rows.emplace_back(std::move(row), row_line);
    row.clear();
    any = false;
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < s.size() && s[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    if (!any) {
      row_line = line;
      any = true;
    }
    if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\r') {
      // Part of a CRLF terminator.
    } else if (c == '\n') {
      end_row();
      ++line;
    } else {
      field += c;
    }
  }
  if (in_quotes) throw DataError("unterminated quoted field", row_line);
  if (any || !field.empty() || !row.empty()) end_row();
  return rows;
}

std::vector<ParsedRecord> ReadCsv(std::istream& in) {
  auto rows = ReadCsvRows(in);
  std::vector<ParsedRecord> out;
  if (rows.empty()) return out;
  const std::vector<std::string> header = rows[0].first;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& [cells, line] = rows[r];
    if (cells.size() != header.size()) {
      throw DataError("expected " + std::to_string(header.size()) + " columns, found " +
                          std::to_string(cells.size()),
                      line);
    }
    Record rec;
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (cells[c].empty()) continue;
      Cell cell;
      cell.text = cells[c];
      rec.emplace_back(header[c], std::move(cell));
    }
    out.push_back({std::move(rec), line});
  }
  return out;
}

std::string CsvQuote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void FillMetadata(Dataset& d, const std::vector<std::int64_t>& first_days) {
  d.metadata = {};
  for (std::size_t p = 0; p < d.pools.size(); ++p) {
    for (const Question& q : d.pools[p].questions()) ++d.metadata.domain_counts[q.domain];
    d.metadata.week_labels.push_back(IsoWeekLabel(first_days[p]));
    if (d.pools[p].degenerate_views()) d.metadata.degenerate_weeks.push_back(d.pools[p].week());
  }
}

}  // namespace

std::size_t Dataset::num_questions() const {
  std::size_t n = 0;
  for (const RoundPool& p : pools) n += p.size();
  return n;
}

std::int64_t WeekIndexOfDay(std::int64_t days_since_epoch) {
  return FloorDiv(days_since_epoch + 3, 7);
}

std::string IsoWeekLabel(std::int64_t days_since_epoch) {
  const std::int64_t weekday = days_since_epoch + 3 - 7 * WeekIndexOfDay(days_since_epoch);
  const std::int64_t thursday = days_since_epoch - weekday + 3;
  const Civil c = CivilFromDays(thursday);
  const std::int64_t doy = thursday - DaysFromCivil(c.year, 1, 1);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04lld-W%02lld", static_cast<long long>(c.year),
                static_cast<long long>(doy / 7 + 1));
  return buf;
}

std::int64_t ParseTimestamp(const std::string& text) {
  const std::string_view s = text;
  if (IsDigits(s) || (s.size() > 1 && s[0] == '-' && IsDigits(s.substr(1)))) {
    const std::optional<std::int64_t> v = ParseInt(text);
    if (!v) throw DataError("invalid timestamp '" + text + "'");
    return *v;
  }
  if (s.size() < 10 || s[4] != '-' || s[7] != '-') {
    throw DataError("invalid timestamp '" + text + "'");
  }
  const int year = ParseFixed(s, 0, 4, text);
  const int month = ParseFixed(s, 5, 2, text);
  const int day = ParseFixed(s, 8, 2, text);
  if (month < 1 || month > 12 || day < 1 || day > 31) {
    throw DataError("invalid timestamp '" + text + "'");
  }
  std::int64_t secs = DaysFromCivil(year, month, day) * kSecondsPerDay;
  std::size_t pos = 10;
  if (pos < s.size()) {
    if (s[pos] != 'T' && s[pos] != ' ') throw DataError("invalid timestamp '" + text + "'");
    ++pos;
    const int hh = ParseFixed(s, pos, 2, text);
    if (pos + 2 >= s.size() || s[pos + 2] != ':') {
      throw DataError("invalid timestamp '" + text + "'");
    }
    const int mm = ParseFixed(s, pos + 3, 2, text);
    pos += 5;
    int ss = 0;
    if (pos < s.size() && s[pos] == ':') {
      ss = ParseFixed(s, pos + 1, 2, text);
      pos += 3;
    }
    if (hh > 23 || mm > 59 || ss > 60) throw DataError("invalid timestamp '" + text + "'");
    secs += hh * 3600 + mm * 60 + ss;
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      const std::size_t start = pos;
      while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
      if (pos == start) throw DataError("invalid timestamp '" + text + "'");
    }
    if (pos < s.size()) {
      if (s[pos] == 'Z' && pos + 1 == s.size()) {
        ++pos;
      } else if ((s[pos] == '+' || s[pos] == '-') && s.size() - pos == 6 && s[pos + 3] == ':') {
        const int oh = ParseFixed(s, pos + 1, 2, text);
        const int om = ParseFixed(s, pos + 4, 2, text);
        const int sign = s[pos] == '+' ? 1 : -1;
        secs -= sign * (oh * 3600 + om * 60);
        pos = s.size();
      } else {
        throw DataError("invalid timestamp '" + text + "'");
      }
    }
  }
  return secs;
}

std::string FormatTimestamp(std::int64_t unix_seconds) {
  const std::int64_t days = FloorDiv(unix_seconds, kSecondsPerDay);
  const std::int64_t rem = unix_seconds - days * kSecondsPerDay;
  const Civil c = CivilFromDays(days);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%04lld-%02u-%02uT%02d:%02d:%02dZ",
                static_cast<long long>(c.year), c.month, c.day,
                static_cast<int>(rem / 3600), static_cast<int>(rem / 60 % 60),
                static_cast<int>(rem % 60));
  return buf;
}

std::string StripHtml(const std::string& html) {
  std::string out;
  out.reserve(html.size());
  bool in_tag = false;
  for (std::size_t i = 0; i < html.size(); ++i) {
    const char c = html[i];
    if (in_tag) {
      if (c == '>') in_tag = false;
      continue;
    }
    if (c == '<') {
      in_tag = true;
      continue;
    }
    if (c == '&') {
      static const std::pair<const char*, char> kEntities[] = {
          {"&amp;", '&'}, {"&lt;", '<'}, {"&gt;", '>'}, {"&quot;", '"'}, {"&#39;", '\''}};
      bool decoded = false;
      for (const auto& [name, ch] : kEntities) {
        if (html.compare(i, std::char_traits<char>::length(name), name) == 0) {
          out += ch;
          i += std::char_traits<char>::length(name) - 1;
          decoded = true;
          break;
        }
      }
      if (decoded) continue;
    }
    out += c;
  }
  return out;
}

Format DetectFormat(const std::string& path) {
  const std::size_t dot = path.rfind('.');
  if (dot != std::string::npos) {
    std::string ext = path.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext == "csv") return Format::kCsv;
  }
  return Format::kJsonl;
}

Dataset IngestStream(std::istream& in, Format format, const IngestOptions& options) {
  if (format == Format::kAuto) format = Format::kJsonl;
  const std::vector<ParsedRecord> records =
      format == Format::kCsv ? ReadCsv(in) : ReadJsonl(in);
  if (records.empty()) throw DataError("empty file: no records");

  std::map<std::int64_t, std::vector<Question>> by_week;
  std::map<std::int64_t, std::int64_t> first_day;
  std::map<std::string, long> seen;
  for (const ParsedRecord& pr : records) {
    Question q = BuildQuestion(pr.record, pr.line, options);
    const auto [it, inserted] = seen.emplace(q.id, pr.line);
    if (!inserted) {
      throw DataError("duplicate id '" + q.id + "' (first seen on line " +
                          std::to_string(it->second) + ")",
                      pr.line);
    }
    try {
      ValidateQuestion(q);
    } catch (const DataError& e) {
      throw DataError(e.what(), pr.line);
    }
    const std::int64_t day = FloorDiv(q.timestamp, kSecondsPerDay);
    const std::int64_t week = WeekIndexOfDay(day);
    first_day.emplace(week, day - (day + 3 - 7 * week));
    by_week[week].push_back(std::move(q));
  }

  Dataset d;
  const std::int64_t base = by_week.begin()->first;
  std::vector<std::int64_t> days;
  for (auto& [week, qs] : by_week) {
    const int index = static_cast<int>(week - base);
    for (Question& q : qs) q.week = index;
    d.pools.emplace_back(index, std::move(qs));
    days.push_back(first_day[week]);
  }
  FillMetadata(d, days);
  return d;
}

Dataset Ingest(const std::string& path, const IngestOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  const Format f = options.format == Format::kAuto ? DetectFormat(path) : options.format;
  return IngestStream(in, f, options);
}

std::size_t ValidateFile(const std::string& path, const IngestOptions& options) {
  return Ingest(path, options).num_questions();
}

Dataset NormalizeWeekly(const Dataset& dataset) {
  Dataset out;
  out.pretrain_weeks = dataset.pretrain_weeks;
  out.metadata = dataset.metadata;
  out.metadata.degenerate_weeks.clear();
  for (const RoundPool& p : dataset.pools) {
    const RoundPool bound(p.week(), p.questions(), MaxViewStatistic(p.questions()));
    out.pools.push_back(SetUtility(bound));
    if (bound.degenerate_views()) out.metadata.degenerate_weeks.push_back(p.week());
  }
  return out;
}

Split SplitPretrain(const Dataset& dataset, int weeks) {
  const int total = static_cast<int>(dataset.pools.size());
  if (weeks < 2) {
    throw ConfigError("split: the forum scorer needs at least 2 pre-training weeks "
                      "(one training, one validation); got " +
                      std::to_string(weeks));
  }
  if (weeks >= total) {
    throw ConfigError("split: " + std::to_string(weeks) +
                      " pre-training weeks leave no simulation rounds out of " +
                      std::to_string(total) + " pools");
  }
  const int validation = (weeks + 4) / 5;
  Split s;
  for (int i = 0; i < total; ++i) {
    const RoundPool& p = dataset.pools[i];
    if (i < weeks - validation) {
      s.train.push_back(p);
    } else if (i < weeks) {
      s.validation.push_back(p);
    } else {
      s.simulation.push_back(p);
    }
  }
  return s;
}

void SyntheticSpec::Validate() const {
  if (weeks < 1) throw ConfigError("synthetic: weeks must be positive");
  if (questions_per_week < 1) throw ConfigError("synthetic: questions_per_week must be positive");
  if (static_cast<long>(weeks) * questions_per_week < 3) {
    throw ConfigError("synthetic: need at least 3 questions to measure a correlation");
  }
  if (pretrain_weeks < 0) {
    throw ConfigError("synthetic: pretrain_weeks must be non-negative");
  }
  if (!(utility_correlation >= -1.0 && utility_correlation <= 1.0)) {
    throw ConfigError("synthetic: utility_correlation must be in [-1, 1]");
  }
  if (!(topic_effect >= 0.0 && topic_effect < 1.0)) {
    throw ConfigError("synthetic: topic_effect must be in [0, 1)");
  }
  if (!(view_log_sigma > 0.0) || !(utility_log_sigma > 0.0)) {
    throw ConfigError("synthetic: log-normal sigmas must be positive");
  }
  if (topic_vocabulary < 1 || shared_vocabulary < 1) {
    throw ConfigError("synthetic: vocabularies must be non-empty");
  }
  if (!(topic_word_share >= 0.0 && topic_word_share <= 1.0)) {
    throw ConfigError("synthetic: topic_word_share must be in [0, 1]");
  }
  if (domains.empty()) throw ConfigError("synthetic: at least one domain is required");
}

namespace {

constexpr std::uint64_t kLatentStream = 1;
constexpr std::uint64_t kTextStream = 2;
constexpr std::uint64_t kMetaStream = 3;

std::vector<std::int64_t> Views(const SyntheticSpec& spec, const std::vector<double>& w,
                                const std::vector<double>& z2, const std::vector<double>& e,
                                double loading) {
  const double c = spec.topic_effect;
  const double s = std::sqrt(1.0 - c * c);
  const double r = std::sqrt(std::max(0.0, 1.0 - loading * loading));
  std::vector<std::int64_t> v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double z = c * w[i] + s * (loading * z2[i] + r * e[i]);
    v[i] = static_cast<std::int64_t>(
        std::floor(std::exp(spec.view_log_mean + spec.view_log_sigma * z)));
  }
  return v;
}

double MeasuredRho(const std::vector<std::int64_t>& views, const std::vector<double>& u) {
  std::vector<double> x(views.begin(), views.end());
  const analysis::CorrelationResult r = analysis::Spearman(x, u);
  return r.defined ? r.rho : 0.0;
}

std::string Sentence(Rng& rng, int words, bool topic_a, const SyntheticSpec& spec) {
  std::string s;
  for (int i = 0; i < words; ++i) {
    if (i > 0) s += ' ';
    if (rng.Bernoulli(spec.topic_word_share)) {
      s += topic_a ? "ta" : "tb";
      s += std::to_string(rng.UniformIndex(spec.topic_vocabulary));
    } else {
      s += "w" + std::to_string(rng.UniformIndex(spec.shared_vocabulary));
    }
  }
  return s;
}

}  // namespace

SyntheticDataset GenerateSynthetic(const SyntheticSpec& spec) {
  spec.Validate();
  const std::size_t n = static_cast<std::size_t>(spec.weeks) * spec.questions_per_week;

  Rng latent(DeriveSeed(spec.seed, kLatentStream));
  std::vector<double> w(n), z2(n), e(n), u(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = latent.Bernoulli(0.5) ? 1.0 : -1.0;
    z2[i] = latent.Normal();
    e[i] = latent.Normal();
    u[i] = std::exp(spec.utility_log_mean + spec.utility_log_sigma * z2[i]);
  }

  // Bisection on the copula loading against the realized correlation.
  const double target = spec.utility_correlation;
  constexpr double kTolerance = 0.05;
  double lo = -1.0, hi = 1.0;
  const double rho_lo = MeasuredRho(Views(spec, w, z2, e, lo), u);
  const double rho_hi = MeasuredRho(Views(spec, w, z2, e, hi), u);
  if (target < rho_lo - kTolerance || target > rho_hi + kTolerance) {
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "synthetic: correlation %.3f is unreachable with these marginals "
                  "and topic_effect (reachable [%.3f, %.3f])",
                  target, rho_lo, rho_hi);
    throw ConfigError(buf);
  }
  double loading;
  if (target <= rho_lo) {
    loading = lo;
  } else if (target >= rho_hi) {
    loading = hi;
  } else {
    for (int it = 0; it < 40; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (MeasuredRho(Views(spec, w, z2, e, mid), u) < target) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    loading = 0.5 * (lo + hi);
  }
  const std::vector<std::int64_t> views = Views(spec, w, z2, e, loading);
  const double measured = MeasuredRho(views, u);
  if (std::abs(measured - target) > kTolerance) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "synthetic: measured correlation %.4f misses target %.4f by more than %.2f",
                  measured, target, kTolerance);
    throw ConfigError(buf);
  }

  SyntheticDataset out;
  out.calibrated_loading = loading;
  out.measured_correlation = measured;
  Rng text(DeriveSeed(spec.seed, kTextStream));
  Rng meta(DeriveSeed(spec.seed, kMetaStream));
  constexpr std::int64_t kSecondsPerWeek = 7 * kSecondsPerDay;
  std::vector<std::int64_t> week_days;
  Dataset raw;
  raw.pretrain_weeks = std::min(spec.pretrain_weeks, spec.weeks);
  for (int week = 0; week < spec.weeks; ++week) {
    std::vector<Question> qs;
    qs.reserve(spec.questions_per_week);
    for (int j = 0; j < spec.questions_per_week; ++j) {
      const std::size_t i = static_cast<std::size_t>(week) * spec.questions_per_week + j;
      const bool topic_a = w[i] > 0.0;
      Question q;
      q.id = "syn-" + std::to_string(week) + "-" + std::to_string(j);
      q.week = week;
      q.domain = spec.domains[meta.UniformIndex(spec.domains.size())];
      q.timestamp = spec.start_unix_seconds + week * kSecondsPerWeek +
                    static_cast<std::int64_t>(meta.UniformIndex(kSecondsPerWeek));
      q.title = Sentence(text, 6, topic_a, spec);
      q.body = Sentence(text, 24, topic_a, spec);
      q.view_count = views[i];
      q.u_g = u[i];
      q.model_utilities["u_g"] = u[i];
      out.topic_a[q.id] = topic_a;
      qs.push_back(std::move(q));
    }
    raw.pools.emplace_back(week, std::move(qs));
    week_days.push_back(FloorDiv(spec.start_unix_seconds, kSecondsPerDay) + 7 * week);
  }
  FillMetadata(raw, week_days);
  out.dataset = NormalizeWeekly(raw);
  return out;
}

void WriteJsonl(const Dataset& dataset, std::ostream& out) {
  for (const RoundPool& p : dataset.pools) {
    for (const Question& q : p.questions()) {
      Json j;
      j["id"] = q.id;
      j["timestamp"] = FormatTimestamp(q.timestamp);
      j["domain"] = q.domain;
      j["title"] = q.title;
      j["body"] = q.body;
      j["view_count"] = q.view_count;
      j["u_g"] = q.u_g;
      if (q.forum_score) j["forum_score"] = *q.forum_score;
      for (const auto& [k, v] : q.model_utilities) {
        if (k != "u_g") j[k] = v;
      }
      out << j.dump() << '\n';
    }
  }
}

void WriteCsv(const Dataset& dataset, std::ostream& out) {
  std::set<std::string> extra;
  bool any_score = false;
  for (const RoundPool& p : dataset.pools) {
    for (const Question& q : p.questions()) {
      any_score = any_score || q.forum_score.has_value();
      for (const auto& [k, v] : q.model_utilities) {
        if (k != "u_g" && ReservedFields().count(k) == 0) extra.insert(k);
      }
    }
  }
  out << "id,timestamp,domain,title,body,view_count,u_g";
  if (any_score) out << ",forum_score";
  for (const std::string& k : extra) out << ',' << CsvQuote(k);
  out << '\n';
  for (const RoundPool& p : dataset.pools) {
    for (const Question& q : p.questions()) {
      out << CsvQuote(q.id) << ',' << FormatTimestamp(q.timestamp) << ','
          << CsvQuote(q.domain) << ',' << CsvQuote(q.title) << ',' << CsvQuote(q.body)
          << ',' << q.view_count << ',' << FormatDouble(q.u_g);
      if (any_score) {
        out << ',';
        if (q.forum_score) out << FormatDouble(*q.forum_score);
      }
      for (const std::string& k : extra) {
        out << ',';
        const auto it = q.model_utilities.find(k);
        if (it != q.model_utilities.end()) out << FormatDouble(it->second);
      }
      out << '\n';
    }
  }
}

}  // namespace forumgame::data
