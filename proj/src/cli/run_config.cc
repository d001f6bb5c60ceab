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

#include "forumgame/cli/run_config.h"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "forumgame/error.h"

namespace forumgame::cli {
namespace {

std::string Trim(const std::string& s) {
  const std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string Unquote(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  return s;
}

std::vector<std::string> SplitList(const std::string& s) {
  std::string body = Trim(s);
  if (body.size() >= 2 && body.front() == '[' && body.back() == ']') {
    body = body.substr(1, body.size() - 2);
  }
  std::vector<std::string> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = Unquote(Trim(item));
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long long ToInt(const std::string& key, const std::string& v) {
  errno = 0;
  char* end = nullptr;
  const long long x = std::strtoll(v.c_str(), &end, 10);
  if (v.empty() || *end != '\0' || errno == ERANGE) {
    throw ConfigError("config key '" + key + "': expected an integer, got '" + v + "'");
  }
  return x;
}

int ToInt32(const std::string& key, const std::string& v) {
  const long long x = ToInt(key, v);
  if (x < -2147483647LL || x > 2147483647LL) {
    throw ConfigError("config key '" + key + "': value out of range");
  }
  return static_cast<int>(x);
}

std::uint64_t ToU64(const std::string& key, const std::string& v) {
  errno = 0;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
  if (v.empty() || v[0] == '-' || *end != '\0' || errno == ERANGE) {
    throw ConfigError("config key '" + key + "': expected an unsigned integer, got '" + v +
                      "'");
  }
  return x;
}

double ToDouble(const std::string& key, const std::string& v) {
  errno = 0;
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (v.empty() || *end != '\0' || errno == ERANGE || !std::isfinite(x)) {
    throw ConfigError("config key '" + key + "': expected a number, got '" + v + "'");
  }
  return x;
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string Join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ',';
    out += items[i];
  }
  return out;
}

}  // namespace

void RunConfig::Set(const std::string& raw_key, const std::string& raw_value) {
  std::string key = Trim(raw_key);
  // Game parameters may sit in a [game] section.
  if (key.rfind("game.", 0) == 0) key = key.substr(5);
  const std::string v = Unquote(Trim(raw_value));
  data::SyntheticSpec& s = synthetic;
  if (key == "m_cap") {
    game.m_cap = ToInt32(key, v);
  } else if (key == "k_cap") {
    game.k_cap = ToInt32(key, v);
  } else if (key == "rounds") {
    game.rounds = ToInt32(key, v);
  } else if (key == "retrain_period") {
    game.retrain_period = ToInt32(key, v);
  } else if (key == "theta") {
    if (v == "auto" || v.empty()) {
      game.theta.reset();
    } else {
      game.theta = ToDouble(key, v);
    }
  } else if (key == "seed") {
    game.seed = ToU64(key, v);
  } else if (key == "strategy") {
    game.strategy_g = ParseProposalStrategy(v);
  } else if (key == "scorer") {
    if (v != "builtin" && v != "precomputed") {
      throw ConfigError("config key 'scorer': expected builtin or precomputed, got '" + v +
                        "'");
    }
    game.scorer_f = v;
  } else if (key == "pretrain_weeks") {
    pretrain_weeks = ToInt32(key, v);
  } else if (key == "utility_column") {
    if (v.empty()) throw ConfigError("config key 'utility_column' must not be empty");
    utility_column = v;
  } else if (key == "heuristics") {
    heuristics.clear();
    for (const std::string& h : SplitList(v)) heuristics.push_back(nash::ParseHeuristic(h));
  } else if (key == "oracle_budget") {
    oracle_budget = ToDouble(key, v);
  } else if (key == "ttest") {
    if (v != "paired" && v != "welch") {
      throw ConfigError("config key 'ttest': expected paired or welch, got '" + v + "'");
    }
    paired = v == "paired";
  } else if (key == "significance") {
    significance = ToDouble(key, v);
  } else if (key == "models") {
    models = SplitList(v);
  } else if (key == "data") {
    data = v;
  } else if (key == "out_dir") {
    out_dir = v;
  } else if (key == "synthetic.weeks") {
    s.weeks = ToInt32(key, v);
  } else if (key == "synthetic.questions_per_week") {
    s.questions_per_week = ToInt32(key, v);
  } else if (key == "synthetic.utility_correlation") {
    s.utility_correlation = ToDouble(key, v);
  } else if (key == "synthetic.topic_effect") {
    s.topic_effect = ToDouble(key, v);
  } else if (key == "synthetic.view_log_mean") {
    s.view_log_mean = ToDouble(key, v);
  } else if (key == "synthetic.view_log_sigma") {
    s.view_log_sigma = ToDouble(key, v);
  } else if (key == "synthetic.utility_log_mean") {
    s.utility_log_mean = ToDouble(key, v);
  } else if (key == "synthetic.utility_log_sigma") {
    s.utility_log_sigma = ToDouble(key, v);
  } else if (key == "synthetic.topic_vocabulary") {
    s.topic_vocabulary = ToInt32(key, v);
  } else if (key == "synthetic.shared_vocabulary") {
    s.shared_vocabulary = ToInt32(key, v);
  } else if (key == "synthetic.topic_word_share") {
    s.topic_word_share = ToDouble(key, v);
  } else if (key == "synthetic.domains") {
    s.domains = SplitList(v);
  } else if (key == "synthetic.start_unix_seconds") {
    s.start_unix_seconds = ToInt(key, v);
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

void RunConfig::Validate() const {
  game.Validate();
  if (pretrain_weeks < 2) {
    throw ConfigError("pretrain_weeks must be at least 2 (training and validation weeks)");
  }
  if (heuristics.empty()) throw ConfigError("heuristics list is empty");
  if (!(oracle_budget >= 1.0)) throw ConfigError("oracle_budget must be at least 1");
  if (!(significance > 0.0 && significance < 1.0)) {
    throw ConfigError("significance must be in (0, 1)");
  }
  if (game.theta && !(*game.theta >= 0.0 && *game.theta <= 1.0)) {
    throw ConfigError("theta must be in [0, 1]");
  }
}

std::string RunConfig::Canonical() const {
  std::vector<std::string> hs;
  for (nash::Heuristic h : heuristics) hs.emplace_back(nash::ToString(h));
  const data::SyntheticSpec& s = synthetic;
  std::ostringstream o;
  o << "m_cap = " << game.m_cap << '\n'
    << "k_cap = " << game.k_cap << '\n'
    << "rounds = " << game.rounds << '\n'
    << "retrain_period = " << game.retrain_period << '\n'
    << "theta = " << (game.theta ? Num(*game.theta) : "auto") << '\n'
    << "seed = " << game.seed << '\n'
    << "strategy = " << ToString(game.strategy_g) << '\n'
    << "scorer = " << game.scorer_f << '\n'
    << "pretrain_weeks = " << pretrain_weeks << '\n'
    << "utility_column = \"" << utility_column << "\"\n"
    << "heuristics = " << Join(hs) << '\n'
    << "oracle_budget = " << Num(oracle_budget) << '\n'
    << "ttest = " << (paired ? "paired" : "welch") << '\n'
    << "significance = " << Num(significance) << '\n'
    << "models = " << Join(models) << '\n'
    << "synthetic.weeks = " << s.weeks << '\n'
    << "synthetic.questions_per_week = " << s.questions_per_week << '\n'
    << "synthetic.utility_correlation = " << Num(s.utility_correlation) << '\n'
    << "synthetic.topic_effect = " << Num(s.topic_effect) << '\n'
    << "synthetic.view_log_mean = " << Num(s.view_log_mean) << '\n'
    << "synthetic.view_log_sigma = " << Num(s.view_log_sigma) << '\n'
    << "synthetic.utility_log_mean = " << Num(s.utility_log_mean) << '\n'
    << "synthetic.utility_log_sigma = " << Num(s.utility_log_sigma) << '\n'
    << "synthetic.topic_vocabulary = " << s.topic_vocabulary << '\n'
    << "synthetic.shared_vocabulary = " << s.shared_vocabulary << '\n'
    << "synthetic.topic_word_share = " << Num(s.topic_word_share) << '\n'
    << "synthetic.domains = " << Join(s.domains) << '\n'
    << "synthetic.start_unix_seconds = " << s.start_unix_seconds << '\n';
  return o.str();
}

RunConfig RunConfig::Parse(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string line, section;
  long n = 0;
  while (std::getline(in, line)) {
    ++n;
    // '#' starts a comment unless it sits inside a quoted value.
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line.resize(i);
        break;
      }
    }
    line = Trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = Trim(line.substr(1, line.size() - 2));
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(n) + ": expected key = value");
    }
    const std::string key = Trim(line.substr(0, eq));
    try {
      c.Set(section.empty() ? key : section + "." + key, line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("config line " + std::to_string(n) + ": " + e.what());
    }
  }
  return c;
}

RunConfig RunConfig::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return Parse(ss.str());
}

}  // namespace forumgame::cli
