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

#include "forumgame/cli/cli.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "forumgame/analysis.h"
#include "forumgame/cli/manifest.h"
#include "forumgame/cli/run_config.h"
#include "forumgame/data.h"
#include "forumgame/engine.h"
#include "forumgame/error.h"
#include "forumgame/nash_opt.h"
#include "forumgame/strategies.h"
#include "forumgame/text.h"
#include "json.hpp"

namespace forumgame::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

enum class Level { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

class Logger {
 public:
  explicit Logger(std::ostream& err) : err_(err) {
    const char* env = std::getenv("FORUMGAME_LOG_LEVEL");
    const std::string v = env ? env : "";
    if (v == "error") level_ = Level::kError;
    if (v == "info") level_ = Level::kInfo;
    if (v == "debug") level_ = Level::kDebug;
  }

  void Error(const std::string& msg) {
    error_logged_ = true;
    Emit(Level::kError, "error", msg);
  }
  void Warn(const std::string& msg) { Emit(Level::kWarn, "warn", msg); }
  void Info(const std::string& msg) { Emit(Level::kInfo, "info", msg); }
  bool error_logged() const { return error_logged_; }

 private:
  void Emit(Level l, const char* tag, const std::string& msg) {
    if (static_cast<int>(l) <= static_cast<int>(level_)) {
      err_ << "forumgame: " << tag << ": " << msg << '\n';
    }
  }

  std::ostream& err_;
  Level level_ = Level::kWarn;
  bool error_logged_ = false;
};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string Fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string IndexSet(std::span<const int> idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(idx[i]);
  }
  return s + "}";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Parsed command-line flags. Empty strings mean "not given".
struct Flags {
  std::string config, data, out_dir, seed, strategy, heuristics, oracle_budget;
  std::string instance, k, manifest;
  std::vector<std::string> ledgers;
  bool paired = false;
  bool welch = false;
  bool exact = false;
};

// State of one run: settings, the manifest being assembled, and the output
// files collected in memory until the run succeeds.
struct Run {
  std::string command;
  RunConfig config;
  RunManifest manifest;
  std::map<std::string, std::string> files;
  Logger* log = nullptr;
  std::ostream* out = nullptr;

  const std::string& hash() const { return manifest.hash; }

  std::string InputPath(const std::string& role) const {
    for (const ManifestInput& in : manifest.inputs) {
      if (in.role == role) return in.path;
    }
    return "";
  }
  std::vector<std::string> InputPaths(const std::string& role) const {
    std::vector<std::string> v;
    for (const ManifestInput& in : manifest.inputs) {
      if (in.role == role) v.push_back(in.path);
    }
    return v;
  }
  std::optional<std::string> Option(const std::string& key) const {
    const auto it = manifest.options.find(key);
    if (it == manifest.options.end()) return std::nullopt;
    return it->second;
  }

  // Text outputs carry the manifest hash on a leading comment line.
  void AddText(const std::string& name, const std::string& body) {
    files[name] = "# manifest_hash=" + hash() + "\n" + body;
  }
  void AddJson(const std::string& name, Json j) {
    Json stamped;
    stamped["manifest_hash"] = hash();
    for (auto it = j.begin(); it != j.end(); ++it) stamped[it.key()] = it.value();
    files[name] = stamped.dump(2) + "\n";
  }
  void AddRaw(const std::string& name, const std::string& body) { files[name] = body; }
};

// ---------------------------------------------------------------------------
// Shared steps.

data::Dataset LoadDataset(Run& run) {
  const std::string path = run.InputPath("data");
  if (path.empty()) throw ConfigError("no dataset given (use --data or the data config key)");
  data::IngestOptions opts;
  opts.utility_column = run.config.utility_column;
  data::Dataset d = data::NormalizeWeekly(data::Ingest(path, opts));
  d.pretrain_weeks = run.config.pretrain_weeks;
  run.log->Info("loaded " + std::to_string(d.num_questions()) + " questions in " +
                std::to_string(d.pools.size()) + " weekly pools from " + path);
  for (int w : d.metadata.degenerate_weeks) {
    run.log->Warn("week " + std::to_string(w) + " has only zero view counts");
  }
  return d;
}

struct GameSetup {
  data::Split split;
  std::vector<RoundPool> window;  // the simulated rounds
};

GameSetup Setup(Run& run, const data::Dataset& d) {
  GameSetup s;
  s.split = data::SplitPretrain(d, run.config.pretrain_weeks);
  const std::size_t rounds = static_cast<std::size_t>(run.config.game.rounds);
  if (s.split.simulation.size() < rounds) {
    throw ConfigError("simulation needs " + std::to_string(rounds) +
                      " weekly pools after the " + std::to_string(run.config.pretrain_weeks) +
                      " pre-training weeks, but the dataset provides " +
                      std::to_string(s.split.simulation.size()));
  }
  s.window.assign(s.split.simulation.begin(), s.split.simulation.begin() + rounds);
  return s;
}

strategies::ForumScorer BuildScorer(Run& run, const GameSetup& s) {
  strategies::ForumScorer scorer =
      run.config.game.scorer_f == "precomputed"
          ? strategies::CalibratePrecomputedScorer(s.split.validation)
          : strategies::TrainTextForumScorer(s.split.train, s.split.validation);
  if (scorer.calibration.low_confidence) {
    run.log->Warn("forum threshold calibrated on only " +
                  std::to_string(scorer.calibration.positives) + " positive examples");
  }
  if (run.config.game.theta) scorer.theta = *run.config.game.theta;
  run.log->Info("forum threshold theta = " + Num(scorer.theta));

  std::string snap = "forum-scorer v1\n";
  snap += "model " + scorer.model->name() + "\n";
  snap += "theta " + text::FormatHexDouble(scorer.theta) + "\n";
  snap += "calibrated_theta " + text::FormatHexDouble(scorer.calibration.theta) + "\n";
  snap += "precision " + text::FormatHexDouble(scorer.calibration.precision) + "\n";
  snap += "recall " + text::FormatHexDouble(scorer.calibration.recall) + "\n";
  if (const auto* t = dynamic_cast<const strategies::TextScoringModel*>(scorer.model.get())) {
    snap += t->model().Serialize();
  }
  run.AddText("forum_scorer.txt", snap);
  return scorer;
}

Json CalibrationJson(const strategies::ForumScorer& scorer) {
  const strategies::Calibration& c = scorer.calibration;
  return Json{{"theta", scorer.theta},
              {"calibrated_theta", c.theta},
              {"precision", c.precision},
              {"recall", c.recall},
              {"positives", c.positives},
              {"negatives", c.negatives},
              {"low_confidence", c.low_confidence}};
}

std::string LedgerCsv(const Run& run, const GameLedger& ledger) {
  std::ostringstream o;
  engine::WriteLedgerCsv(ledger, o, run.hash());
  return o.str();
}

engine::AsymmetricResult Simulate(Run& run, const GameSetup& s,
                                  const strategies::ForumScorer& scorer,
                                  ProposalStrategy strategy) {
  GameConfig cfg = run.config.game;
  cfg.strategy_g = strategy;
  cfg.theta = scorer.theta;
  engine::AsymmetricResult r = engine::RunAsymmetricDetailed(s.window, cfg, scorer);
  const std::string name(ToString(strategy));
  run.AddRaw("ledger_" + name + ".csv", LedgerCsv(run, r.ledger));
  if (strategy == ProposalStrategy::kUtility) {
    run.AddText("acceptance_model_" + name + ".txt", r.final_model.Serialize());
  }
  run.log->Info("strategy " + name + ": cum_u_g = " + Num(r.ledger.cum_u_g()) +
                ", cum_u_f = " + Num(r.ledger.cum_u_f()));
  return r;
}

std::vector<engine::NamedLedger> FullInfo(Run& run, const std::vector<RoundPool>& window) {
  std::vector<engine::NamedLedger> runs;
  for (nash::Heuristic h : run.config.heuristics) {
    engine::NamedLedger nl;
    nl.name = std::string(nash::ToString(h));
    nl.ledger = engine::RunFullInformation(window, h, run.config.game.k_cap,
                                           run.config.game.seed);
    run.AddRaw("full_info_" + nl.name + ".csv", LedgerCsv(run, nl.ledger));
    runs.push_back(std::move(nl));
  }
  return runs;
}

void AddTable(Run& run, const std::string& stem, const Table& t) {
  run.AddText(stem + ".txt", t.ToText());
  run.AddText(stem + ".csv", t.ToCsv());
}

Json EurrJson(const engine::EurrReport& r) {
  return Json::parse(engine::EurrReportJson(r));
}

// ---------------------------------------------------------------------------
// Commands.

void CmdValidate(Run& run) {
  const std::string path = run.InputPath("data");
  if (path.empty()) throw ConfigError("no dataset given (use --data or the data config key)");
  data::IngestOptions opts;
  opts.utility_column = run.config.utility_column;
  const data::Dataset d = data::Ingest(path, opts);
  Json domains = Json::object();
  for (const auto& [k, v] : d.metadata.domain_counts) domains[k] = v;
  run.AddJson("validation.json", Json{{"records", d.num_questions()},
                                      {"weeks", d.pools.size()},
                                      {"first_week", d.metadata.week_labels.front()},
                                      {"last_week", d.metadata.week_labels.back()},
                                      {"domains", domains}});
  *run.out << "valid: " << d.num_questions() << " records in " << d.pools.size()
           << " weekly pools (" << d.metadata.week_labels.front() << " to "
           << d.metadata.week_labels.back() << ")\n";
}

void CmdGenerate(Run& run) {
  data::SyntheticSpec spec = run.config.synthetic;
  spec.seed = run.config.game.seed;
  spec.pretrain_weeks = run.config.pretrain_weeks;
  const data::SyntheticDataset s = data::GenerateSynthetic(spec);
  std::ostringstream jsonl;
  data::WriteJsonl(s.dataset, jsonl);
  run.AddText("dataset.jsonl", jsonl.str());
  std::string topics = "id,topic\n";
  for (const RoundPool& p : s.dataset.pools) {
    for (const Question& q : p.questions()) {
      topics += q.id + "," + (s.topic_a.at(q.id) ? "A" : "B") + "\n";
    }
  }
  run.AddText("topics.csv", topics);
  run.AddJson("generation.json", Json{{"questions", s.dataset.num_questions()},
                                      {"weeks", s.dataset.pools.size()},
                                      {"target_correlation", spec.utility_correlation},
                                      {"measured_correlation", s.measured_correlation},
                                      {"calibrated_loading", s.calibrated_loading}});
  *run.out << "generated " << s.dataset.num_questions() << " questions in "
           << s.dataset.pools.size() << " weeks; Spearman(views, u_g) = "
           << Fixed(s.measured_correlation, 4) << "\n";
}

void CmdSimulate(Run& run) {
  const data::Dataset d = LoadDataset(run);
  const GameSetup s = Setup(run, d);
  const strategies::ForumScorer scorer = BuildScorer(run, s);
  const ProposalStrategy strategy = run.config.game.strategy_g;
  const engine::AsymmetricResult r = Simulate(run, s, scorer, strategy);
  run.AddJson("summary.json", Json{{"strategy", std::string(ToString(strategy))},
                                   {"rounds", r.ledger.rounds()},
                                   {"cum_u_g", r.ledger.cum_u_g()},
                                   {"cum_u_f", r.ledger.cum_u_f()},
                                   {"retrain_rounds", r.retrain_rounds},
                                   {"forum", CalibrationJson(scorer)}});
  *run.out << "simulate: strategy=" << ToString(strategy) << " rounds=" << r.ledger.rounds()
           << " theta=" << Fixed(scorer.theta, 4) << " cum_u_g=" << Fixed(r.ledger.cum_u_g(), 4)
           << " cum_norm_views=" << Fixed(r.ledger.cum_u_f(), 4) << "\n";
}

void CmdFullInfo(Run& run) {
  const data::Dataset d = LoadDataset(run);
  const GameSetup s = Setup(run, d);
  const std::vector<engine::NamedLedger> runs = FullInfo(run, s.window);
  const Table t = analysis::FullInformationTable(runs);
  AddTable(run, "full_info_table", t);
  *run.out << t.ToText();
}

void CmdEurr(Run& run) {
  const data::Dataset d = LoadDataset(run);
  const GameSetup s = Setup(run, d);
  GameLedger realized;
  std::string label;
  const std::vector<std::string> ledgers = run.InputPaths("ledger");
  if (ledgers.size() > 1) throw ConfigError("eurr takes at most one --ledger");
  if (!ledgers.empty()) {
    std::istringstream in(ReadFile(ledgers[0]));
    realized = engine::ReadLedgerCsv(in);
    label = fs::path(ledgers[0]).stem().string();
  } else {
    const strategies::ForumScorer scorer = BuildScorer(run, s);
    realized = Simulate(run, s, scorer, run.config.game.strategy_g).ledger;
    label = std::string(ToString(run.config.game.strategy_g));
  }
  const std::vector<engine::NamedLedger> runs = FullInfo(run, s.window);
  const engine::EurrReport rep = engine::ComputeEurr(realized, runs);
  Json j = EurrJson(rep);
  j["realized"] = label;
  if (run.Option("exact") == "1") {
    const engine::UrrReport urr =
        engine::ExactUrr(realized, s.window, run.config.game.k_cap, run.config.oracle_budget);
    j["urr_g"] = urr.urr_g;
    j["urr_f"] = urr.urr_f;
    j["optimum_u_g"] = urr.optimum_u_g;
    j["optimum_u_f"] = urr.optimum_u_f;
  }
  run.AddJson("eurr.json", j);
  const std::vector<analysis::AsymmetricRow> rows = {{label, realized, rep}};
  AddTable(run, "eurr_table", analysis::AsymmetricTable(rows));
  *run.out << "EURR_G " << Fixed(rep.eurr_g, 3) << " (best " << rep.best_heuristic_g << ")\n"
           << "EURR_F " << Fixed(rep.eurr_f, 3) << " (best " << rep.best_heuristic_f << ")\n";
  if (j.contains("urr_g")) {
    *run.out << "URR_G " << Fixed(j["urr_g"].get<double>(), 3) << "\n"
             << "URR_F " << Fixed(j["urr_f"].get<double>(), 3) << "\n";
  }
}

nash::BilinearInstance ReadInstance(const std::string& path, int k) {
  std::istringstream in(ReadFile(path));
  nash::BilinearInstance inst;
  inst.k = k;
  std::string line;
  long n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) throw DataError("instance rows are f,g", n);
    const std::string a = line.substr(0, comma), b = line.substr(comma + 1);
    char* end_a = nullptr;
    char* end_b = nullptr;
    const double f = std::strtod(a.c_str(), &end_a);
    const double g = std::strtod(b.c_str(), &end_b);
    if (a.empty() || b.empty() || *end_a != '\0' || *end_b != '\0') {
      if (inst.items.empty() && n == 1) continue;  // header row
      throw DataError("instance values must be numbers", n);
    }
    inst.items.push_back({f, g});
  }
  if (inst.items.empty()) throw DataError("instance file has no items");
  try {
    inst.Validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("instance: ") + e.what());
  }
  return inst;
}

void CmdOracle(Run& run) {
  const std::string path = run.InputPath("instance");
  if (path.empty()) throw ConfigError("oracle needs --instance");
  const std::optional<std::string> k = run.Option("k");
  if (!k) throw ConfigError("oracle needs --k");
  RunConfig scratch;
  scratch.Set("k_cap", *k);
  const nash::BilinearInstance inst = ReadInstance(path, scratch.game.k_cap);
  const nash::OracleResult<double> best = nash::OracleExact(inst, run.config.oracle_budget);
  Json heur = Json::object();
  *run.out << "indices " << IndexSet(best.indices) << "\n"
           << "value " << Num(best.value) << "\n";
  for (nash::Heuristic h : run.config.heuristics) {
    std::vector<int> picks = nash::RunHeuristic(h, inst, run.config.game.seed);
    std::sort(picks.begin(), picks.end());
    const double v = nash::NashObjective(inst, std::span<const int>(picks));
    heur[std::string(nash::ToString(h))] = Json{{"indices", picks}, {"value", v}};
    *run.out << nash::ToString(h) << " " << IndexSet(picks) << " " << Num(v) << "\n";
  }
  run.AddJson("oracle.json", Json{{"n", inst.size()},
                                  {"k", inst.k},
                                  {"indices", best.indices},
                                  {"value", best.value},
                                  {"heuristics", heur}});
}

std::vector<std::string> ModelColumns(const RunConfig& cfg, const data::Dataset& d) {
  if (!cfg.models.empty()) return cfg.models;
  std::set<std::string> cols;
  for (const RoundPool& p : d.pools) {
    for (const Question& q : p.questions()) {
      for (const auto& [k, v] : q.model_utilities) cols.insert(k);
    }
  }
  return {cols.begin(), cols.end()};
}

void AddMisalignment(Run& run, const data::Dataset& d) {
  const std::vector<std::string> models = ModelColumns(run.config, d);
  const analysis::MisalignmentReport rep = analysis::ComputeMisalignment(d, models);
  AddTable(run, "misalignment", analysis::MisalignmentTable(rep));
  std::ostringstream scatter;
  analysis::WriteScatterCsv(d, scatter);
  run.AddText("scatter.csv", scatter.str());
}

void CmdAnalyze(Run& run) {
  const data::Dataset d = LoadDataset(run);
  AddMisalignment(run, d);
  *run.out << run.files["misalignment.txt"].substr(run.files["misalignment.txt"].find('\n') + 1);
  const std::vector<std::string> paths = run.InputPaths("ledger");
  if (paths.size() == 1) throw ConfigError("t-tests need at least two --ledger files");
  if (paths.size() >= 2) {
    std::vector<engine::NamedLedger> ledgers;
    for (const std::string& p : paths) {
      std::istringstream in(ReadFile(p));
      ledgers.push_back({fs::path(p).stem().string(), engine::ReadLedgerCsv(in)});
    }
    const std::vector<analysis::PairwiseTest> tests =
        analysis::PairwiseTTests(ledgers, run.config.paired);
    const Table t = analysis::PairwiseTable(tests);
    AddTable(run, "ttests", t);
    *run.out << "\n" << t.ToText();
  }
}

void CmdReport(Run& run) {
  const data::Dataset d = LoadDataset(run);
  const GameSetup s = Setup(run, d);
  const strategies::ForumScorer scorer = BuildScorer(run, s);
  const std::vector<engine::NamedLedger> full = FullInfo(run, s.window);
  std::vector<analysis::AsymmetricRow> rows;
  std::vector<engine::NamedLedger> asym;
  Json eurr = Json::object();
  for (ProposalStrategy st :
       {ProposalStrategy::kGreedy, ProposalStrategy::kUtility, ProposalStrategy::kRandom}) {
    const std::string name(ToString(st));
    GameLedger ledger = Simulate(run, s, scorer, st).ledger;
    const engine::EurrReport rep = engine::ComputeEurr(ledger, full);
    eurr[name] = EurrJson(rep);
    rows.push_back({name, ledger, rep});
    asym.push_back({name, std::move(ledger)});
  }
  const Table full_table = analysis::FullInformationTable(full);
  const Table asym_table = analysis::AsymmetricTable(rows);
  const std::vector<analysis::PairwiseTest> tests =
      analysis::PairwiseTTests(asym, run.config.paired);
  const Table test_table = analysis::PairwiseTable(tests);
  AddTable(run, "full_info_table", full_table);
  AddTable(run, "asymmetric_table", asym_table);
  AddTable(run, "ttests", test_table);
  AddMisalignment(run, d);
  run.AddJson("eurr.json", Json{{"strategies", eurr}, {"forum", CalibrationJson(scorer)}});

  std::ostringstream o;
  o << "Full information (" << s.window.size() << " rounds, K=" << run.config.game.k_cap
    << ")\n\n"
    << full_table.ToText() << "\nAsymmetric information (M=" << run.config.game.m_cap
    << ", K=" << run.config.game.k_cap << ", theta=" << Fixed(scorer.theta, 4) << ")\n\n"
    << asym_table.ToText() << "\nWeekly t-tests ("
    << (run.config.paired ? "paired" : "Welch") << ")\n\n"
    << test_table.ToText() << "\nMisalignment (Spearman, normalized views vs utility)\n\n"
    << run.files["misalignment.txt"].substr(run.files["misalignment.txt"].find('\n') + 1);
  run.AddText("report.txt", o.str());
  *run.out << o.str();
}

using Command = void (*)(Run&);

const std::map<std::string, Command>& Commands() {
  static const std::map<std::string, Command> kCommands = {
      {"validate", CmdValidate}, {"generate", CmdGenerate}, {"simulate", CmdSimulate},
      {"full-info", CmdFullInfo}, {"eurr", CmdEurr},        {"oracle", CmdOracle},
      {"analyze", CmdAnalyze},   {"report", CmdReport}};
  return kCommands;
}

// Builds the run from either the flags or a recorded manifest.
Run Prepare(const std::string& command, const Flags& f) {
  Run run;
  run.command = command;
  if (!f.manifest.empty()) {
    const bool mixed = !f.config.empty() || !f.data.empty() || !f.seed.empty() ||
                       !f.strategy.empty() || !f.heuristics.empty() ||
                       !f.oracle_budget.empty() || !f.instance.empty() || !f.k.empty() ||
                       !f.ledgers.empty() || f.paired || f.welch || f.exact;
    if (mixed) throw ConfigError("--manifest replays a recorded run; only --out-dir may be added");
    RunManifest m = RunManifest::Load(f.manifest);
    if (m.command != command) {
      throw ConfigError("manifest records command '" + m.command + "', not '" + command + "'");
    }
    if (m.artifact_version != kArtifactVersion) {
      throw ConfigError("manifest was written by " + m.artifact_version + ", this is " +
                        kArtifactVersion);
    }
    for (const ManifestInput& in : m.inputs) {
      if (FileSha256(in.path) != in.sha256) {
        throw DataError("input '" + in.path + "' changed since the manifest was written");
      }
    }
    run.config = RunConfig::Parse(m.config);
    run.config.Validate();
    run.config.out_dir = f.out_dir.empty() ? fs::path(f.manifest).parent_path().string()
                                           : f.out_dir;
    if (run.config.out_dir.empty()) run.config.out_dir = ".";
    m.outputs.clear();
    run.manifest = std::move(m);
    return run;
  }

  RunConfig& c = run.config;
  if (!f.config.empty()) c = RunConfig::Load(f.config);
  if (!f.data.empty()) c.data = f.data;
  if (!f.out_dir.empty()) c.out_dir = f.out_dir;
  if (!f.seed.empty()) c.Set("seed", f.seed);
  if (!f.strategy.empty()) c.Set("strategy", f.strategy);
  if (!f.heuristics.empty()) c.Set("heuristics", f.heuristics);
  if (!f.oracle_budget.empty()) c.Set("oracle_budget", f.oracle_budget);
  if (f.paired && f.welch) throw ConfigError("--paired and --welch are mutually exclusive");
  if (f.paired) c.paired = true;
  if (f.welch) c.paired = false;
  c.Validate();

  RunManifest& m = run.manifest;
  m.command = command;
  m.config = c.Canonical();
  m.seed = c.game.seed;
  const bool needs_data = command != "generate" && command != "oracle";
  if (needs_data && !c.data.empty()) m.inputs.push_back({"data", c.data, FileSha256(c.data)});
  if (needs_data && c.data.empty()) {
    throw ConfigError("no dataset given (use --data or the data config key)");
  }
  if (!f.instance.empty()) {
    if (command != "oracle") throw ConfigError("--instance applies to the oracle command");
    m.inputs.push_back({"instance", f.instance, FileSha256(f.instance)});
  }
  if (!f.ledgers.empty() && command != "eurr" && command != "analyze") {
    throw ConfigError("--ledger applies to the eurr and analyze commands");
  }
  for (const std::string& p : f.ledgers) m.inputs.push_back({"ledger", p, FileSha256(p)});
  if (!f.k.empty()) {
    if (command != "oracle") throw ConfigError("--k applies to the oracle command");
    m.options["k"] = f.k;
  }
  if (f.exact) {
    if (command != "eurr") throw ConfigError("--exact applies to the eurr command");
    m.options["exact"] = "1";
  }
  m.hash = m.ComputeHash();
  return run;
}

void WriteOutputs(Run& run) {
  const fs::path dir(run.config.out_dir);
  fs::create_directories(dir);
  run.manifest.outputs.clear();
  for (const auto& [name, body] : run.files) {
    std::ofstream o(dir / name, std::ios::binary);
    o << body;
    if (!o) throw Error("cannot write '" + (dir / name).string() + "'");
    run.manifest.outputs.push_back(name);
  }
  std::ofstream o(dir / "manifest.json", std::ios::binary);
  o << run.manifest.ToJson();
  if (!o) throw Error("cannot write manifest in '" + dir.string() + "'");
}

void AddCommonFlags(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "Run configuration file");
  sub->add_option("--data", f.data, "Dataset (JSON Lines or CSV)");
  sub->add_option("--seed", f.seed, "Random seed");
  sub->add_option("--out-dir", f.out_dir, "Output directory");
  sub->add_option("--strategy", f.strategy, "Player G strategy: greedy, utility, random");
  sub->add_option("--heuristics", f.heuristics, "Comma list: MPP,MaxSP,GreedyNP,Random");
  sub->add_option("--oracle-budget", f.oracle_budget, "Max subsets for exact search");
  sub->add_flag("--paired", f.paired, "Paired weekly t-tests (default)");
  sub->add_flag("--welch", f.welch, "Welch weekly t-tests");
  sub->add_option("--manifest", f.manifest, "Re-run the run recorded in this manifest");
}

}  // namespace

int Main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Logger log(err);
  CLI::App app{"forumgame: GenAI and forum publication game simulator", "forumgame"};
  app.require_subcommand(1, 1);
  Flags flags;
  const std::map<std::string, std::string> help = {
      {"validate", "Check a dataset against the record schema"},
      {"generate", "Write a synthetic dataset"},
      {"simulate", "Run the asymmetric-information game for one strategy"},
      {"full-info", "Run the full-information heuristics"},
      {"eurr", "Estimated utility recovery rates of a strategy or ledger"},
      {"oracle", "Exact Nash-product optimum of an instance file (rows f,g)"},
      {"analyze", "Misalignment correlations and weekly t-tests"},
      {"report", "All strategies and heuristics with result tables"}};
  for (const auto& [name, fn] : Commands()) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    AddCommonFlags(sub, flags);
    if (name == "oracle") {
      sub->add_option("--instance", flags.instance, "Instance CSV with f,g rows");
      sub->add_option("--k", flags.k, "Cardinality k");
    }
    if (name == "eurr") {
      sub->add_option("--ledger", flags.ledgers, "Realized ledger CSV instead of simulating");
      sub->add_flag("--exact", flags.exact, "Also compute exact URR (small pools only)");
    }
    if (name == "analyze") {
      sub->add_option("--ledger", flags.ledgers, "Ledger CSVs to compare with t-tests");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Run run = Prepare(command, flags);
    run.log = &log;
    run.out = &out;
    Commands().at(command)(run);
    WriteOutputs(run);
    log.Info("wrote " + std::to_string(run.files.size() + 1) + " files to " +
             run.config.out_dir + " (manifest " + run.hash() + ")");
  } catch (const std::exception& e) {
    log.Error(e.what());
  }
  return log.error_logged() ? 1 : 0;
}

}  // namespace forumgame::cli
