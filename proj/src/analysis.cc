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

#include "forumgame/analysis.h"

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>

#include "forumgame/error.h"

namespace forumgame::analysis {
namespace {

using Cell = Table::Cell;

std::string Full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string SideName(Side s) { return s == Side::kG ? "G" : "F"; }

}  // namespace

MisalignmentReport ComputeMisalignment(const data::Dataset& dataset,
                                       std::span<const std::string> models) {
  std::map<std::string, std::vector<const Question*>> by_domain;
  for (const RoundPool& p : dataset.pools) {
    for (const Question& q : p.questions()) by_domain[q.domain].push_back(&q);
  }
  MisalignmentReport report;
  for (const auto& [domain, qs] : by_domain) {
    for (const std::string& model : models) {
      std::vector<double> views, util;
      for (const Question* q : qs) {
        const auto it = q->model_utilities.find(model);
        if (it == q->model_utilities.end()) continue;
        views.push_back(q->Utility(Side::kF));
        util.push_back(it->second);
      }
      CorrelationResult r;
      if (views.size() >= 3) {
        r = Spearman(views, util);
      } else {
        r.defined = false;
        r.n = static_cast<int>(views.size());
      }
      r.domain = domain;
      r.model = model;
      report.rows.push_back(r);
    }
  }
  double sum = 0.0;
  for (const CorrelationResult& r : report.rows) {
    if (!r.defined) continue;
    sum += r.rho;
    ++report.defined_rows;
  }
  if (report.defined_rows > 0) {
    report.mean_rho = sum / report.defined_rows;
    if (report.defined_rows > 1) {
      double ss = 0.0;
      for (const CorrelationResult& r : report.rows) {
        if (r.defined) ss += (r.rho - report.mean_rho) * (r.rho - report.mean_rho);
      }
      report.std_rho = std::sqrt(ss / (report.defined_rows - 1));
    }
  }
  return report;
}

Table MisalignmentTable(const MisalignmentReport& report) {
  Table t({"domain", "model", "n", "rho", "p_value", "significant"});
  for (const CorrelationResult& r : report.rows) {
    if (!r.defined) {
      t.AddRow({Cell::Text(r.domain), Cell::Text(r.model), Cell::Text(std::to_string(r.n)),
                Cell::Text("undefined"), Cell::Text("undefined"), Cell::Text("")});
      continue;
    }
    t.AddRow({Cell::Text(r.domain), Cell::Text(r.model), Cell::Text(std::to_string(r.n)),
              Cell::Number(r.rho, 5), Cell::Number(r.p_value, 5),
              Cell::Text(r.p_value < kSignificanceLevel ? "*" : "")});
  }
  t.AddRow({Cell::Text("(pooled)"), Cell::Text("mean"),
            Cell::Text(std::to_string(report.defined_rows)), Cell::Number(report.mean_rho, 5),
            Cell::Text(""), Cell::Text("")});
  t.AddRow({Cell::Text("(pooled)"), Cell::Text("std"),
            Cell::Text(std::to_string(report.defined_rows)), Cell::Number(report.std_rho, 5),
            Cell::Text(""), Cell::Text("")});
  return t;
}

std::vector<double> WeeklySeries(const GameLedger& ledger, Side side) {
  std::vector<double> v;
  v.reserve(ledger.rounds());
  for (const SelectionOutcome& o : ledger.outcomes()) {
    v.push_back(side == Side::kG ? o.u_g_realized : o.u_f_realized);
  }
  return v;
}

std::vector<PairwiseTest> PairwiseTTests(std::span<const engine::NamedLedger> ledgers,
                                         bool paired) {
  std::vector<PairwiseTest> out;
  for (std::size_t i = 0; i < ledgers.size(); ++i) {
    for (std::size_t j = i + 1; j < ledgers.size(); ++j) {
      for (Side side : {Side::kG, Side::kF}) {
        PairwiseTest t;
        t.a = ledgers[i].name;
        t.b = ledgers[j].name;
        t.side = side;
        t.result = WeeklyTTest(WeeklySeries(ledgers[i].ledger, side),
                               WeeklySeries(ledgers[j].ledger, side), paired);
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

Table PairwiseTable(std::span<const PairwiseTest> tests) {
  Table t({"a", "b", "player", "test", "mean_a", "mean_b", "t", "df", "p_value",
           "significant"});
  for (const PairwiseTest& p : tests) {
    const TTestResult& r = p.result;
    t.AddRow({Cell::Text(p.a), Cell::Text(p.b), Cell::Text(SideName(p.side)),
              Cell::Text(r.paired ? "paired" : "welch"), Cell::Number(r.mean_a, 4),
              Cell::Number(r.mean_b, 4), Cell::Number(r.t_stat, 4), Cell::Number(r.df, 2),
              Cell::Number(r.p_value, 5),
              Cell::Text(r.p_value < kSignificanceLevel ? "*" : "")});
  }
  return t;
}

void WriteScatterCsv(const data::Dataset& dataset, std::ostream& out) {
  Table t({"week", "domain", "u_f_norm", "u_g"});
  for (const RoundPool& p : dataset.pools) {
    for (const Question& q : p.questions()) {
      t.AddRow({Cell::Text(std::to_string(p.week())), Cell::Text(q.domain),
                Cell::Text(Full(q.Utility(Side::kF))), Cell::Text(Full(q.u_g))});
    }
  }
  out << t.ToCsv();
}

Table FullInformationTable(std::span<const engine::NamedLedger> runs) {
  if (runs.empty()) throw InvalidArgument("results table needs at least one ledger");
  Table t({"heuristic", "cum_norm_views", "cum_u_g"});
  for (const engine::NamedLedger& r : runs) {
    t.AddRow({Cell::Text(r.name), Cell::Number(r.ledger.cum_u_f(), 3),
              Cell::Number(r.ledger.cum_u_g(), 3)});
  }
  return t;
}

Table AsymmetricTable(std::span<const AsymmetricRow> rows) {
  if (rows.empty()) throw InvalidArgument("results table needs at least one ledger");
  Table t({"strategy", "cum_norm_views", "cum_u_g", "eurr_f", "eurr_g"});
  for (const AsymmetricRow& r : rows) {
    t.AddRow({Cell::Text(r.strategy), Cell::Number(r.ledger.cum_u_f(), 3),
              Cell::Number(r.ledger.cum_u_g(), 3), Cell::Number(r.eurr.eurr_f, 3, true),
              Cell::Number(r.eurr.eurr_g, 3, true)});
  }
  return t;
}

}  // namespace forumgame::analysis
