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

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "forumgame/cli/manifest.h"
#include "gtest/gtest.h"

namespace forumgame::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result Invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.code = Main(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void Put(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream(p, std::ios::binary) << text;
}

std::map<std::string, std::string> Tree(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    files[e.path().filename().string()] = Slurp(e.path());
  }
  return files;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    root_ = fs::absolute("cli_test_work") / info->name();
    fs::remove_all(root_);
    fs::create_directories(root_);
  }

  // A small synthetic dataset and matching game config.
  fs::path SmallDataset() {
    const fs::path cfg = root_ / "small.toml";
    Put(cfg,
        "# small game\n"
        "pretrain_weeks = 5\n"
        "[game]\nrounds = 20\nm_cap = 20\nk_cap = 8\n"
        "[synthetic]\nweeks = 26\nquestions_per_week = 60\ntopic_effect = 0.5\n");
    const Result r = Invoke({"generate", "--config", cfg.string(), "--seed", "3", "--out-dir",
                          (root_ / "gen").string()});
    EXPECT_EQ(r.code, 0) << r.err;
    return root_ / "gen" / "dataset.jsonl";
  }

  fs::path root_;
};

TEST_F(CliTest, OracleOnThreeItemInstance) {
  Put(root_ / "inst.csv", "f,g\n3,1\n1,3\n2,2\n");
  const Result r = Invoke({"oracle", "--instance", (root_ / "inst.csv").string(), "--k", "2",
                        "--out-dir", (root_ / "o").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 25), "indices {0,1}\nvalue 16\nMP");
  EXPECT_TRUE(fs::exists(root_ / "o" / "oracle.json"));
  EXPECT_TRUE(fs::exists(root_ / "o" / "manifest.json"));
}

TEST_F(CliTest, SimulateIsDeterministicAndReplayable) {
  const fs::path data = SmallDataset();
  const fs::path cfg = root_ / "small.toml";
  const std::vector<std::string> base = {"simulate", "--config", cfg.string(), "--data",
                                         data.string(), "--strategy", "utility",
                                         "--seed", "5"};
  std::vector<std::string> a = base, b = base;
  a.insert(a.end(), {"--out-dir", (root_ / "a").string()});
  b.insert(b.end(), {"--out-dir", (root_ / "b").string()});
  const Result ra = Invoke(a);
  ASSERT_EQ(ra.code, 0) << ra.err;
  ASSERT_EQ(Invoke(b).code, 0);
  const auto ta = Tree(root_ / "a");
  EXPECT_EQ(ta, Tree(root_ / "b"));
  for (const char* name : {"ledger_utility.csv", "forum_scorer.txt",
                           "acceptance_model_utility.txt", "summary.json", "manifest.json"}) {
    EXPECT_EQ(ta.count(name), 1u) << name;
  }

  const Result replay = Invoke({"simulate", "--manifest", (root_ / "a" / "manifest.json").string(),
                             "--out-dir", (root_ / "c").string()});
  ASSERT_EQ(replay.code, 0) << replay.err;
  EXPECT_EQ(Tree(root_ / "c"), ta);
  EXPECT_EQ(replay.out, ra.out);

  const RunManifest m = RunManifest::Load((root_ / "a" / "manifest.json").string());
  EXPECT_EQ(ta.at("ledger_utility.csv").rfind("# manifest_hash=" + m.hash + "\n", 0), 0u);
}

TEST_F(CliTest, ManifestRejectsTamperedInput) {
  const fs::path data = SmallDataset();
  ASSERT_EQ(Invoke({"simulate", "--config", (root_ / "small.toml").string(), "--data",
                 data.string(), "--out-dir", (root_ / "a").string()})
                .code,
            0);
  Put(data, Slurp(data) + "\n");
  const Result r = Invoke({"simulate", "--manifest", (root_ / "a" / "manifest.json").string(),
                        "--out-dir", (root_ / "c").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("changed since"), std::string::npos) << r.err;
}

TEST_F(CliTest, EurrOfBestHeuristicLedgerIsOne) {
  const fs::path data = SmallDataset();
  const fs::path cfg = root_ / "small.toml";
  ASSERT_EQ(Invoke({"full-info", "--config", cfg.string(), "--data", data.string(),
                 "--heuristics", "GreedyNP", "--out-dir", (root_ / "f").string()})
                .code,
            0);
  const Result r = Invoke({"eurr", "--config", cfg.string(), "--data", data.string(),
                        "--heuristics", "GreedyNP", "--ledger",
                        (root_ / "f" / "full_info_GreedyNP.csv").string(), "--out-dir",
                        (root_ / "e").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("EURR_G 1.000 (best GreedyNP)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("EURR_F 1.000"), std::string::npos) << r.out;
}

TEST_F(CliTest, ValidateReportsCounts) {
  Put(root_ / "d.jsonl",
      "{\"id\":\"a\",\"timestamp\":\"2024-04-22T10:00:00Z\",\"view_count\":5,\"u_g\":1,"
      "\"title\":\"t\",\"body\":\"b\",\"domain\":\"x\"}\n");
  const Result r = Invoke({"validate", "--data", (root_ / "d.jsonl").string(), "--out-dir",
                        (root_ / "v").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("valid: 1 records in 1 weekly pools"), std::string::npos) << r.out;
}

TEST_F(CliTest, ErrorsGiveNonzeroExit) {
  const fs::path cfg = root_ / "bad.toml";
  Put(cfg, "m_cap = 10\nk_cap = 20\n");
  Put(root_ / "inst.csv", "3,1\n1,3\n");
  const Result caps = Invoke({"oracle", "--config", cfg.string(), "--instance",
                           (root_ / "inst.csv").string(), "--k", "1", "--out-dir",
                           (root_ / "x").string()});
  EXPECT_EQ(caps.code, 1);
  EXPECT_NE(caps.err.find("k_cap"), std::string::npos) << caps.err;

  EXPECT_EQ(Invoke({"simulate", "--no-such-flag"}).code, 2);
  EXPECT_EQ(Invoke({}).code, 2);
  const Result missing = Invoke({"validate", "--data", (root_ / "nope.jsonl").string(),
                              "--out-dir", (root_ / "y").string()});
  EXPECT_EQ(missing.code, 1);
  EXPECT_NE(missing.err.find("nope.jsonl"), std::string::npos);
  EXPECT_FALSE(fs::exists(root_ / "y" / "manifest.json"));
  EXPECT_EQ(Invoke({"--help"}).code, 0);
}

}  // namespace
}  // namespace forumgame::cli
