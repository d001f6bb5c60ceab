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

// Command-line entry point:
//
//   forumgame <command> [flags]
//
//   validate    schema check of a dataset
//   generate    synthetic dataset
//   simulate    asymmetric game for one strategy
//   full-info   full-information heuristics
//   eurr        recovery rates of a strategy (or a ledger file)
//   oracle      exact optimum of an instance file
//   analyze     misalignment correlations and weekly t-tests
//   report      everything above in one run, with result tables
//
// Every run writes its outputs and a manifest.json to --out-dir.
// `<command> --manifest path/manifest.json` re-runs a recorded run.
// FORUMGAME_LOG_LEVEL (error, warn, info, debug) controls log verbosity.

#ifndef FORUMGAME_CLI_CLI_H_
#define FORUMGAME_CLI_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace forumgame::cli {

// `args` excludes the program name. Returns 0 iff no error was logged.
int Main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace forumgame::cli

#endif  // FORUMGAME_CLI_CLI_H_
