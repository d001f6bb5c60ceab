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

// Run manifests: the canonical configuration, content hashes of every
// input, and the list of emitted files. The manifest hash covers
// everything that determines the outputs, and every output references it.

#ifndef FORUMGAME_CLI_MANIFEST_H_
#define FORUMGAME_CLI_MANIFEST_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace forumgame::cli {

inline constexpr char kArtifactVersion[] = "forumgame 1.0.0";

// Lowercase hex SHA-256.
std::string Sha256Hex(std::string_view bytes);
// Throws DataError when the file cannot be read.
std::string FileSha256(const std::string& path);

struct ManifestInput {
  std::string role;  // "data", "instance", "ledger", ...
  std::string path;
  std::string sha256;
};

struct RunManifest {
  std::string artifact_version = kArtifactVersion;
  std::string command;
  std::string config;  // RunConfig::Canonical()
  std::uint64_t seed = 0;
  // Command-specific options that affect outputs (e.g. "k" for oracle).
  std::map<std::string, std::string> options;
  std::vector<ManifestInput> inputs;
  // File names relative to the output directory, sorted.
  std::vector<std::string> outputs;
  std::string hash;

  // SHA-256 over version, command, config, options and input hashes.
  // Paths and outputs are excluded, so a re-run into another directory
  // carries the same hash.
  std::string ComputeHash() const;

  std::string ToJson() const;
  // Throws DataError on malformed JSON or a hash that does not match the
  // recorded fields.
  static RunManifest FromJson(const std::string& text);
  static RunManifest Load(const std::string& path);
};

}  // namespace forumgame::cli

#endif  // FORUMGAME_CLI_MANIFEST_H_
