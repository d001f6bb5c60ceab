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

#include "forumgame/cli/manifest.h"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "forumgame/error.h"
#include "json.hpp"

namespace forumgame::cli {

std::string Sha256Hex(std::string_view bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              &EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
    throw Error("SHA-256 computation failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string FileSha256(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return Sha256Hex(ss.str());
}

std::string RunManifest::ComputeHash() const {
  std::string canon;
  canon += "version=" + artifact_version + "\n";
  canon += "command=" + command + "\n";
  canon += "seed=" + std::to_string(seed) + "\n";
  canon += "config\n" + config;
  for (const auto& [k, v] : options) canon += "option " + k + "=" + v + "\n";
  for (const ManifestInput& in : inputs) canon += "input " + in.role + "=" + in.sha256 + "\n";
  return Sha256Hex(canon);
}

std::string RunManifest::ToJson() const {
  nlohmann::ordered_json j;
  j["artifact_version"] = artifact_version;
  j["command"] = command;
  j["seed"] = seed;
  j["config"] = config;
  j["options"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : options) j["options"][k] = v;
  j["inputs"] = nlohmann::ordered_json::array();
  for (const ManifestInput& in : inputs) {
    j["inputs"].push_back({{"role", in.role}, {"path", in.path}, {"sha256", in.sha256}});
  }
  j["outputs"] = outputs;
  j["manifest_hash"] = hash;
  return j.dump(2) + "\n";
}

RunManifest RunManifest::FromJson(const std::string& text) {
  RunManifest m;
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    m.artifact_version = j.at("artifact_version").get<std::string>();
    m.command = j.at("command").get<std::string>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.config = j.at("config").get<std::string>();
    for (const auto& [k, v] : j.at("options").items()) m.options[k] = v.get<std::string>();
    for (const auto& in : j.at("inputs")) {
      m.inputs.push_back({in.at("role").get<std::string>(), in.at("path").get<std::string>(),
                          in.at("sha256").get<std::string>()});
    }
    m.outputs = j.at("outputs").get<std::vector<std::string>>();
    m.hash = j.at("manifest_hash").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed manifest: ") + e.what());
  }
  if (m.hash != m.ComputeHash()) {
    throw DataError("manifest hash does not match its recorded fields");
  }
  return m;
}

RunManifest RunManifest::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open manifest '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return FromJson(ss.str());
}

}  // namespace forumgame::cli
