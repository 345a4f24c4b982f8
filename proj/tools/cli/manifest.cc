// Copyright 2026 The SoberLens Authors.
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

#include "cli/manifest.h"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <memory>

#include "soberlens/common/error.h"

namespace soberlens::cli {

std::string Sha256File(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 initialization failed");
  }
  std::array<char, 1 << 16> buffer;
  while (in) {
    in.read(buffer.data(), buffer.size());
    if (in.gcount() > 0) {
      EVP_DigestUpdate(ctx.get(), buffer.data(),
                       static_cast<std::size_t>(in.gcount()));
    }
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest;
  unsigned int length = 0;
  EVP_DigestFinal_ex(ctx.get(), digest.data(), &length);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xF]);
  }
  return hex;
}

std::filesystem::path ManifestPath(const std::filesystem::path &output) {
  return output.string() + ".manifest.json";
}

nlohmann::json RunManifest::ToJson() const {
  nlohmann::json doc = {{"tool", "soberlens"},
                        {"tool_version", kToolVersion},
                        {"command", command},
                        {"parameters", parameters}};
  nlohmann::json in = nlohmann::json::array();
  for (const auto &path : inputs) {
    in.push_back({{"path", path.string()}, {"sha256", Sha256File(path)}});
  }
  doc["inputs"] = in;
  nlohmann::json out = nlohmann::json::array();
  for (const auto &path : outputs) {
    out.push_back({{"path", path.string()}, {"sha256", Sha256File(path)}});
  }
  doc["outputs"] = out;
  if (!summary.is_null()) doc["summary"] = summary;
  return doc;
}

void RunManifest::WriteAll() const {
  const std::string text = ToJson().dump(2) + "\n";
  for (const auto &path : outputs) {
    std::ofstream file(ManifestPath(path), std::ios::binary);
    if (!file) throw ConfigError("cannot write " + ManifestPath(path).string());
    file << text;
  }
}

}  // namespace soberlens::cli
