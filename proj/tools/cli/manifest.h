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

#ifndef SOBERLENS_TOOLS_CLI_MANIFEST_H_
#define SOBERLENS_TOOLS_CLI_MANIFEST_H_

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace soberlens::cli {

inline constexpr const char *kToolVersion = "0.1.0";

// Hex SHA-256 of a file's bytes.
std::string Sha256File(const std::filesystem::path &path);

// Everything needed to rerun a command: its name, resolved parameters and
// digests of every input. Written next to each output as
// `<output>.manifest.json`. Contains no timestamps, so reruns with the same
// inputs produce identical manifests.
struct RunManifest {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<std::filesystem::path> inputs;
  std::vector<std::filesystem::path> outputs;
  nlohmann::json summary;

  nlohmann::json ToJson() const;
  // Writes one manifest per output path.
  void WriteAll() const;
};

std::filesystem::path ManifestPath(const std::filesystem::path &output);

}  // namespace soberlens::cli

#endif  // SOBERLENS_TOOLS_CLI_MANIFEST_H_
