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

#ifndef SOBERLENS_FEATURES_REGISTRY_H_
#define SOBERLENS_FEATURES_REGISTRY_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace soberlens::features {

// Bijective feature-name <-> index map. Indices are dense and assigned in
// first-seen order. Once frozen, unknown names are never added.
class FeatureRegistry {
 public:
  FeatureRegistry() = default;

  // Rebuilds a registry from an index-ordered name list. Throws ModelError on
  // duplicate or empty names.
  static FeatureRegistry FromNames(std::vector<std::string> names,
                                   bool frozen = true);

  std::optional<std::size_t> Find(const std::string &name) const;

  // Index of `name`, allocating one if the registry is not frozen. Returns
  // nullopt for unknown names once frozen.
  std::optional<std::size_t> Intern(const std::string &name);

  void Freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  std::size_t size() const { return names_.size(); }
  const std::string &Name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string> &names() const { return names_; }

 private:
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::string> names_;
  bool frozen_ = false;
};

}  // namespace soberlens::features

#endif  // SOBERLENS_FEATURES_REGISTRY_H_
