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

#include "soberlens/features/registry.h"

#include "soberlens/common/error.h"

namespace soberlens::features {

FeatureRegistry FeatureRegistry::FromNames(std::vector<std::string> names,
                                           bool frozen) {
  FeatureRegistry registry;
  for (std::string &name : names) {
    if (name.empty()) throw ModelError("empty feature name in registry");
    if (!registry.index_.emplace(name, registry.names_.size()).second) {
      throw ModelError("duplicate feature name '" + name + "' in registry");
    }
    registry.names_.push_back(std::move(name));
  }
  registry.frozen_ = frozen;
  return registry;
}

std::optional<std::size_t> FeatureRegistry::Find(const std::string &name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FeatureRegistry::Intern(const std::string &name) {
  if (auto found = Find(name)) return found;
  if (frozen_) return std::nullopt;
  std::size_t index = names_.size();
  index_.emplace(name, index);
  names_.push_back(name);
  return index;
}

}  // namespace soberlens::features
