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

#include "soberlens/learn/linear_model.h"

#include <cmath>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>

#include "soberlens/common/error.h"

namespace soberlens::learn {

namespace {

constexpr const char *kFormatName = "soberlens.linear_model";
constexpr int kFormatVersion = 1;

}  // namespace

void TrainConfig::Validate() const {
  if (!(c > 0.0) || !std::isfinite(c)) throw ConfigError("c must be positive");
  if (max_epochs < 1) throw ConfigError("max_epochs must be at least 1");
  if (!(tolerance > 0.0)) throw ConfigError("tolerance must be positive");
}

LinearModel::LinearModel(features::FeatureRegistry registry,
                         std::vector<double> weights, double bias)
    : registry_(std::move(registry)), weights_(std::move(weights)), bias_(bias) {
  if (weights_.size() != registry_.size()) {
    throw ModelError("model has " + std::to_string(weights_.size()) +
                     " weights for " + std::to_string(registry_.size()) +
                     " features");
  }
  for (double w : weights_) {
    if (!std::isfinite(w)) throw ModelError("non-finite model weight");
  }
  if (!std::isfinite(bias_)) throw ModelError("non-finite model bias");
  registry_.Freeze();
}

void LinearModel::WriteJson(std::ostream &out) const {
  using nlohmann::json;
  json weights = json::array();
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] != 0.0) weights.push_back({i, weights_[i]});
  }
  json doc = {
      {"format", kFormatName},
      {"version", kFormatVersion},
      {"config",
       {{"c", train_config.c},
        {"max_epochs", train_config.max_epochs},
        {"tolerance", train_config.tolerance},
        {"seed", train_config.seed},
        {"shuffle", train_config.shuffle}}},
      {"features",
       {{"ngram_presence", feature_config.ngram_presence},
        {"ngram_count", feature_config.ngram_count},
        {"stylistic", feature_config.stylistic},
        {"lda_unigrams", feature_config.lda_unigrams}}},
      {"registry", registry_.names()},
      {"weights", weights},
      {"bias", bias_}};
  out << doc.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
}

LinearModel LinearModel::ReadJson(std::istream &in) {
  using nlohmann::json;
  try {
    json doc = json::parse(in);
    if (doc.at("format") != kFormatName) {
      throw ModelError("not a linear model file");
    }
    if (doc.at("version") != kFormatVersion) {
      throw ModelError("unsupported linear model version " +
                       doc.at("version").dump());
    }
    auto registry = features::FeatureRegistry::FromNames(
        doc.at("registry").get<std::vector<std::string>>());
    std::vector<double> weights(registry.size(), 0.0);
    for (const json &pair : doc.at("weights")) {
      std::size_t index = pair.at(0).get<std::size_t>();
      if (index >= weights.size()) {
        throw ModelError("weight index " + std::to_string(index) +
                         " outside the registry");
      }
      weights[index] = pair.at(1).get<double>();
    }
    LinearModel model(std::move(registry), std::move(weights),
                      doc.at("bias").get<double>());
    const json &config = doc.at("config");
    model.train_config.c = config.at("c").get<double>();
    model.train_config.max_epochs = config.at("max_epochs").get<int>();
    model.train_config.tolerance = config.at("tolerance").get<double>();
    model.train_config.seed = config.at("seed").get<std::uint64_t>();
    model.train_config.shuffle = config.at("shuffle").get<bool>();
    const json &features = doc.at("features");
    model.feature_config.ngram_presence =
        features.at("ngram_presence").get<bool>();
    model.feature_config.ngram_count = features.at("ngram_count").get<bool>();
    model.feature_config.stylistic = features.at("stylistic").get<bool>();
    model.feature_config.lda_unigrams =
        features.at("lda_unigrams").get<std::set<std::string>>();
    return model;
  } catch (const json::exception &e) {
    throw ModelError(std::string("malformed linear model: ") + e.what());
  }
}

}  // namespace soberlens::learn
