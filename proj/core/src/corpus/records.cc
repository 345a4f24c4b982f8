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

#include "soberlens/corpus/records.h"

#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <unordered_set>

#include "soberlens/common/error.h"
#include "soberlens/common/utf8.h"

namespace soberlens::corpus {

namespace {

using nlohmann::json;

bool IsBlank(std::string_view line) {
  for (char c : line) {
    if (!utf8::IsSpace(c)) return false;
  }
  return true;
}

json ParseLine(const std::string &line, const std::string &source,
               std::size_t line_no) {
  json value;
  try {
    value = json::parse(line);
  } catch (const json::parse_error &e) {
    throw ParseError(source, line_no, std::string("invalid JSON: ") + e.what());
  }
  if (!value.is_object()) {
    throw ParseError(source, line_no, "expected a JSON object");
  }
  return value;
}

std::string StringField(const json &obj, const char *name,
                        const std::string &source, std::size_t line_no) {
  auto it = obj.find(name);
  if (it == obj.end() || !it->is_string()) {
    throw ParseError(source, line_no,
                     std::string("missing string field '") + name + "'");
  }
  return it->get<std::string>();
}

}  // namespace

std::string_view StrategyName(Strategy strategy) {
  switch (strategy) {
    case Strategy::kD1:
      return "d1";
    case Strategy::kD2:
      return "d2";
    case Strategy::kH:
      return "h";
  }
  return "?";
}

Strategy ParseStrategy(std::string_view name) {
  if (name == "d1") return Strategy::kD1;
  if (name == "d2") return Strategy::kD2;
  if (name == "h") return Strategy::kH;
  throw ConfigError("unknown strategy '" + std::string(name) +
                    "' (expected d1, d2 or h)");
}

std::size_t Corpus::Count(Label label) const {
  std::size_t n = 0;
  for (const LabeledTweet &t : tweets) n += t.label == label;
  return n;
}

std::vector<RawRecord> IngestRecords(std::istream &in,
                                     const std::string &source) {
  std::vector<RawRecord> records;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    json obj = ParseLine(line, source, line_no);
    RawRecord r{StringField(obj, "id", source, line_no),
                StringField(obj, "user", source, line_no),
                StringField(obj, "text", source, line_no)};
    if (r.id.empty()) {
      throw DataError(source + ":" + std::to_string(line_no) + ": empty id");
    }
    if (!seen.insert(r.id).second) {
      throw DataError(source + ":" + std::to_string(line_no) +
                      ": duplicate id '" + r.id + "'");
    }
    records.push_back(std::move(r));
  }
  return records;
}

void WriteLabeledCorpus(std::ostream &out, const Corpus &corpus) {
  for (const LabeledTweet &t : corpus.tweets) {
    json obj = {{"id", t.id},
                {"user", t.user},
                {"text", t.text},
                {"label", std::string(LabelName(t.label))},
                {"stripped_tags", t.stripped_tags}};
    out << obj.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
  }
}

Corpus ReadLabeledCorpus(std::istream &in, Strategy strategy,
                         const std::string &source) {
  Corpus corpus;
  corpus.strategy = strategy;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    json obj = ParseLine(line, source, line_no);
    LabeledTweet t;
    t.id = StringField(obj, "id", source, line_no);
    t.user = StringField(obj, "user", source, line_no);
    t.text = StringField(obj, "text", source, line_no);
    try {
      t.label = ParseLabel(StringField(obj, "label", source, line_no));
    } catch (const ConfigError &e) {
      throw ParseError(source, line_no, e.what());
    }
    if (auto it = obj.find("stripped_tags"); it != obj.end()) {
      if (!it->is_array()) {
        throw ParseError(source, line_no, "stripped_tags must be an array");
      }
      for (const json &tag : *it) {
        if (!tag.is_string()) {
          throw ParseError(source, line_no, "stripped_tags must hold strings");
        }
        t.stripped_tags.push_back(tag.get<std::string>());
      }
    }
    if (t.id.empty() || !seen.insert(t.id).second) {
      throw DataError(source + ":" + std::to_string(line_no) +
                      ": empty or duplicate id '" + t.id + "'");
    }
    corpus.tweets.push_back(std::move(t));
  }
  return corpus;
}

}  // namespace soberlens::corpus
