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

#include "support/golden.h"

#include "soberlens/common/format.h"
#include "soberlens/features/extractor.h"

namespace soberlens::testing {

const std::set<std::string> &GoldenLdaUnigrams() {
  static const std::set<std::string> words = {"beer", "party"};
  return words;
}

std::vector<GoldenCase> GoldenCases() {
  std::vector<GoldenCase> cases;

  cases.push_back(
      {"plain",
       "we went to the party",
       {{"we", 1}, {"went", 1}, {"to", 1}, {"the", 1}, {"party", 1}},
       {{"we_went", 1}, {"went_to", 1}, {"to_the", 1}, {"the_party", 1}},
       {{"pos_ratio_noun", 1.0 / 5},
        {"length", 5},
        {"lda_p:party", 1},
        {"lda_c:party", 1}}});

  cases.push_back(
      {"elongated",
       "i am so happpy lol",
       {{"i", 1}, {"am", 1}, {"so", 1}, {"happpy", 1}, {"lol", 1}},
       {{"i_am", 1}, {"am_so", 1}, {"so_happpy", 1}, {"happpy_lol", 1}},
       {{"pos_ratio_noun", 1.0 / 5},
        {"pos_ratio_adv", 1.0 / 5},
        {"spelling_error", 1},
        {"char_repeat", 1},
        {"length", 5}}});

  cases.push_back({"no_words", "@mike #tbt 2019 !!!", {}, {}, {}});

  cases.push_back({"named_entities",
                   "We saw Rihanna and \xC3\x89lodie at the Bar",
                   {{"we", 1},
                    {"saw", 1},
                    {"rihanna", 1},
                    {"and", 1},
                    {"\xC3\xA9lodie", 1},
                    {"at", 1},
                    {"the", 1},
                    {"bar", 1}},
                   {{"we_saw", 1},
                    {"saw_rihanna", 1},
                    {"rihanna_and", 1},
                    {"and_\xC3\xA9lodie", 1},
                    {"\xC3\xA9lodie_at", 1},
                    {"at_the", 1},
                    {"the_bar", 1}},
                   {{"pos_ratio_noun", 3.0 / 8},
                    {"ne_count", 2},
                    {"connector_count", 1},
                    {"capitals", 4},
                    {"length", 8}}});

  cases.push_back({"emoticons",
                   "love you :) :) <3",
                   {{"love", 1}, {"you", 1}, {":)", 2}, {"<3", 1}},
                   {{"love_you", 1}, {"you_:)", 1}, {":)_:)", 1}, {":)_<3", 1}},
                   {{"length", 2},
                    {"emoticon_presence", 1},
                    {"emoticon_count", 3},
                    {"sent_pos_ratio", 1.0 / 2}}});

  cases.push_back({"connectors",
                   "good day but then a bad night because tired",
                   {{"good", 1},
                    {"day", 1},
                    {"but", 1},
                    {"then", 1},
                    {"a", 1},
                    {"bad", 1},
                    {"night", 1},
                    {"because", 1},
                    {"tired", 1}},
                   {{"good_day", 1},
                    {"day_but", 1},
                    {"but_then", 1},
                    {"then_a", 1},
                    {"a_bad", 1},
                    {"bad_night", 1},
                    {"night_because", 1},
                    {"because_tired", 1}},
                   {{"pos_ratio_noun", 2.0 / 9},
                    {"pos_ratio_adj", 3.0 / 9},
                    {"pos_ratio_adv", 1.0 / 9},
                    {"connector_count", 3},
                    {"length", 9},
                    {"sent_pos_ratio", 1.0 / 9},
                    {"sent_neg_ratio", 2.0 / 9}}});

  cases.push_back({"suffix_tags",
                   "my dog played quickly and walking nicely",
                   {{"my", 1},
                    {"dog", 1},
                    {"played", 1},
                    {"quickly", 1},
                    {"and", 1},
                    {"walking", 1},
                    {"nicely", 1}},
                   {{"my_dog", 1},
                    {"dog_played", 1},
                    {"played_quickly", 1},
                    {"quickly_and", 1},
                    {"and_walking", 1},
                    {"walking_nicely", 1}},
                   {{"pos_ratio_noun", 1.0 / 7},
                    {"pos_ratio_adv", 2.0 / 7},
                    {"connector_count", 1},
                    {"spelling_error", 1},
                    {"length", 7}}});

  cases.push_back({"lda_counts",
                   "@pal beer beer and more beer!!! #friday",
                   {{"beer", 3}, {"and", 1}, {"more", 1}},
                   {{"beer_beer", 1}, {"beer_and", 1}, {"and_more", 1},
                    {"more_beer", 1}},
                   {{"pos_ratio_noun", 4.0 / 5},
                    {"connector_count", 1},
                    {"spelling_error", 1},
                    {"length", 5},
                    {"lda_p:beer", 1},
                    {"lda_c:beer", 3}}});

  cases.push_back({"shouting",
                   "LOL this party is sooo GOOD",
                   {{"lol", 1},
                    {"this", 1},
                    {"party", 1},
                    {"is", 1},
                    {"sooo", 1},
                    {"good", 1}},
                   {{"lol_this", 1},
                    {"this_party", 1},
                    {"party_is", 1},
                    {"is_sooo", 1},
                    {"sooo_good", 1}},
                   {{"pos_ratio_noun", 2.0 / 6},
                    {"pos_ratio_adj", 1.0 / 6},
                    {"spelling_error", 1},
                    {"char_repeat", 1},
                    {"capitals", 7},
                    {"length", 6},
                    {"sent_pos_ratio", 1.0 / 6},
                    {"lda_p:party", 1},
                    {"lda_c:party", 1}}});

  cases.push_back({"contraction",
                   "Cannot wait for tomorrow morning, it's Friday :D",
                   {{"cannot", 1},
                    {"wait", 1},
                    {"for", 1},
                    {"tomorrow", 1},
                    {"morning", 1},
                    {"it's", 1},
                    {"friday", 1},
                    {":D", 1}},
                   {{"cannot_wait", 1},
                    {"wait_for", 1},
                    {"for_tomorrow", 1},
                    {"tomorrow_morning", 1},
                    {"morning_it's", 1},
                    {"it's_friday", 1},
                    {"friday_:D", 1}},
                   {{"pos_ratio_noun", 3.0 / 7},
                    {"ne_count", 1},
                    {"spelling_error", 1},
                    {"capitals", 3},
                    {"length", 7},
                    {"emoticon_presence", 1},
                    {"emoticon_count", 1}}});
  return cases;
}

std::map<std::string, double> ExpectedVector(const GoldenCase &c) {
  std::map<std::string, double> expected = c.stylistic;
  for (const auto &[word, count] : c.unigrams) {
    expected["up:" + word] = 1;
    expected["u:" + word] = count;
  }
  for (const auto &[pair, count] : c.bigrams) {
    expected["bp:" + pair] = 1;
    expected["b:" + pair] = count;
  }
  return expected;
}

std::string DiffGolden(const GoldenCase &c, const text::LexiconSet &lex) {
  features::FeatureConfig config = features::FeatureConfig::FromPreset("all");
  config.lda_unigrams = GoldenLdaUnigrams();
  features::FeatureExtractor extractor(config, lex);
  features::FeatureRegistry registry;
  features::FeatureVector v = extractor.Extract(c.text, registry);
  std::map<std::string, double> actual;
  for (const auto &e : v.entries()) actual[registry.Name(e.index)] = e.value;
  const std::map<std::string, double> expected = ExpectedVector(c);
  for (const auto &[name, value] : expected) {
    auto it = actual.find(name);
    if (it == actual.end()) return "missing " + name;
    if (it->second != value) {
      return name + " = " + FormatDouble(it->second) + ", expected " +
             FormatDouble(value);
    }
  }
  for (const auto &[name, value] : actual) {
    if (!expected.count(name)) {
      return "unexpected " + name + " = " + FormatDouble(value);
    }
  }
  return {};
}

}  // namespace soberlens::testing
