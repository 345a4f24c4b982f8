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

#include <doctest.h>

#include <sstream>

#include "soberlens/common/error.h"
#include "soberlens/corpus/datasets.h"
#include "soberlens/corpus/records.h"
#include "soberlens/corpus/supervision.h"
#include "soberlens/corpus/term_frequency.h"

namespace soberlens::corpus {
namespace {

RawRecord R(std::string id, std::string user, std::string text) {
  return {std::move(id), std::move(user), std::move(text)};
}

TEST_CASE("ingest reads json lines") {
  std::istringstream in(
      R"({"id":"1","user":"u","text":"hello there"})"
      "\n\n"
      R"({"id":"2","user":"v","text":"café","extra":3})"
      "\n");
  auto records = IngestRecords(in);
  REQUIRE(records.size() == 2);
  CHECK(records[0] == R("1", "u", "hello there"));
  CHECK(records[1].text == "caf\xC3\xA9");

  std::istringstream empty("");
  CHECK(IngestRecords(empty).empty());
}

TEST_CASE("ingest errors") {
  std::istringstream dup(R"({"id":"1","user":"u","text":"a"})"
                         "\n"
                         R"({"id":"1","user":"u","text":"b"})");
  CHECK_THROWS_AS(IngestRecords(dup), DataError);

  std::istringstream broken(R"({"id":"1","user":"u","text":"a"})"
                            "\n{not json\n");
  try {
    IngestRecords(broken, "raw.jsonl");
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("raw.jsonl:2") != std::string::npos);
  }
  std::istringstream missing(R"({"id":"1","text":"a"})");
  CHECK_THROWS_AS(IngestRecords(missing), ParseError);
  std::istringstream empty_id(R"({"id":"","user":"u","text":"a"})");
  CHECK_THROWS_AS(IngestRecords(empty_id), DataError);
}

TEST_CASE("filter rules") {
  const FilterRules rules;
  auto link = FilterRecord(R("1", "u", "check this http://x.co out guys now"), rules);
  CHECK(link.rejection == RejectReason::kHyperlink);
  auto shorty = FilterRecord(R("2", "u", "I am very happy now"), rules);
  CHECK(shorty.rejection == RejectReason::kTooShort);
  const std::string ok = "Returned from work late today, the traffic was bad";
  auto accepted = FilterRecord(R("3", "u", ok), rules);
  CHECK(accepted.accepted());
  CHECK(accepted.text == ok);
  auto www = FilterRecord(R("4", "u", "see WWW.example.com a b c d e"), rules);
  CHECK(www.rejection == RejectReason::kHyperlink);
  // Bytes that are not UTF-8 are removed before counting.
  auto cleaned = FilterRecord(R("5", "u", "one two three four five six\xff"), rules);
  CHECK(cleaned.accepted());
  CHECK(cleaned.text == "one two three four five six");
  CHECK(RejectReasonName(RejectReason::kTooShort) == "too_short");
}

TEST_CASE("filter boundary at the minimum length") {
  FilterRules rules;
  CHECK(FilterRecord(R("1", "u", "a b c d e f"), rules).accepted());
  CHECK_FALSE(FilterRecord(R("1", "u", "a b c d e"), rules).accepted());
  rules.min_words = 0;
  CHECK_THROWS_AS(rules.Validate(), ConfigError);
  CHECK(CountWords("  a\tb  c ") == 3);
  CHECK(ContainsHyperlink("x HTTPS://y"));
  CHECK_FALSE(ContainsHyperlink("nohttp://y"));
}

TEST_CASE("hashtag labeling") {
  const SupervisionTags tags;
  auto drunk = LabelByHashtags(R("1", "u", "so wasted right now #drunk lol yes"), tags);
  REQUIRE(std::holds_alternative<LabeledTweet>(drunk));
  CHECK(std::get<LabeledTweet>(drunk).label == Label::kDrunk);
  CHECK(std::get<LabeledTweet>(drunk).text == "so wasted right now lol yes");
  CHECK(std::get<LabeledTweet>(drunk).stripped_tags ==
        std::vector<std::string>{"#drunk"});

  auto sober = LabelByHashtags(
      R("2", "u", "#sober saturday feels great this fine morning"), tags);
  REQUIRE(std::holds_alternative<LabeledTweet>(sober));
  CHECK(std::get<LabeledTweet>(sober).label == Label::kSober);
  CHECK(std::get<LabeledTweet>(sober).text ==
        "saturday feels great this fine morning");

  CHECK(std::holds_alternative<Conflict>(
      LabelByHashtags(R("3", "u", "a #drunk b #sober c"), tags)));
  CHECK(std::holds_alternative<Unlabeled>(
      LabelByHashtags(R("4", "u", "plain words #drunkard only"), tags)));
}

TEST_CASE("hashtag matching is case-insensitive and keeps punctuation") {
  const SupervisionTags tags;
  auto out = LabelByHashtags(R("1", "u", "what a night #DRANK! ok"), tags);
  REQUIRE(std::holds_alternative<LabeledTweet>(out));
  CHECK(std::get<LabeledTweet>(out).text == "what a night ! ok");
  CHECK(std::get<LabeledTweet>(out).stripped_tags ==
        std::vector<std::string>{"#drank"});
  CHECK(FindSupervisionTags("#ImDrunk and #sober.", tags) ==
        std::vector<std::string>{"#imdrunk", "#sober"});
}

TEST_CASE("supervision tag validation") {
  SupervisionTags tags;
  tags.sober_tags.insert("#drunk");
  CHECK_THROWS_AS(tags.Validate(), ConfigError);
  SupervisionTags upper;
  upper.drunk_tags = {"#Drunk"};
  CHECK_THROWS_AS(upper.Validate(), ConfigError);
}

std::vector<RawRecord> ToyRecords() {
  return {R("d1", "amy", "had way too many beers tonight #drunk"),
          R("d2", "ben", "cannot feel my face right now #imdrunk"),
          R("d3", "amy", "the room is spinning so much lol #drank"),
          R("s1", "cat", "quiet evening with tea and a book #sober"),
          R("s2", "dan", "early run tomorrow so staying in #notdrunk"),
          R("c1", "eve", "mixed signals here tonight #drunk #sober"),
          R("x1", "fay", "no tags in this one at all"),
          R("l1", "amy", "look at this http://x.co please #drunk ok")};
}

TEST_CASE("dataset 1 counts") {
  BuildTally tally;
  Corpus d1 = BuildDataset1(ToyRecords(), {}, {}, &tally);
  CHECK(d1.n_drunk() == 3);
  CHECK(d1.n_sober() == 2);
  CHECK(d1.strategy == Strategy::kD1);
  CHECK(tally.accepted == 5);
  CHECK(tally.rejected.at("conflict") == 1);
  CHECK(tally.rejected.at("unlabeled") == 1);
  CHECK(tally.rejected.at("hyperlink") == 1);
  CHECK(tally.total() == ToyRecords().size());
  for (const auto &t : d1.tweets) CHECK(t.id != "c1");
}

TEST_CASE("dataset 1 needs both classes") {
  std::vector<RawRecord> only_drunk = {ToyRecords()[0], ToyRecords()[1]};
  CHECK_THROWS_AS(BuildDataset1(only_drunk, {}, {}), DataError);
}

TEST_CASE("dataset 2 draws negatives from drunk authors") {
  Corpus drunk = LabelRecords(ToyRecords(), {}, {});
  std::erase_if(drunk.tweets,
                [](const LabeledTweet &t) { return t.label != Label::kDrunk; });
  std::vector<RawRecord> pool = {
      R("p1", "amy", "long day at the office again folks"),
      R("p2", "amy", "back at it again tonight #imdrunk"),
      R("p3", "zed", "long day at the office again folks"),
      R("p4", "ben", "short one"),
      R("p5", "ben", "feeling fine and clear headed today #sober")};
  BuildTally tally;
  Corpus d2 = BuildDataset2(drunk, pool, {}, {}, &tally);
  CHECK(d2.strategy == Strategy::kD2);
  CHECK(d2.n_drunk() == 3);
  std::vector<std::string> negatives;
  for (const auto &t : d2.tweets) {
    if (t.label == Label::kSober) negatives.push_back(t.id + ":" + t.text);
  }
  CHECK(negatives == std::vector<std::string>{
                         "p1:long day at the office again folks",
                         "p5:feeling fine and clear headed today"});
  CHECK(tally.total() == pool.size());
  CHECK(d2.warnings.empty());
}

TEST_CASE("dataset 2 with an empty pool warns") {
  Corpus drunk = LabelRecords(ToyRecords(), {}, {});
  std::erase_if(drunk.tweets,
                [](const LabeledTweet &t) { return t.label != Label::kDrunk; });
  Corpus d2 = BuildDataset2(drunk, {}, {}, {});
  CHECK(d2.n_sober() == 0);
  CHECK_FALSE(d2.warnings.empty());
  CHECK_THROWS_AS(BuildDataset2(Corpus{}, {}, {}, {}), DataError);
}

TEST_CASE("held-out set") {
  std::vector<RawRecord> records = ToyRecords();
  records.push_back(R("x2", "amy", "going to sleep it off now friends"));
  Corpus all = BuildHeldout(records, {}, {}, {});
  CHECK(all.strategy == Strategy::kH);
  // D1-style labels plus untagged tweets by drunk authors.
  CHECK(all.n_drunk() == 3);
  CHECK(all.n_sober() == 3);

  BuildTally tally;
  Corpus some = BuildHeldout(records, {}, {}, {"d1", "x2"}, &tally);
  for (const auto &t : some.tweets) {
    CHECK(t.id != "d1");
    CHECK(t.id != "x2");
  }
  CHECK(tally.total() == records.size());
  CHECK(tally.rejected.at("excluded") == 2);
}

TEST_CASE("term frequency report") {
  Corpus corpus;
  corpus.tweets = {{"1", "u", "love the bar", Label::kDrunk, {}},
                   {"2", "u", "bar was loud", Label::kDrunk, {}},
                   {"3", "u", "bar bar bar", Label::kSober, {}}};
  auto report = TermFrequencyReport(corpus, Label::kDrunk, {"the", "was"});
  CHECK(report == std::vector<TermCount>{{"bar", 2}, {"loud", 1}, {"love", 1}});
  CHECK(TermFrequencyReport(Corpus{}, Label::kDrunk, {}).empty());

  corpus.tweets.push_back({"4", "u", "Drunk drunken DRUNKK bar", Label::kDrunk, {}});
  auto dropped = TermFrequencyReport(corpus, Label::kDrunk, {"the", "was"});
  CHECK(dropped.front() == TermCount{"bar", 3});
  CHECK(dropped.size() == 3);
}

TEST_CASE("labeled corpus round-trip") {
  Corpus d1 = BuildDataset1(ToyRecords(), {}, {});
  std::stringstream buffer;
  WriteLabeledCorpus(buffer, d1);
  Corpus back = ReadLabeledCorpus(buffer, Strategy::kD1);
  CHECK(back.tweets == d1.tweets);
  std::istringstream bad(R"({"id":"1","user":"u","text":"t","label":"maybe"})");
  CHECK_THROWS(ReadLabeledCorpus(bad, Strategy::kD1));
}

TEST_CASE("strategy names") {
  CHECK(ParseStrategy("d2") == Strategy::kD2);
  CHECK(StrategyName(Strategy::kH) == "h");
  CHECK_THROWS_AS(ParseStrategy("d3"), ConfigError);
}

}  // namespace
}  // namespace soberlens::corpus
