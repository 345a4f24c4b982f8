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

#include "soberlens/corpus/datasets.h"

#include <optional>
#include <variant>

#include "soberlens/common/error.h"

namespace soberlens::corpus {

namespace {

constexpr std::string_view kUnlabeled = "unlabeled";
constexpr std::string_view kConflict = "conflict";
constexpr std::string_view kExcluded = "excluded";
constexpr std::string_view kDrunkTag = "drunk_tag";
constexpr std::string_view kNotDrunkAuthor = "not_drunk_author";

void Count(BuildTally *tally, std::optional<std::string_view> rejection) {
  if (!tally) return;
  if (rejection) {
    tally->Reject(*rejection);
  } else {
    ++tally->accepted;
  }
}

// Filters then labels; on rejection records the reason and returns nullopt.
// Unlabeled records are returned as an Unlabeled outcome without counting so
// callers can decide what to do with them.
std::optional<LabelOutcome> FilterAndLabel(const RawRecord &record,
                                           const FilterRules &rules,
                                           const SupervisionTags &tags,
                                           BuildTally *tally) {
  FilterResult filtered = FilterRecord(record, rules);
  if (!filtered.accepted()) {
    Count(tally, RejectReasonName(*filtered.rejection));
    return std::nullopt;
  }
  RawRecord cleaned{record.id, record.user, std::move(filtered.text)};
  LabelOutcome outcome = LabelByHashtags(cleaned, tags);
  if (std::holds_alternative<Conflict>(outcome)) {
    Count(tally, kConflict);
    return std::nullopt;
  }
  return outcome;
}

void CheckBothClasses(const Corpus &corpus, std::string_view what) {
  if (corpus.n_drunk() == 0 || corpus.n_sober() == 0) {
    throw DataError(std::string(what) + " has an empty class (" +
                    std::to_string(corpus.n_drunk()) + " drunk, " +
                    std::to_string(corpus.n_sober()) + " sober)");
  }
}

}  // namespace

std::size_t BuildTally::total_rejected() const {
  std::size_t n = 0;
  for (const auto &[reason, count] : rejected) n += count;
  return n;
}

Corpus LabelRecords(std::span<const RawRecord> records,
                    const FilterRules &rules, const SupervisionTags &tags,
                    BuildTally *tally) {
  rules.Validate();
  tags.Validate();
  Corpus corpus;
  corpus.strategy = Strategy::kD1;
  for (const RawRecord &record : records) {
    std::optional<LabelOutcome> outcome =
        FilterAndLabel(record, rules, tags, tally);
    if (!outcome) continue;
    if (auto *tweet = std::get_if<LabeledTweet>(&*outcome)) {
      Count(tally, std::nullopt);
      corpus.tweets.push_back(std::move(*tweet));
    } else {
      Count(tally, kUnlabeled);
    }
  }
  return corpus;
}

Corpus BuildDataset1(std::span<const RawRecord> records,
                     const FilterRules &rules, const SupervisionTags &tags,
                     BuildTally *tally) {
  Corpus corpus = LabelRecords(records, rules, tags, tally);
  CheckBothClasses(corpus, "dataset 1");
  return corpus;
}

Corpus BuildDataset2(const Corpus &drunk_corpus,
                     std::span<const RawRecord> user_pool,
                     const FilterRules &rules, const SupervisionTags &tags,
                     BuildTally *tally) {
  rules.Validate();
  tags.Validate();
  Corpus corpus;
  corpus.strategy = Strategy::kD2;
  std::unordered_set<std::string> authors;
  for (const LabeledTweet &t : drunk_corpus.tweets) {
    if (t.label != Label::kDrunk) continue;
    authors.insert(t.user);
    corpus.tweets.push_back(t);
  }
  if (corpus.tweets.empty()) {
    throw DataError("dataset 2 needs at least one drunk tweet");
  }

  for (const RawRecord &record : user_pool) {
    if (!authors.count(record.user)) {
      Count(tally, kNotDrunkAuthor);
      continue;
    }
    FilterResult filtered = FilterRecord(record, rules);
    if (!filtered.accepted()) {
      Count(tally, RejectReasonName(*filtered.rejection));
      continue;
    }
    bool has_drunk_tag = false;
    for (const std::string &tag : FindSupervisionTags(filtered.text, tags)) {
      has_drunk_tag |= tags.drunk_tags.count(tag) > 0;
    }
    if (has_drunk_tag) {
      Count(tally, kDrunkTag);
      continue;
    }
    LabeledTweet tweet;
    tweet.id = record.id;
    tweet.user = record.user;
    tweet.label = Label::kSober;
    tweet.text = StripTags(filtered.text, tags.sober_tags, &tweet.stripped_tags);
    Count(tally, std::nullopt);
    corpus.tweets.push_back(std::move(tweet));
  }

  if (user_pool.empty()) {
    corpus.warnings.push_back("user pool is empty; corpus has no sober tweets");
  } else if (corpus.n_sober() == 0) {
    corpus.warnings.push_back(
        "user pool produced no sober tweets from drunk authors");
  }
  return corpus;
}

Corpus BuildHeldout(std::span<const RawRecord> records,
                    const FilterRules &rules, const SupervisionTags &tags,
                    const std::unordered_set<std::string> &exclude,
                    BuildTally *tally) {
  rules.Validate();
  tags.Validate();

  // Outcomes are computed once; counting waits until the author set is known.
  std::vector<std::optional<LabelOutcome>> outcomes;
  outcomes.reserve(records.size());
  std::unordered_set<std::string> drunk_authors;
  BuildTally early;
  for (const RawRecord &record : records) {
    if (exclude.count(record.id)) {
      early.Reject(kExcluded);
      outcomes.emplace_back();
      continue;
    }
    outcomes.push_back(FilterAndLabel(record, rules, tags, &early));
    if (!outcomes.back()) continue;
    if (auto *tweet = std::get_if<LabeledTweet>(&*outcomes.back());
        tweet && tweet->label == Label::kDrunk) {
      drunk_authors.insert(tweet->user);
    }
  }

  Corpus corpus;
  corpus.strategy = Strategy::kH;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!outcomes[i]) continue;
    if (auto *tweet = std::get_if<LabeledTweet>(&*outcomes[i])) {
      ++early.accepted;
      corpus.tweets.push_back(std::move(*tweet));
    } else if (drunk_authors.count(records[i].user)) {
      // Untagged text by a drunk author; already cleaned by the filter.
      FilterResult filtered = FilterRecord(records[i], rules);
      ++early.accepted;
      corpus.tweets.push_back(LabeledTweet{records[i].id, records[i].user,
                                           std::move(filtered.text),
                                           Label::kSober, {}});
    } else {
      early.Reject(kNotDrunkAuthor);
    }
  }
  if (tally) {
    tally->accepted += early.accepted;
    for (const auto &[reason, n] : early.rejected) tally->rejected[reason] += n;
  }
  return corpus;
}

}  // namespace soberlens::corpus
