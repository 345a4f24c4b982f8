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

#include "cli/app.h"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "cli/manifest.h"
#include "soberlens/common/error.h"
#include "soberlens/common/format.h"
#include "soberlens/corpus/datasets.h"
#include "soberlens/corpus/records.h"
#include "soberlens/corpus/term_frequency.h"
#include "soberlens/eval/cross_validation.h"
#include "soberlens/eval/heldout.h"
#include "soberlens/eval/kappa.h"
#include "soberlens/eval/metrics.h"
#include "soberlens/features/extractor.h"
#include "soberlens/learn/chi_squared.h"
#include "soberlens/learn/linear_model.h"
#include "soberlens/learn/svm.h"
#include "soberlens/topics/lda.h"

#ifndef SOBERLENS_DEFAULT_LEXICON_DIR
#define SOBERLENS_DEFAULT_LEXICON_DIR "assets/lexicons"
#endif

namespace soberlens::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char *kLdaPairFormat = "soberlens.lda_pair";
constexpr int kLdaPairVersion = 1;
constexpr const char *kLexiconEnv = "SOBERLENS_LEXICON_DIR";
constexpr const char *kLexiconFiles[] = {"dictionary.txt", "sentiment.tsv",
                                         "connectors.txt", "stopwords.txt",
                                         "pos.tsv",        "emoticons.txt"};

struct Streams {
  std::istream &in;
  std::ostream &out;
  std::ostream &err;
};

std::ifstream OpenInput(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open input " + path.string());
  return in;
}

std::ofstream OpenOutput(const fs::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write output " + path.string());
  return out;
}

std::vector<corpus::RawRecord> LoadRecords(const fs::path &path) {
  std::ifstream in = OpenInput(path);
  return corpus::IngestRecords(in, path.string());
}

corpus::Corpus LoadCorpus(const fs::path &path,
                          corpus::Strategy strategy = corpus::Strategy::kD1) {
  std::ifstream in = OpenInput(path);
  return corpus::ReadLabeledCorpus(in, strategy, path.string());
}

// --lexicon-dir, then $SOBERLENS_LEXICON_DIR, then the built-in path.
fs::path ResolveLexiconDir(const std::string &flag) {
  if (!flag.empty()) return flag;
  if (const char *env = std::getenv(kLexiconEnv); env && *env) return env;
  return SOBERLENS_DEFAULT_LEXICON_DIR;
}

text::LexiconSet LoadLexicons(const std::string &flag, RunManifest &manifest) {
  fs::path dir = ResolveLexiconDir(flag);
  text::LexiconSet lex = text::LoadLexiconDir(dir);
  manifest.parameters["lexicon_dir"] = dir.string();
  for (const char *name : kLexiconFiles) {
    if (fs::exists(dir / name)) manifest.inputs.push_back(dir / name);
  }
  return lex;
}

std::set<std::string> ReadLdaUnigrams(const fs::path &path) {
  std::ifstream in = OpenInput(path);
  try {
    json doc = json::parse(in);
    if (doc.at("format") != kLdaPairFormat ||
        doc.at("version") != kLdaPairVersion) {
      throw ModelError(path.string() + " is not an LDA pair file");
    }
    return doc.at("unigrams").get<std::set<std::string>>();
  } catch (const json::exception &e) {
    throw ModelError("malformed LDA file " + path.string() + ": " + e.what());
  }
}

features::FeatureConfig ResolveFeatures(const std::string &preset,
                                        const std::string &lda_path,
                                        RunManifest &manifest) {
  features::FeatureConfig config = features::FeatureConfig::FromPreset(preset);
  manifest.parameters["features"] = preset;
  if (!lda_path.empty()) {
    manifest.parameters["lda"] = lda_path;
    manifest.inputs.push_back(lda_path);
    if (config.stylistic) config.lda_unigrams = ReadLdaUnigrams(lda_path);
  }
  return config;
}

std::string TallyLine(const corpus::BuildTally &tally) {
  std::ostringstream line;
  line << tally.total() << " records, " << tally.accepted << " accepted, "
       << tally.total_rejected() << " rejected";
  if (!tally.rejected.empty()) {
    line << " [";
    bool first = true;
    for (const auto &[reason, n] : tally.rejected) {
      line << (first ? "" : ", ") << reason << '=' << n;
      first = false;
    }
    line << ']';
  }
  return line.str();
}

json TallyJson(const corpus::BuildTally &tally) {
  return {{"total", tally.total()},
          {"accepted", tally.accepted},
          {"rejected", tally.rejected}};
}

// Each command registers its options and returns the action to run.
using Action = std::function<void()>;

// ---------------------------------------------------------------- build-dataset

struct BuildDatasetArgs {
  std::string strategy;
  std::string input;
  std::string user_pool;
  std::vector<std::string> exclude;
  std::string output;
  int min_words = 6;
};

void RunBuildDataset(const BuildDatasetArgs &a, Streams io) {
  RunManifest manifest;
  manifest.command = "build-dataset";
  const corpus::Strategy strategy = corpus::ParseStrategy(a.strategy);
  corpus::FilterRules rules;
  rules.min_words = a.min_words;
  rules.Validate();
  const corpus::SupervisionTags tags;
  manifest.parameters = {{"strategy", a.strategy},
                         {"input", a.input},
                         {"min_words", a.min_words},
                         {"drunk_tags", tags.drunk_tags},
                         {"sober_tags", tags.sober_tags}};
  manifest.inputs.push_back(a.input);

  const std::vector<corpus::RawRecord> records = LoadRecords(a.input);
  corpus::BuildTally tally;
  corpus::Corpus result;
  json summary;
  std::vector<std::string> tally_lines;

  switch (strategy) {
    case corpus::Strategy::kD1:
      result = corpus::BuildDataset1(records, rules, tags, &tally);
      break;
    case corpus::Strategy::kD2: {
      if (a.user_pool.empty()) {
        throw ConfigError("--user-pool is required for strategy d2");
      }
      manifest.parameters["user_pool"] = a.user_pool;
      manifest.inputs.push_back(a.user_pool);
      corpus::Corpus labeled = corpus::LabelRecords(records, rules, tags, &tally);
      corpus::Corpus drunk;
      for (auto &t : labeled.tweets) {
        if (t.label == Label::kDrunk) {
          drunk.tweets.push_back(std::move(t));
        } else {
          --tally.accepted;
          tally.Reject("sober_tag");
        }
      }
      const std::vector<corpus::RawRecord> pool = LoadRecords(a.user_pool);
      corpus::BuildTally pool_tally;
      result = corpus::BuildDataset2(drunk, pool, rules, tags, &pool_tally);
      summary["user_pool"] = TallyJson(pool_tally);
      tally_lines.push_back("user pool: " + TallyLine(pool_tally));
      break;
    }
    case corpus::Strategy::kH: {
      std::unordered_set<std::string> exclude;
      for (const std::string &path : a.exclude) {
        manifest.inputs.push_back(path);
        for (const auto &t : LoadCorpus(path).tweets) exclude.insert(t.id);
      }
      manifest.parameters["exclude"] = a.exclude;
      result = corpus::BuildHeldout(records, rules, tags, exclude, &tally);
      break;
    }
  }
  tally_lines.insert(tally_lines.begin(), "input: " + TallyLine(tally));
  summary["input"] = TallyJson(tally);
  summary["drunk"] = result.n_drunk();
  summary["sober"] = result.n_sober();

  for (const std::string &w : result.warnings) io.err << "warning: " << w << '\n';
  io.out << "strategy: " << a.strategy << '\n'
         << "counts (drunk, sober): (" << result.n_drunk() << ", "
         << result.n_sober() << ")\n";
  for (const std::string &line : tally_lines) io.out << line << '\n';
  if (result.n_drunk() == 0 || result.n_sober() == 0) {
    throw DataError("dataset " + a.strategy + " has an empty class");
  }

  {
    std::ofstream out = OpenOutput(a.output);
    corpus::WriteLabeledCorpus(out, result);
  }
  manifest.outputs.push_back(a.output);
  manifest.summary = summary;
  manifest.WriteAll();
}

Action AddBuildDataset(CLI::App &app, Streams io) {
  auto args = std::make_shared<BuildDatasetArgs>();
  CLI::App *cmd = app.add_subcommand(
      "build-dataset", "Filter and label raw records into a corpus");
  cmd->add_option("--strategy", args->strategy, "d1, d2 or h")
      ->required()
      ->check(CLI::IsMember({"d1", "d2", "h"}));
  cmd->add_option("--input", args->input, "Raw records (JSON lines)")->required();
  cmd->add_option("--user-pool", args->user_pool,
                  "Records by candidate authors (d2)");
  cmd->add_option("--exclude", args->exclude,
                  "Labeled corpora whose ids must not reappear (h)");
  cmd->add_option("--output", args->output, "Labeled corpus (JSON lines)")
      ->required();
  cmd->add_option("--min-words", args->min_words, "Minimum word count")
      ->capture_default_str();
  return [args, io, cmd] {
    if (*cmd) RunBuildDataset(*args, io);
  };
}

// -------------------------------------------------------------------- term-freq

struct TermFreqArgs {
  std::string input;
  std::string label = "drunk";
  std::vector<std::string> drop_stems = corpus::DefaultDropStems();
  std::size_t top = 50;
  std::string output;
  std::string lexicon_dir;
};

void RunTermFreq(const TermFreqArgs &a, Streams io) {
  RunManifest manifest;
  manifest.command = "term-freq";
  text::LexiconSet lex = LoadLexicons(a.lexicon_dir, manifest);
  manifest.parameters.update({{"input", a.input},
                              {"label", a.label},
                              {"drop_stems", a.drop_stems},
                              {"top", a.top}});
  manifest.inputs.insert(manifest.inputs.begin(), a.input);
  corpus::Corpus corpus = LoadCorpus(a.input);
  auto report = corpus::TermFrequencyReport(corpus, ParseLabel(a.label),
                                            lex.stopwords, a.drop_stems);
  if (a.top > 0 && report.size() > a.top) report.resize(a.top);

  std::ostringstream text;
  text << "word\tcount\n";
  for (const auto &[word, count] : report) text << word << '\t' << count << '\n';
  if (a.output.empty()) {
    io.out << text.str();
    return;
  }
  OpenOutput(a.output) << text.str();
  manifest.outputs.push_back(a.output);
  manifest.WriteAll();
}

Action AddTermFreq(CLI::App &app, Streams io) {
  auto args = std::make_shared<TermFreqArgs>();
  CLI::App *cmd = app.add_subcommand(
      "term-freq", "Ranked word frequencies for one class");
  cmd->add_option("--input", args->input, "Labeled corpus")->required();
  cmd->add_option("--label", args->label, "drunk or sober")
      ->check(CLI::IsMember({"drunk", "sober"}))
      ->capture_default_str();
  cmd->add_option("--drop-stems", args->drop_stems,
                  "Drop words starting with these");
  cmd->add_option("--top", args->top, "Rows to keep (0 = all)")
      ->capture_default_str();
  cmd->add_option("--output", args->output, "TSV output (default stdout)");
  cmd->add_option("--lexicon-dir", args->lexicon_dir, "Lexicon directory");
  return [args, io, cmd] {
    if (*cmd) RunTermFreq(*args, io);
  };
}

// ---------------------------------------------------------------------- lda-fit

struct LdaFitArgs {
  std::string input;
  std::uint64_t seed = 0;
  int topics = 20;
  double alpha = 0.0;
  double beta = 0.01;
  int iterations = 500;
  std::size_t per_topic = 10;
  std::string output;
  std::string lexicon_dir;
};

void RunLdaFit(const LdaFitArgs &a, Streams io) {
  RunManifest manifest;
  manifest.command = "lda-fit";
  text::LexiconSet lex = LoadLexicons(a.lexicon_dir, manifest);
  topics::TopicModelParams params;
  params.n_topics = a.topics;
  if (a.alpha > 0.0) params.alpha = a.alpha;
  params.beta = a.beta;
  params.iterations = a.iterations;
  params.Validate();
  manifest.parameters.update({{"input", a.input},
                              {"seed", a.seed},
                              {"topics", a.topics},
                              {"alpha", params.ResolvedAlpha()},
                              {"beta", a.beta},
                              {"iterations", a.iterations},
                              {"per_topic", a.per_topic}});
  manifest.inputs.insert(manifest.inputs.begin(), a.input);

  corpus::Corpus corpus = LoadCorpus(a.input);
  auto drunk_docs = topics::ClassDocuments(corpus, Label::kDrunk, lex);
  auto sober_docs = topics::ClassDocuments(corpus, Label::kSober, lex);
  topics::TopicModelParams drunk_params = params, sober_params = params;
  drunk_params.seed = a.seed;
  sober_params.seed = a.seed + 1;
  auto drunk_future = std::async(std::launch::async, [&] {
    return topics::TopicModel::Fit(drunk_docs, drunk_params);
  });
  topics::TopicModel sober = topics::TopicModel::Fit(sober_docs, sober_params);
  topics::TopicModel drunk = drunk_future.get();
  std::set<std::string> unigrams =
      topics::SelectLdaUnigrams(drunk, sober, a.per_topic);

  json doc = {{"format", kLdaPairFormat},
              {"version", kLdaPairVersion},
              {"per_topic", a.per_topic},
              {"unigrams", unigrams},
              {"drunk", drunk.ToJson()},
              {"sober", sober.ToJson()}};
  OpenOutput(a.output) << doc.dump(-1, ' ', false, json::error_handler_t::replace)
                       << '\n';
  io.out << "drunk: " << drunk.n_docs() << " docs, " << drunk.vocab_size()
         << " words\n"
         << "sober: " << sober.n_docs() << " docs, " << sober.vocab_size()
         << " words\n"
         << "selected " << unigrams.size() << " LDA unigrams\n";
  manifest.outputs.push_back(a.output);
  manifest.summary = {{"unigrams", unigrams.size()}};
  manifest.WriteAll();
}

Action AddLdaFit(CLI::App &app, Streams io) {
  auto args = std::make_shared<LdaFitArgs>();
  CLI::App *cmd = app.add_subcommand(
      "lda-fit", "Fit one topic model per class and select LDA unigrams");
  cmd->add_option("--input", args->input, "Labeled corpus")->required();
  cmd->add_option("--seed", args->seed, "Sampler seed (sober uses seed+1)")
      ->required();
  cmd->add_option("--topics", args->topics, "Topics per class")
      ->capture_default_str();
  cmd->add_option("--alpha", args->alpha, "Dirichlet alpha (default 50/topics)");
  cmd->add_option("--beta", args->beta, "Dirichlet beta")->capture_default_str();
  cmd->add_option("--iterations", args->iterations, "Gibbs sweeps")
      ->capture_default_str();
  cmd->add_option("--per-topic", args->per_topic, "Top words kept per topic")
      ->capture_default_str();
  cmd->add_option("--output", args->output, "LDA pair file (JSON)")->required();
  cmd->add_option("--lexicon-dir", args->lexicon_dir, "Lexicon directory");
  return [args, io, cmd] {
    if (*cmd) RunLdaFit(*args, io);
  };
}

// -------------------------------------------------------------------- top-words

struct TopWordsArgs {
  std::string model;
  std::size_t n = 10;
  std::string label;
};

void RunTopWords(const TopWordsArgs &a, Streams io) {
  std::ifstream in = OpenInput(a.model);
  json doc;
  try {
    doc = json::parse(in);
    if (doc.at("format") != kLdaPairFormat) {
      throw ModelError(a.model + " is not an LDA pair file");
    }
  } catch (const json::exception &e) {
    throw ModelError("malformed LDA file " + a.model + ": " + e.what());
  }
  io.out << "class\ttopic\twords\n";
  for (const char *name : {"drunk", "sober"}) {
    if (!a.label.empty() && a.label != name) continue;
    topics::TopicModel model = topics::TopicModel::FromJson(doc.at(name));
    auto top = topics::TopWords(model, a.n);
    for (std::size_t k = 0; k < top.size(); ++k) {
      io.out << name << '\t' << k << '\t';
      for (std::size_t i = 0; i < top[k].size(); ++i) {
        io.out << (i ? " " : "") << top[k][i];
      }
      io.out << '\n';
    }
  }
}

Action AddTopWords(CLI::App &app, Streams io) {
  auto args = std::make_shared<TopWordsArgs>();
  CLI::App *cmd =
      app.add_subcommand("top-words", "Print the top words of each topic");
  cmd->add_option("--model", args->model, "LDA pair file")->required();
  cmd->add_option("--n", args->n, "Words per topic")->capture_default_str();
  cmd->add_option("--label", args->label, "Only this class")
      ->check(CLI::IsMember({"drunk", "sober"}));
  return [args, io, cmd] {
    if (*cmd) RunTopWords(*args, io);
  };
}

// ------------------------------------------------------------------------ train

struct TrainArgs {
  std::string input;
  std::string features = "all";
  std::string lda;
  std::uint64_t seed = 0;
  double c = 1.0;
  int max_epochs = 1000;
  double tolerance = 1e-4;
  bool no_shuffle = false;
  std::string output;
  std::string lexicon_dir;
};

learn::TrainConfig MakeTrainConfig(double c, int max_epochs, double tolerance,
                                   std::uint64_t seed, bool no_shuffle) {
  learn::TrainConfig config;
  config.c = c;
  config.max_epochs = max_epochs;
  config.tolerance = tolerance;
  config.seed = seed;
  config.shuffle = !no_shuffle;
  config.Validate();
  return config;
}

void RunTrain(const TrainArgs &a, Streams io) {
  RunManifest manifest;
  manifest.command = "train";
  manifest.inputs.push_back(a.input);
  text::LexiconSet lex = LoadLexicons(a.lexicon_dir, manifest);
  features::FeatureConfig features = ResolveFeatures(a.features, a.lda, manifest);
  learn::TrainConfig config =
      MakeTrainConfig(a.c, a.max_epochs, a.tolerance, a.seed, a.no_shuffle);
  manifest.parameters.update({{"input", a.input},
                              {"seed", a.seed},
                              {"c", a.c},
                              {"max_epochs", a.max_epochs},
                              {"tolerance", a.tolerance},
                              {"shuffle", config.shuffle}});

  corpus::Corpus corpus = LoadCorpus(a.input);
  features::FeatureRegistry registry;
  features::Design design =
      features::VectorizeCorpus(corpus, features, lex, registry);
  registry.Freeze();
  learn::TrainStats stats;
  learn::LinearModel model =
      learn::TrainSvm(design.rows, design.labels, registry, config, &stats);
  model.feature_config = features;

  eval::ConfusionMatrix confusion;
  for (std::size_t i = 0; i < design.rows.size(); ++i) {
    confusion.Add(design.labels[i], model.Predict(design.rows[i]).label);
  }
  OpenOutput(a.output) << [&] {
    std::ostringstream s;
    model.WriteJson(s);
    return s.str();
  }();
  io.out << "trained on " << corpus.size() << " tweets (" << corpus.n_drunk()
         << " drunk, " << corpus.n_sober() << " sober), " << registry.size()
         << " features\n"
         << "epochs: " << stats.epochs
         << (stats.converged ? " (converged)" : " (epoch limit)") << '\n'
         << "training accuracy: "
         << eval::FormatPercent(eval::ComputeMetrics(confusion).a) << "%\n";
  manifest.outputs.push_back(a.output);
  manifest.summary = {{"tweets", corpus.size()},
                      {"features", registry.size()},
                      {"epochs", stats.epochs},
                      {"converged", stats.converged}};
  manifest.WriteAll();
}

void AddFeatureOptions(CLI::App *cmd, std::string &features, std::string &lda,
                       std::string &lexicon_dir) {
  cmd->add_option("--features", features, "ngram, stylistic or all")
      ->check(CLI::IsMember({"ngram", "stylistic", "all"}))
      ->capture_default_str();
  cmd->add_option("--lda", lda, "LDA pair file with the unigram list");
  cmd->add_option("--lexicon-dir", lexicon_dir, "Lexicon directory");
}

void AddSvmOptions(CLI::App *cmd, double &c, int &max_epochs,
                   double &tolerance, bool &no_shuffle) {
  cmd->add_option("--c", c, "Soft-margin penalty")->capture_default_str();
  cmd->add_option("--max-epochs", max_epochs, "Epoch limit")
      ->capture_default_str();
  cmd->add_option("--tolerance", tolerance, "Stop when no alpha moves more")
      ->capture_default_str();
  cmd->add_flag("--no-shuffle", no_shuffle, "Visit examples in input order");
}

Action AddTrain(CLI::App &app, Streams io) {
  auto args = std::make_shared<TrainArgs>();
  CLI::App *cmd = app.add_subcommand("train", "Train a linear SVM");
  cmd->add_option("--input", args->input, "Labeled corpus")->required();
  cmd->add_option("--seed", args->seed, "Shuffle seed")->required();
  cmd->add_option("--output", args->output, "Model file (JSON)")->required();
  AddFeatureOptions(cmd, args->features, args->lda, args->lexicon_dir);
  AddSvmOptions(cmd, args->c, args->max_epochs, args->tolerance,
                args->no_shuffle);
  return [args, io, cmd] {
    if (*cmd) RunTrain(*args, io);
  };
}

// --------------------------------------------------------------- cross-validate

struct CrossValidateArgs : TrainArgs {
  int k = 5;
  std::string classifier = "svm";
};

void RunCrossValidate(const CrossValidateArgs &a, Streams io) {
  RunManifest manifest;
  manifest.command = "cross-validate";
  manifest.inputs.push_back(a.input);
  text::LexiconSet lex = LoadLexicons(a.lexicon_dir, manifest);
  features::FeatureConfig features = ResolveFeatures(a.features, a.lda, manifest);
  learn::TrainConfig config =
      MakeTrainConfig(a.c, a.max_epochs, a.tolerance, a.seed, a.no_shuffle);
  eval::CvOptions options;
  options.k = a.k;
  options.seed = a.seed;
  options.classifier = eval::ParseClassifier(a.classifier);
  manifest.parameters.update({{"input", a.input},
                              {"seed", a.seed},
                              {"k", a.k},
                              {"classifier", a.classifier},
                              {"c", a.c},
                              {"max_epochs", a.max_epochs},
                              {"tolerance", a.tolerance},
                              {"shuffle", config.shuffle}});

  corpus::Corpus corpus = LoadCorpus(a.input);
  eval::CvResult result =
      eval::CrossValidate(corpus, features, config, lex, options);
  std::ostringstream report;
  eval::WriteCvReport(report, result, features, options);
  if (a.output.empty()) {
    io.out << report.str();
    return;
  }
  OpenOutput(a.output) << report.str();
  io.out << "pooled accuracy: " << eval::FormatPercent(result.metrics.a)
         << "%\n";
  manifest.outputs.push_back(a.output);
  manifest.WriteAll();
}

Action AddCrossValidate(CLI::App &app, Streams io) {
  auto args = std::make_shared<CrossValidateArgs>();
  CLI::App *cmd = app.add_subcommand(
      "cross-validate", "Stratified k-fold cross-validation");
  cmd->add_option("--input", args->input, "Labeled corpus")->required();
  cmd->add_option("--seed", args->seed, "Fold and training seed")->required();
  cmd->add_option("--k", args->k, "Number of folds")->capture_default_str();
  cmd->add_option("--classifier", args->classifier, "svm or nb")
      ->check(CLI::IsMember({"svm", "nb"}))
      ->capture_default_str();
  cmd->add_option("--output", args->output, "Report file (default stdout)");
  AddFeatureOptions(cmd, args->features, args->lda, args->lexicon_dir);
  AddSvmOptions(cmd, args->c, args->max_epochs, args->tolerance,
                args->no_shuffle);
  return [args, io, cmd] {
    if (*cmd) RunCrossValidate(*args, io);
  };
}

// --------------------------------------------------------------------- evaluate

learn::LinearModel LoadModel(const fs::path &path) {
  std::ifstream in = OpenInput(path);
  return learn::LinearModel::ReadJson(in);
}

struct EvaluateArgs {
  std::string model;
  std::string input;
  std::string output;
  std::string errors;
  std::string lexicon_dir;
};

void RunEvaluate(const EvaluateArgs &a, Streams io) {
  RunManifest manifest;
  manifest.command = "evaluate";
  manifest.inputs = {a.model, a.input};
  text::LexiconSet lex = LoadLexicons(a.lexicon_dir, manifest);
  manifest.parameters.update({{"model", a.model}, {"input", a.input}});
  learn::LinearModel model = LoadModel(a.model);
  corpus::Corpus corpus = LoadCorpus(a.input, corpus::Strategy::kH);
  eval::HeldoutResult result = eval::EvaluateHeldout(model, corpus, lex);

  std::vector<eval::MetricsRow> rows = {{"model", result.metrics}};
  eval::WriteMetricsTable(io.out, rows);
  io.out << "confusion: tp=" << result.confusion.tp
         << " fp=" << result.confusion.fp << " fn=" << result.confusion.fn
         << " tn=" << result.confusion.tn << '\n';
  if (!a.output.empty()) {
    std::ofstream out = OpenOutput(a.output);
    eval::WriteMetricsTsv(out, rows);
    manifest.outputs.push_back(a.output);
  }
  if (!a.errors.empty()) {
    std::ofstream out = OpenOutput(a.errors);
    eval::WriteErrorReportTsv(out, eval::ErrorReport(model, corpus, lex));
    manifest.outputs.push_back(a.errors);
  }
  manifest.WriteAll();
}

Action AddEvaluate(CLI::App &app, Streams io) {
  auto args = std::make_shared<EvaluateArgs>();
  CLI::App *cmd = app.add_subcommand(
      "evaluate", "Evaluate a trained model on a held-out corpus");
  cmd->add_option("--model", args->model, "Model file")->required();
  cmd->add_option("--input", args->input, "Labeled held-out corpus")
      ->required();
  cmd->add_option("--output", args->output, "Metrics TSV");
  cmd->add_option("--errors", args->errors, "Misclassification report TSV");
  cmd->add_option("--lexicon-dir", args->lexicon_dir, "Lexicon directory");
  return [args, io, cmd] {
    if (*cmd) RunEvaluate(*args, io);
  };
}

// ---------------------------------------------------------------- rank-features

struct RankArgs {
  std::string input;
  std::string features = "stylistic";
  std::string lda;
  std::string groups = "all";
  std::size_t top = 0;
  std::string output;
  std::string lexicon_dir;
};

bool IsStylisticName(const std::string &name) {
  for (std::string_view fixed : features::kStylisticNames) {
    if (name == fixed) return true;
  }
  return name.starts_with(features::kLdaPresencePrefix) ||
         name.starts_with(features::kLdaCountPrefix);
}

void RunRankFeatures(const RankArgs &a, Streams io) {
  RunManifest manifest;
  manifest.command = "rank-features";
  manifest.inputs.push_back(a.input);
  text::LexiconSet lex = LoadLexicons(a.lexicon_dir, manifest);
  features::FeatureConfig features = ResolveFeatures(a.features, a.lda, manifest);
  manifest.parameters.update(
      {{"input", a.input}, {"groups", a.groups}, {"top", a.top}});
  corpus::Corpus corpus = LoadCorpus(a.input);
  features::FeatureRegistry registry;
  features::Design design =
      features::VectorizeCorpus(corpus, features, lex, registry);
  std::vector<learn::RankedFeature> ranking =
      learn::ChiSquaredRank(design.rows, design.labels, registry);
  if (a.groups != "all") {
    const bool want_stylistic = a.groups == "stylistic";
    std::erase_if(ranking, [&](const learn::RankedFeature &f) {
      return IsStylisticName(f.name) != want_stylistic;
    });
  }
  if (a.top > 0 && ranking.size() > a.top) ranking.resize(a.top);
  std::ostringstream text;
  learn::WriteRankingTsv(text, ranking);
  if (a.output.empty()) {
    io.out << text.str();
    return;
  }
  OpenOutput(a.output) << text.str();
  manifest.outputs.push_back(a.output);
  manifest.WriteAll();
}

Action AddRankFeatures(CLI::App &app, Streams io) {
  auto args = std::make_shared<RankArgs>();
  CLI::App *cmd = app.add_subcommand(
      "rank-features", "Chi-squared ranking of feature presence vs. class");
  cmd->add_option("--input", args->input, "Labeled corpus")->required();
  cmd->add_option("--groups", args->groups,
                  "Keep only ngram or stylistic features in the output")
      ->check(CLI::IsMember({"ngram", "stylistic", "all"}))
      ->capture_default_str();
  cmd->add_option("--top", args->top, "Rows to keep (0 = all)")
      ->capture_default_str();
  cmd->add_option("--output", args->output, "TSV output (default stdout)");
  AddFeatureOptions(cmd, args->features, args->lda, args->lexicon_dir);
  return [args, io, cmd] {
    if (*cmd) RunRankFeatures(*args, io);
  };
}

// ------------------------------------------------------------------------ kappa

struct KappaArgs {
  std::string input;
  std::string output;
};

void RunKappa(const KappaArgs &a, Streams io) {
  std::ifstream in = OpenInput(a.input);
  auto annotations = eval::ReadAnnotations(in, a.input);
  eval::KappaMatrix matrix = eval::PairwiseKappa(annotations);
  std::ostringstream text;
  eval::WriteKappaTsv(text, matrix);
  if (a.output.empty()) {
    io.out << text.str();
    return;
  }
  OpenOutput(a.output) << text.str();
  RunManifest manifest;
  manifest.command = "kappa";
  manifest.parameters = {{"input", a.input}};
  manifest.inputs.push_back(a.input);
  manifest.outputs.push_back(a.output);
  manifest.WriteAll();
}

Action AddKappa(CLI::App &app, Streams io) {
  auto args = std::make_shared<KappaArgs>();
  CLI::App *cmd = app.add_subcommand(
      "kappa", "Pairwise Cohen's kappa between annotators");
  cmd->add_option("--input", args->input, "Annotations (JSON lines)")
      ->required();
  cmd->add_option("--output", args->output, "TSV output (default stdout)");
  return [args, io, cmd] {
    if (*cmd) RunKappa(*args, io);
  };
}

// ---------------------------------------------------------------------- predict

struct PredictArgs {
  std::string model;
  std::string lexicon_dir;
};

void RunPredict(const PredictArgs &a, Streams io) {
  RunManifest unused;
  text::LexiconSet lex = LoadLexicons(a.lexicon_dir, unused);
  learn::LinearModel model = LoadModel(a.model);
  features::FeatureRegistry registry = model.registry();
  features::FeatureExtractor extractor(model.feature_config, lex);
  std::string line;
  while (std::getline(io.in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    learn::Prediction p = model.Predict(extractor.Extract(line, registry));
    io.out << LabelName(LabelFromSign(p.label)) << '\t' << FormatDouble(p.score)
           << '\n';
  }
}

Action AddPredict(CLI::App &app, Streams io) {
  auto args = std::make_shared<PredictArgs>();
  CLI::App *cmd = app.add_subcommand(
      "predict", "Classify one text per stdin line (label<TAB>score)");
  cmd->add_option("--model", args->model, "Model file")->required();
  cmd->add_option("--lexicon-dir", args->lexicon_dir, "Lexicon directory");
  return [args, io, cmd] {
    if (*cmd) RunPredict(*args, io);
  };
}

// ----------------------------------------------------------------- dump-vectors

struct DumpArgs {
  std::string input;
  std::string features = "all";
  std::string lda;
  std::string output;
  std::string lexicon_dir;
};

void RunDumpVectors(const DumpArgs &a, Streams io) {
  RunManifest manifest;
  manifest.command = "dump-vectors";
  manifest.inputs.push_back(a.input);
  text::LexiconSet lex = LoadLexicons(a.lexicon_dir, manifest);
  features::FeatureConfig features = ResolveFeatures(a.features, a.lda, manifest);
  manifest.parameters["input"] = a.input;
  corpus::Corpus corpus = LoadCorpus(a.input);
  features::FeatureRegistry registry;
  features::Design design =
      features::VectorizeCorpus(corpus, features, lex, registry);
  std::ostringstream text;
  features::WriteVectorDump(text, corpus, design, registry);
  if (a.output.empty()) {
    io.out << text.str();
    return;
  }
  OpenOutput(a.output) << text.str();
  manifest.outputs.push_back(a.output);
  manifest.WriteAll();
}

Action AddDumpVectors(CLI::App &app, Streams io) {
  auto args = std::make_shared<DumpArgs>();
  CLI::App *cmd = app.add_subcommand(
      "dump-vectors", "Write feature vectors in the debug dump format");
  cmd->add_option("--input", args->input, "Labeled corpus")->required();
  cmd->add_option("--output", args->output, "Dump file (default stdout)");
  AddFeatureOptions(cmd, args->features, args->lda, args->lexicon_dir);
  return [args, io, cmd] {
    if (*cmd) RunDumpVectors(*args, io);
  };
}

}  // namespace

int Run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err) {
  Streams io{in, out, err};
  CLI::App app{"Distant-supervision drunk-text classification toolkit",
               "soberlens"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::vector<Action> actions = {
      AddBuildDataset(app, io), AddTermFreq(app, io),   AddLdaFit(app, io),
      AddTopWords(app, io),     AddTrain(app, io),      AddCrossValidate(app, io),
      AddEvaluate(app, io),     AddRankFeatures(app, io), AddKappa(app, io),
      AddPredict(app, io),      AddDumpVectors(app, io)};

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (const Action &action : actions) action();
    return kExitOk;
  } catch (const ModelError &e) {
    err << "error: " << e.what() << '\n';
    return kExitModel;
  } catch (const ConfigError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const DataError &e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace soberlens::cli
