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

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <unistd.h>

#include "cli/app.h"

namespace soberlens::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Call(std::vector<std::string> args, const std::string &stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const std::set<std::string> no_lexicons = {"build-dataset", "top-words", "kappa"};
  if (!args.empty() && !no_lexicons.count(args[0])) {
    args.push_back("--lexicon-dir");
    args.push_back(SOBERLENS_TEST_LEXICON_DIR);
  }
  int code = Run(args, in, out, err);
  return {code, out.str(), err.str()};
}

Result CallBare(const std::vector<std::string> &args) {
  std::istringstream in;
  std::ostringstream out, err;
  int code = Run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("soberlens_cli_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string &name) const { return path_ / name; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

void WriteRaw(const fs::path &path, const std::vector<std::array<std::string, 3>> &rows) {
  std::ofstream out(path);
  for (const auto &[id, user, text] : rows) {
    out << nlohmann::json{{"id", id}, {"user", user}, {"text", text}}.dump() << '\n';
  }
}

std::vector<std::array<std::string, 3>> ToyRaw() {
  return {{"d1", "amy", "had way too many beers tonight #drunk"},
          {"d2", "ben", "cannot feel my face right now lol #imdrunk"},
          {"d3", "amy", "the room is spinning so much lol #drank"},
          {"d4", "cal", "shots shots shots at the bar again #drunk"},
          {"d5", "amy", "where did my shoes go haha #drunk"},
          {"s1", "cat", "quiet evening with tea and a good book #sober"},
          {"s2", "dan", "early run tomorrow so staying in tonight #notdrunk"},
          {"s3", "eli", "finished the report and went to bed early #sober"},
          {"s4", "fay", "watching a documentary about whales now #sober"},
          {"s5", "gus", "clear head and a long walk in the park #notdrunk"},
          {"x1", "hal", "no tags in this one at all"}};
}

TEST_CASE("usage errors exit 2") {
  CHECK(CallBare({}).code == 2);
  CHECK(CallBare({"train"}).code == 2);
  CHECK(CallBare({"frobnicate"}).code == 2);
  CHECK(CallBare({"--help"}).code == 0);
  CHECK(CallBare({"build-dataset", "--strategy", "d9", "--input", "x",
                  "--output", "y"})
            .code == 2);
  CHECK(Call({"term-freq", "--input", "/nonexistent/file.jsonl"}).code == 2);
}

TEST_CASE("build-dataset d1 prints counts and writes a manifest") {
  TempDir dir;
  WriteRaw(dir / "raw.jsonl", ToyRaw());
  Result r = Call({"build-dataset", "--strategy", "d1", "--input",
                   (dir / "raw.jsonl").string(), "--output",
                   (dir / "d1.jsonl").string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("(5, 5)") != std::string::npos);
  CHECK(r.out.find("unlabeled=1") != std::string::npos);
  auto manifest = nlohmann::json::parse(Slurp(dir / "d1.jsonl.manifest.json"));
  CHECK(manifest["command"] == "build-dataset");
  CHECK(manifest["inputs"].size() == 1);
  CHECK(manifest["inputs"][0]["sha256"].get<std::string>().size() == 64);
  CHECK(manifest["outputs"][0]["sha256"].get<std::string>().size() == 64);
  CHECK(manifest["parameters"]["min_words"] == 6);
}

TEST_CASE("malformed input exits 3") {
  TempDir dir;
  {
    std::ofstream out(dir / "bad.jsonl");
    out << "{oops\n";
  }
  Result r = Call({"build-dataset", "--strategy", "d1", "--input",
                   (dir / "bad.jsonl").string(), "--output",
                   (dir / "o.jsonl").string()});
  CHECK(r.code == 3);
  CHECK(r.err.find(":1:") != std::string::npos);
}

TEST_CASE("held-out build with everything excluded exits 3") {
  TempDir dir;
  WriteRaw(dir / "raw.jsonl", ToyRaw());
  REQUIRE(Call({"build-dataset", "--strategy", "d1", "--input",
                (dir / "raw.jsonl").string(), "--output", (dir / "d1.jsonl").string()})
              .code == 0);
  Result r = Call({"build-dataset", "--strategy", "h", "--input",
                   (dir / "raw.jsonl").string(), "--exclude",
                   (dir / "d1.jsonl").string(), "--output",
                   (dir / "h.jsonl").string()});
  CHECK(r.code == 3);
}

TEST_CASE("d2 needs a user pool") {
  TempDir dir;
  WriteRaw(dir / "raw.jsonl", ToyRaw());
  WriteRaw(dir / "pool.jsonl",
           {{"p1", "amy", "long day at the office again folks"},
            {"p2", "ben", "made pasta for dinner with friends tonight"},
            {"p3", "zed", "not by a drunk author at all here"}});
  CHECK(Call({"build-dataset", "--strategy", "d2", "--input",
              (dir / "raw.jsonl").string(), "--output", (dir / "d2.jsonl").string()})
            .code == 2);
  Result r = Call({"build-dataset", "--strategy", "d2", "--input",
                   (dir / "raw.jsonl").string(), "--user-pool",
                   (dir / "pool.jsonl").string(), "--output",
                   (dir / "d2.jsonl").string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("(5, 2)") != std::string::npos);
}

TEST_CASE("train, predict and evaluate agree") {
  TempDir dir;
  WriteRaw(dir / "raw.jsonl", ToyRaw());
  REQUIRE(Call({"build-dataset", "--strategy", "d1", "--input",
                (dir / "raw.jsonl").string(), "--output", (dir / "d1.jsonl").string()})
              .code == 0);
  Result t = Call({"train", "--input", (dir / "d1.jsonl").string(), "--seed", "3",
                   "--output", (dir / "model.json").string()});
  REQUIRE(t.code == 0);
  CHECK(t.out.find("trained on 10 tweets") != std::string::npos);

  Result p = Call({"predict", "--model", (dir / "model.json").string()},
                  "had way too many beers tonight\nquiet evening with tea and a good book\n");
  REQUIRE(p.code == 0);
  std::istringstream lines(p.out);
  std::string first, second;
  std::getline(lines, first);
  std::getline(lines, second);
  CHECK(first.rfind("drunk\t", 0) == 0);
  CHECK(second.rfind("sober\t", 0) == 0);

  Result e = Call({"evaluate", "--model", (dir / "model.json").string(), "--input",
                   (dir / "d1.jsonl").string(), "--output",
                   (dir / "metrics.tsv").string(), "--errors",
                   (dir / "errors.tsv").string()});
  CHECK(e.code == 0);
  CHECK(e.out.find("100.0") != std::string::npos);
  CHECK(Slurp(dir / "errors.tsv") ==
        "id\tgold\tpredicted\tscore\ttop_features\ttext\n");
  CHECK(fs::exists(dir / "metrics.tsv.manifest.json"));
}

TEST_CASE("bad model file exits 4") {
  TempDir dir;
  WriteRaw(dir / "raw.jsonl", ToyRaw());
  REQUIRE(Call({"build-dataset", "--strategy", "d1", "--input",
                (dir / "raw.jsonl").string(), "--output", (dir / "d1.jsonl").string()})
              .code == 0);
  {
    std::ofstream out(dir / "model.json");
    out << "{\"format\": \"nope\"}";
  }
  CHECK(Call({"evaluate", "--model", (dir / "model.json").string(), "--input",
              (dir / "d1.jsonl").string()})
            .code == 4);
}

TEST_CASE("cross-validate twice gives identical reports") {
  TempDir dir;
  WriteRaw(dir / "raw.jsonl", ToyRaw());
  REQUIRE(Call({"build-dataset", "--strategy", "d1", "--input",
                (dir / "raw.jsonl").string(), "--output", (dir / "d1.jsonl").string()})
              .code == 0);
  for (const char *name : {"a.txt", "b.txt"}) {
    REQUIRE(Call({"cross-validate", "--input", (dir / "d1.jsonl").string(),
                  "--features", "all", "--k", "5", "--seed", "11", "--output",
                  (dir / name).string()})
                .code == 0);
  }
  CHECK(Slurp(dir / "a.txt") == Slurp(dir / "b.txt"));
  CHECK_FALSE(Slurp(dir / "a.txt").empty());
  auto ma = nlohmann::json::parse(Slurp(dir / "a.txt.manifest.json"));
  auto mb = nlohmann::json::parse(Slurp(dir / "b.txt.manifest.json"));
  CHECK(ma["outputs"][0]["sha256"] == mb["outputs"][0]["sha256"]);
  CHECK(Call({"cross-validate", "--input", (dir / "d1.jsonl").string(), "--k",
              "6", "--seed", "1"})
            .code == 3);
}

TEST_CASE("lda, ranking, term frequencies, dumps and kappa") {
  TempDir dir;
  WriteRaw(dir / "raw.jsonl", ToyRaw());
  REQUIRE(Call({"build-dataset", "--strategy", "d1", "--input",
                (dir / "raw.jsonl").string(), "--output", (dir / "d1.jsonl").string()})
              .code == 0);
  Result lda = Call({"lda-fit", "--input", (dir / "d1.jsonl").string(), "--seed",
                     "5", "--topics", "3", "--iterations", "20", "--per-topic",
                     "2", "--output", (dir / "lda.json").string()});
  REQUIRE(lda.code == 0);
  CHECK(lda.out.find("LDA unigrams") != std::string::npos);
  Result top = Call({"top-words", "--model", (dir / "lda.json").string(), "--n", "2"});
  CHECK(top.code == 0);
  CHECK(top.out.find("drunk\t0\t") != std::string::npos);
  CHECK(top.out.find("sober\t2\t") != std::string::npos);

  Result rank = Call({"rank-features", "--input", (dir / "d1.jsonl").string(),
                      "--features", "all", "--lda", (dir / "lda.json").string(),
                      "--groups", "stylistic", "--top", "5"});
  CHECK(rank.code == 0);
  CHECK(rank.out.rfind("1\t", 0) == 0);
  CHECK(rank.out.find("\tu:") == std::string::npos);

  Result tf = Call({"term-freq", "--input", (dir / "d1.jsonl").string(), "--label",
                    "drunk", "--top", "3"});
  CHECK(tf.code == 0);
  CHECK(tf.out.rfind("word\tcount\n", 0) == 0);

  Result dump = Call({"dump-vectors", "--input", (dir / "d1.jsonl").string(),
                      "--features", "ngram"});
  CHECK(dump.code == 0);
  CHECK(dump.out.find("d1\tdrunk\t") != std::string::npos);

  {
    std::ofstream out(dir / "ann.jsonl");
    out << R"({"id":"1","annotator":"a","label":"drunk"})" << '\n'
        << R"({"id":"1","annotator":"b","label":"drunk"})" << '\n'
        << R"({"id":"2","annotator":"a","label":"sober"})" << '\n'
        << R"({"id":"2","annotator":"b","label":"sober"})" << '\n';
  }
  Result kappa = CallBare({"kappa", "--input", (dir / "ann.jsonl").string()});
  CHECK(kappa.code == 0);
  CHECK(kappa.out.find("1.000000") != std::string::npos);
}

}  // namespace
}  // namespace soberlens::cli
