// Copyright 2026 The Affectix Authors.
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

#include "affectix/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "affectix/csv.hpp"
#include "doctest.h"
#include "test_support.hpp"

namespace affectix::cli {
namespace {

using testing::DataDir;
using testing::ListFiles;
using testing::ReadFile;
using testing::TempDir;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "affectix");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = Run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string Lexicon() { return testing::FixtureLexiconPath().string(); }
std::string Corpus(const char* name) { return (DataDir() / "corpora" / name).string(); }

TEST_CASE("score writes profiles, histogram and scatter") {
  TempDir dir;
  const auto r = Invoke({"score", "--lexicon", Lexicon(), "--out",
                         dir.path().string(), Corpus("intense.csv")});
  INFO(r.err);
  REQUIRE(r.code == kExitOk);
  CHECK(ListFiles(dir.path()) == std::vector<std::string>{
            "histogram.csv", "profiles.csv", "profiles.json", "scatter.csv"});
  const auto profiles = csv::Parse(ReadFile(dir / "profiles.csv"));
  REQUIRE(profiles.size() == 11);
  CHECK(profiles[0] == csv::Record{"doc_id", "label", "n_sentences", "mean_ei",
                                   "std_ei", "adjective_rate"});
  const auto json = nlohmann::json::parse(ReadFile(dir / "profiles.json"));
  CHECK(json["documents"].size() == 10);
  CHECK(r.out.find("skipped 0") != std::string::npos);
}

TEST_CASE("histogram has one count column per label and 30 bins") {
  TempDir corpus;
  std::string rows = "doc_id,path,label\n";
  for (int i = 0; i < 4; ++i) {
    const std::string name = "d" + std::to_string(i) + ".txt";
    corpus.Write(name, i % 2 ? "Joy and love. A road." : "The city built a road.");
    rows += "d" + std::to_string(i) + "," + name + "," + (i % 2 ? "poem" : "article") + "\n";
  }
  const auto manifest = corpus.Write("m.csv", rows);
  TempDir out;
  REQUIRE(Invoke({"score", "--lexicon", Lexicon(), "--out", out.path().string(),
                  manifest.string()}).code == kExitOk);
  const auto hist = csv::Parse(ReadFile(out / "histogram.csv"));
  REQUIRE(hist.size() == 31);
  CHECK(hist[0] == csv::Record{"bin", "bin_start", "bin_end", "article", "poem"});
  int article = 0, poem = 0;
  for (std::size_t i = 1; i < hist.size(); ++i) {
    article += std::stoi(hist[i][3]);
    poem += std::stoi(hist[i][4]);
  }
  CHECK(article == 2);
  CHECK(poem == 2);
}

TEST_CASE("missing manifest exits 2 and writes nothing") {
  TempDir dir;
  const auto out = dir / "out";
  const auto r = Invoke({"score", "--lexicon", Lexicon(), "--out", out.string(),
                         (dir / "nope.csv").string()});
  CHECK(r.code == kExitInput);
  CHECK_FALSE(r.err.empty());
  CHECK_FALSE(std::filesystem::exists(out));
}

TEST_CASE("an unreadable document is skipped and reported") {
  TempDir dir;
  dir.Write("a.txt", "A beautiful day.");
  dir.Write("b.txt", "\xff\xfe broken");
  const auto m = dir.Write("m.csv", "doc_id,path,label\na,a.txt,x\nb,b.txt,x\n");
  const auto r = Invoke({"score", "--lexicon", Lexicon(), "--out",
                         (dir / "out").string(), m.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("skipped 1") != std::string::npos);
  CHECK(r.out.find("invalid UTF-8") != std::string::npos);
}

TEST_CASE("a failed write removes files already written") {
  TempDir dir;
  // A directory where histogram.csv should go makes the third write fail.
  std::filesystem::create_directories(dir / "histogram.csv" / "blocker");
  const auto r = Invoke({"score", "--lexicon", Lexicon(), "--out",
                         dir.path().string(), Corpus("intense.csv")});
  CHECK(r.code != kExitOk);
  CHECK_FALSE(std::filesystem::exists(dir / "profiles.csv"));
  CHECK_FALSE(std::filesystem::exists(dir / "profiles.json"));
  CHECK_FALSE(std::filesystem::exists(dir / "scatter.csv"));
}

TEST_CASE("compare reports the dissociation on the fixtures") {
  TempDir dir;
  const auto r = Invoke({"compare", "--lexicon", Lexicon(), "--out",
                         dir.path().string(), Corpus("intense.csv"),
                         Corpus("neutral.csv")});
  INFO(r.err);
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(ReadFile(dir / "compare.json"));
  CHECK(doc["a"]["mean_ei"]["mean"].get<double>() >
        doc["b"]["mean_ei"]["mean"].get<double>());
  CHECK(doc["tests"]["mean_ei"]["p_two_sided"].get<double>() < 0.01);
  CHECK(doc["tests"]["adjective_rate"]["p_two_sided"].get<double>() > 0.05);
  CHECK(doc["tests"]["mean_ei"]["kind"] == "welch");
}

TEST_CASE("compare of a corpus with itself gives t = 0 and p = 1") {
  TempDir dir;
  const auto r = Invoke({"compare", "--lexicon", Lexicon(), "--out",
                         dir.path().string(), Corpus("intense.csv"),
                         Corpus("intense.csv")});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(ReadFile(dir / "compare.json"));
  for (const char* m : {"mean_ei", "adjective_rate"}) {
    CHECK(doc["tests"][m]["t"].get<double>() == 0.0);
    CHECK(doc["tests"][m]["p_two_sided"].get<double>() == 1.0);
  }
}

TEST_CASE("compare exit codes for degenerate and undersized groups") {
  TempDir dir;
  dir.Write("a.txt", "The city built a road.");
  dir.Write("b.txt", "The river is north.");
  dir.Write("c.txt", "A table in the house.");
  const auto flat = dir.Write("flat.csv", "doc_id,path,label\na,a.txt,x\nb,b.txt,x\n");
  const auto flat2 = dir.Write("flat2.csv", "doc_id,path,label\nc,c.txt,y\nb,b.txt,y\n");
  const auto one = dir.Write("one.csv", "doc_id,path,label\nc,c.txt,y\n");
  // Every document has EI 0, so both groups are constant with equal means.
  const auto degenerate = Invoke({"compare", "--lexicon", Lexicon(), "--out",
                                  (dir / "o1").string(), flat.string(), flat2.string()});
  CHECK(degenerate.code == kExitDegenerate);
  CHECK_FALSE(std::filesystem::exists(dir / "o1"));
  const auto small = Invoke({"compare", "--lexicon", Lexicon(), "--out",
                             (dir / "o2").string(), flat.string(), one.string()});
  CHECK(small.code == kExitInput);
}

TEST_CASE("classify writes a five-row table and is repeatable") {
  TempDir a, b;
  const auto run = [&](const TempDir& d) {
    return Invoke({"classify", "--lexicon", Lexicon(), "--out", d.path().string(),
                   "--seed", "42", Corpus("cohort.csv")});
  };
  const auto first = run(a);
  INFO(first.err);
  REQUIRE(first.code == kExitOk);
  REQUIRE(run(b).code == kExitOk);
  const std::string table = ReadFile(a / "table1.csv");
  CHECK(table == ReadFile(b / "table1.csv"));
  CHECK(ReadFile(a / "classify.json") == ReadFile(b / "classify.json"));
  const auto rows = csv::Parse(table);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == csv::Record{"classifier", "perf_mean", "perf_std", "auc_mean",
                               "auc_std", "f1_mean", "f1_std"});
  CHECK(rows[1][0] == "LogisticRegression");
  const auto doc = nlohmann::json::parse(ReadFile(a / "classify.json"));
  CHECK(doc["seed"] == 42);
  CHECK(doc["positive_class"] == "mania");
  CHECK(doc["reports"][0]["per_fold"].size() == 10);
}

TEST_CASE("classify seed comes from the flag, then the environment") {
  TempDir a, b;
  ::setenv("AFFECTIX_SEED", "7", 1);
  const auto env = Invoke({"classify", "--lexicon", Lexicon(), "--out",
                           a.path().string(), "--classifier", "logreg",
                           Corpus("cohort.csv")});
  const auto flag = Invoke({"classify", "--lexicon", Lexicon(), "--out",
                            b.path().string(), "--classifier", "logreg", "--seed",
                            "9", Corpus("cohort.csv")});
  ::unsetenv("AFFECTIX_SEED");
  REQUIRE(env.code == kExitOk);
  REQUIRE(flag.code == kExitOk);
  CHECK(nlohmann::json::parse(ReadFile(a / "classify.json"))["seed"] == 7);
  CHECK(nlohmann::json::parse(ReadFile(b / "classify.json"))["seed"] == 9);
}

TEST_CASE("classify exit codes") {
  TempDir dir;
  const auto svc = Invoke({"classify", "--lexicon", Lexicon(), "--out",
                           (dir / "a").string(), "--classifier", "svc",
                           Corpus("cohort.csv")});
  CHECK(svc.code == kExitUnimplemented);
  CHECK(svc.err.find("svc") != std::string::npos);
  CHECK_FALSE(std::filesystem::exists(dir / "a"));

  const auto too_many_folds = Invoke({"classify", "--lexicon", Lexicon(), "--out",
                                      (dir / "b").string(), "--k", "21",
                                      Corpus("cohort.csv")});
  CHECK(too_many_folds.code == kExitInput);

  const auto one_label = Invoke({"classify", "--lexicon", Lexicon(), "--out",
                                 (dir / "c").string(), Corpus("intense.csv")});
  CHECK(one_label.code == kExitInput);
  CHECK_FALSE(std::filesystem::exists(dir / "b"));
  CHECK_FALSE(std::filesystem::exists(dir / "c"));
}

TEST_CASE("lexicon-info") {
  const auto ok = Invoke({"lexicon-info", "--lexicon", Lexicon()});
  REQUIRE(ok.code == kExitOk);
  CHECK(ok.out.find("50 entries") != std::string::npos);
  CHECK(ok.out.find("negative tail: 10 words") != std::string::npos);
  CHECK(ok.out.find("positive tail: 10 words") != std::string::npos);
  CHECK(ok.out.find("beautiful") != std::string::npos);

  CHECK(Invoke({"lexicon-info", "--lexicon", Lexicon(), "--lower-frac", "0.6"}).code ==
        kExitInput);
  CHECK(Invoke({"lexicon-info"}).code == kExitInput);

  TempDir dir;
  const auto bad = dir.Write("bad.tsv", "good\t1\t1\t1\nbad\tx\t1\t1\n");
  const auto r = Invoke({"lexicon-info", "--lexicon", bad.string()});
  CHECK(r.code == kExitInput);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(Invoke({}).code == kExitInput);
  CHECK(Invoke({"frobnicate"}).code == kExitInput);
  CHECK(Invoke({"classify", "--lexicon", Lexicon(), "--features", "median",
                Corpus("cohort.csv")}).code == kExitInput);
  CHECK(Invoke({"classify", "--lexicon", Lexicon(), "--seed", "abc",
                Corpus("cohort.csv")}).code == kExitInput);
  CHECK(Invoke({"score", "--help"}).code == kExitOk);
}

TEST_CASE("replicate chains the steps into subdirectories") {
  TempDir dir;
  const auto r = Invoke({"replicate", "--lexicon", Lexicon(), "--out",
                         dir.path().string(), "--intense", Corpus("intense.csv"),
                         "--neutral", Corpus("neutral.csv"), "--cohort",
                         Corpus("cohort.csv")});
  INFO(r.err);
  REQUIRE(r.code == kExitOk);
  for (const char* f : {"intense/profiles.csv", "neutral/histogram.csv",
                        "compare/compare.json", "classify/table1.csv"}) {
    CHECK(std::filesystem::exists(dir / f));
  }
}

}  // namespace
}  // namespace affectix::cli
