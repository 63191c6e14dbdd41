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

#include "affectix/intensity.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "affectix/error.hpp"
#include "doctest.h"
#include "test_support.hpp"

namespace affectix {
namespace {

using testing::MakeLexiconWithTail;

Sentence MakeSentence(std::vector<std::string> tokens) {
  Sentence s;
  s.tokens = std::move(tokens);
  s.raw_span = {0, 1};
  return s;
}

Document MakeDocument(std::vector<std::vector<std::string>> sentences) {
  Document d;
  d.doc_id = "doc";
  for (auto& tokens : sentences) d.sentences.push_back(MakeSentence(std::move(tokens)));
  return d;
}

AdjectiveLexicon Adjectives(std::vector<std::string> words,
                            std::vector<SuffixRule> rules) {
  return AdjectiveLexicon({words.begin(), words.end()}, std::move(rules));
}

TEST_CASE("The worked example scores 0.2") {
  const auto list = BuildEmotionList(MakeLexiconWithTail({"beautiful"}));
  REQUIRE(list.IsEmotional("beautiful") == 1);
  const Document doc = SegmentDocument("ex", "This is a beautiful day");
  REQUIRE(doc.sentences.size() == 1);
  const SentenceScore s = ScoreSentence(doc.sentences[0], list);
  CHECK(s.n_words == 5);
  CHECK(s.n_emotional == 1);
  CHECK(s.ei == 0.2);
}

TEST_CASE("Sentence scores at the extremes") {
  const auto list = BuildEmotionList(MakeLexiconWithTail({"joy", "grief"}));
  CHECK(ScoreSentence(MakeSentence({"the", "table"}), list).ei == 0.0);
  CHECK(ScoreSentence(MakeSentence({"joy", "grief", "joy"}), list).ei == 1.0);
  // Repeated words count once per occurrence.
  const auto rep = ScoreSentence(MakeSentence({"joy", "joy", "day", "day"}), list);
  CHECK(rep.n_emotional == 2);
  CHECK(rep.ei == 0.5);
  CHECK_THROWS_AS(ScoreSentence(MakeSentence({}), list), Error);
}

TEST_CASE("Document profiles use the population std by default") {
  const auto list = BuildEmotionList(MakeLexiconWithTail({"beautiful"}));
  const Document doc = MakeDocument({{"this", "is", "a", "beautiful", "day"},
                                     {"this", "is", "a", "plain", "day"}});
  const DocumentProfile p = ProfileDocument(doc, list);
  CHECK(p.series.size() == 2);
  CHECK(p.mean_ei == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(p.std_ei == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(p.std_mode == StdMode::kPopulation);

  const DocumentProfile sample = ProfileDocument(doc, list, StdMode::kSample);
  CHECK(sample.std_ei == doctest::Approx(std::sqrt(0.02)).epsilon(1e-15));

  const DocumentProfile one = ProfileDocument(MakeDocument({{"beautiful", "day"}}), list);
  CHECK(one.mean_ei == 0.5);
  CHECK(one.std_ei == 0.0);
  CHECK(ProfileDocument(MakeDocument({{"beautiful", "day"}}), list,
                        StdMode::kSample).std_ei == 0.0);

  const DocumentProfile same = ProfileDocument(
      MakeDocument({{"beautiful", "a", "b"}, {"c", "beautiful", "d"},
                    {"e", "f", "beautiful"}}),
      list);
  CHECK(same.std_ei == 0.0);
  CHECK(same.mean_ei == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("An empty document cannot be profiled") {
  const auto list = BuildEmotionList(MakeLexiconWithTail({"joy"}));
  Document empty;
  empty.doc_id = "nothing";
  try {
    ProfileDocument(empty, list);
    FAIL("expected an empty-document error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kEmptyDocument);
    CHECK(std::string(e.what()).find("nothing") != std::string::npos);
  }
  CHECK_THROWS_AS(AdjectiveRate(empty, AdjectiveLexicon::Default()), Error);
}

TEST_CASE("Profiles are invariant to sentence order, token order and duplication") {
  const auto list = BuildEmotionList(
      MakeLexiconWithTail({"joy", "grief", "love", "hate", "fear"}));
  const std::vector<std::string> vocab = {"joy", "grief", "love", "hate", "fear",
                                          "the", "a", "day", "road", "city",
                                          "table", "walk"};
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> word(0, vocab.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::vector<std::string>> sentences(
        std::uniform_int_distribution<int>(1, 12)(rng));
    for (auto& s : sentences) {
      s.resize(std::uniform_int_distribution<std::size_t>(1, 15)(rng));
      for (auto& t : s) t = vocab[word(rng)];
    }
    const DocumentProfile base = ProfileDocument(MakeDocument(sentences), list);
    CHECK(base.mean_ei >= 0.0);
    CHECK(base.mean_ei <= 1.0);
    CHECK(base.std_ei >= 0.0);
    CHECK(base.std_ei <= 0.5);

    auto permuted = sentences;
    std::shuffle(permuted.begin(), permuted.end(), rng);
    for (auto& s : permuted) std::shuffle(s.begin(), s.end(), rng);
    const DocumentProfile p = ProfileDocument(MakeDocument(permuted), list);
    CHECK(p.mean_ei == doctest::Approx(base.mean_ei).epsilon(1e-12));
    CHECK(p.std_ei == doctest::Approx(base.std_ei).epsilon(1e-12));

    auto doubled = sentences;
    doubled.insert(doubled.end(), sentences.begin(), sentences.end());
    const DocumentProfile d = ProfileDocument(MakeDocument(doubled), list);
    CHECK(d.mean_ei == doctest::Approx(base.mean_ei).epsilon(1e-12));
    CHECK(d.std_ei == doctest::Approx(base.std_ei).epsilon(1e-12));
  }
}

TEST_CASE("Adjective rate from the word list and the longest suffix") {
  const auto adj = Adjectives({"beautiful"}, {{"ish", true}});
  CHECK(AdjectiveRate(MakeDocument({{"beautiful", "day"}}), adj) == 0.5);
  CHECK(AdjectiveRate(MakeDocument({{"reddish", "sky"}}), adj) == 0.5);
  CHECK(AdjectiveRate(MakeDocument({{"the", "sky"}, {"a", "road"}}), adj) == 0.0);

  const auto rules = Adjectives({"placeholder"}, {{"ly", false}, {"dly", true}});
  CHECK(rules.IsAdjective("friendly"));
  CHECK_FALSE(rules.IsAdjective("quickly"));
  // The suffix must leave a stem of at least three characters.
  const auto short_stem = Adjectives({"placeholder"}, {{"ive", true}});
  CHECK_FALSE(short_stem.IsAdjective("five"));
  CHECK(short_stem.IsAdjective("massive"));
  // Explicit words win over a negative suffix rule.
  const auto explicit_word = Adjectives({"lovely"}, {{"ly", false}});
  CHECK(explicit_word.IsAdjective("lovely"));
}

TEST_CASE("Default adjective lexicon covers common adjectives") {
  const auto& adj = AdjectiveLexicon::Default();
  for (const char* w : {"beautiful", "happy", "old", "large", "famous",
                        "careless", "dangerous"}) {
    INFO(w);
    CHECK(adj.IsAdjective(w));
  }
  for (const char* w : {"the", "day", "city", "happiness", "quickly",
                        "government"}) {
    INFO(w);
    CHECK_FALSE(adj.IsAdjective(w));
  }
}

TEST_CASE("Adjective list and suffix rule files") {
  std::istringstream words("# adjectives\nRed\n  blue \r\n\n");
  const auto set = AdjectiveLexicon::ParseWordList(words);
  CHECK(set == std::set<std::string, std::less<>>{"blue", "red"});

  std::istringstream rules("ish\tadj\nness\tnotadj\n");
  const auto parsed = AdjectiveLexicon::ParseSuffixRules(rules);
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].suffix == "ish");
  CHECK(parsed[0].is_adjective);
  CHECK_FALSE(parsed[1].is_adjective);

  std::istringstream bad_flag("ish\tyes\n");
  CHECK_THROWS_AS(AdjectiveLexicon::ParseSuffixRules(bad_flag), ParseError);
  std::istringstream no_tab("ish adj\n");
  CHECK_THROWS_AS(AdjectiveLexicon::ParseSuffixRules(no_tab), ParseError);

  CHECK_THROWS_AS(Adjectives({}, {{"ish", true}}), Error);
  CHECK_THROWS_AS(Adjectives({"red"}, {}), Error);
}

TEST_CASE("EI and adjective rate read the same token stream") {
  const auto list = BuildEmotionList(MakeLexiconWithTail({"joy"}));
  const Document doc = SegmentDocument(
      "d", "Joy came early. The well-known road, 12 miles long!\n\nDon't stop.");
  const DocumentProfile p = ProfileDocument(doc, list);
  CHECK(p.TokenCount() == doc.TokenCount());
  const auto adj = Adjectives({"long"}, {{"ish", true}});
  CHECK(AdjectiveRate(doc, adj) ==
        doctest::Approx(1.0 / static_cast<double>(doc.TokenCount())));
}

}  // namespace
}  // namespace affectix
