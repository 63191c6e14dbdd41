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

// Emotion intensity scoring. The intensity of a sentence is the fraction of
// its words that belong to the high-emotion word list; a document is
// summarized by the mean and standard deviation of its sentence series.

#ifndef AFFECTIX_INTENSITY_HPP_
#define AFFECTIX_INTENSITY_HPP_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "affectix/lexicon.hpp"
#include "affectix/stats.hpp"
#include "affectix/textproc.hpp"

namespace affectix {

struct SentenceScore {
  double ei = 0.0;  // n_emotional / n_words
  std::size_t n_words = 0;
  std::size_t n_emotional = 0;
};

struct DocumentProfile {
  std::string doc_id;
  std::vector<SentenceScore> series;  // document order, never empty
  double mean_ei = 0.0;
  double std_ei = 0.0;
  StdMode std_mode = StdMode::kPopulation;

  std::size_t TokenCount() const;
};

// Throws Error(kArgument) for a sentence without words.
SentenceScore ScoreSentence(const Sentence& sentence,
                            const EmotionWordList& list);

// Population standard deviation by default: a document's sentences are the
// whole population of that document. Throws Error(kEmptyDocument) when the
// document has no sentences.
DocumentProfile ProfileDocument(const Document& doc,
                                const EmotionWordList& list,
                                StdMode std_mode = StdMode::kPopulation);

struct SuffixRule {
  std::string suffix;
  bool is_adjective = false;
};

// Adjective identification for the adjective-rate control: an explicit word
// set, then the longest matching suffix rule. A suffix only matches when at
// least kMinStem characters precede it.
class AdjectiveLexicon {
 public:
  static constexpr std::size_t kMinStem = 3;

  // Throws Error(kArgument) if either collection is empty.
  AdjectiveLexicon(std::set<std::string, std::less<>> adjectives,
                   std::vector<SuffixRule> suffix_rules);

  // Bundled English defaults.
  static const AdjectiveLexicon& Default();

  // One word per line.
  static std::set<std::string, std::less<>> ParseWordList(std::istream& in);
  // `suffix<TAB>adj|notadj` per line.
  static std::vector<SuffixRule> ParseSuffixRules(std::istream& in);
  static std::set<std::string, std::less<>> DefaultWords();
  static std::vector<SuffixRule> DefaultSuffixRules();

  bool IsAdjective(std::string_view folded_token) const;

  const std::set<std::string, std::less<>>& adjectives() const {
    return adjectives_;
  }
  const std::vector<SuffixRule>& suffix_rules() const { return suffix_rules_; }

 private:
  std::set<std::string, std::less<>> adjectives_;
  std::vector<SuffixRule> suffix_rules_;
};

// Loads overrides; an empty path keeps the bundled default for that part.
AdjectiveLexicon LoadAdjectiveLexicon(const std::filesystem::path& words,
                                      const std::filesystem::path& rules);

// Fraction of the document's tokens flagged as adjectives. Throws
// Error(kEmptyDocument) when the document has no tokens.
double AdjectiveRate(const Document& doc, const AdjectiveLexicon& adjectives);

}  // namespace affectix

#endif  // AFFECTIX_INTENSITY_HPP_
