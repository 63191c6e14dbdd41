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

#include <fstream>
#include <utility>

#include "affectix/error.hpp"
#include "unicode.hpp"

namespace affectix {
namespace {

constexpr const char* kDefaultAdjectives[] = {
    "able", "absent", "active", "afraid", "alive", "alone", "amazing",
    "ancient", "angry", "anxious", "aware", "awful", "bad", "bare", "basic",
    "beautiful", "big", "bitter", "black", "blank", "blind", "blue", "bold",
    "brave", "brief", "bright", "brilliant", "broad", "broken", "brown",
    "busy", "calm", "central", "certain", "cheap", "clean", "clear", "close",
    "cold", "common", "complete", "complex", "cool", "crazy", "cruel",
    "current", "cute", "dark", "dead", "dear", "deep", "different",
    "difficult", "dirty", "distant", "dry", "dull", "eager", "early", "easy",
    "eastern", "empty", "entire", "equal", "evil", "exact", "fair", "false",
    "familiar", "famous", "far", "fast", "fat", "federal", "fierce", "final",
    "fine", "firm", "flat", "foreign", "formal", "former", "free", "fresh",
    "full", "funny", "general", "gentle", "giant", "glad", "golden", "good",
    "grand", "gray", "great", "green", "grey", "guilty", "happy", "hard",
    "harsh", "heavy", "high", "holy", "honest", "hot", "huge", "human",
    "humble", "hungry", "ill", "important", "independent", "inner",
    "internal", "joyful", "kind", "large", "late", "lazy", "little", "local",
    "lonely", "long", "loose", "loud", "low", "lucky", "mad", "main", "major",
    "medical", "mild", "minor", "modern", "national", "natural", "narrow",
    "near", "neat", "new", "nice", "noble", "normal", "northern", "odd",
    "official", "old", "open", "original", "other", "pale", "past", "perfect",
    "plain", "pleasant", "polite", "political", "poor", "popular", "positive",
    "possible", "pretty", "previous", "private", "proper", "proud", "public",
    "pure", "quick", "quiet", "rapid", "rare", "raw", "ready", "real",
    "recent", "red", "regional", "regular", "rich", "right", "rough",
    "round", "royal", "rude", "sad", "safe", "same", "scared", "secret",
    "serious", "severe", "shallow", "sharp", "short", "shy", "sick", "silent",
    "silly", "similar", "simple", "single", "slow", "small", "smart", "soft",
    "solid", "sorry", "southern", "special", "square", "steep", "still",
    "strange", "strict", "strong", "stupid", "sudden", "sure", "sweet",
    "tall", "tender", "terrible", "thick", "thin", "tight", "tiny", "tired",
    "total", "tough", "true", "typical", "ugly", "unhappy", "upper", "urban",
    "usual", "vast", "violent", "visible", "warm", "weak", "wealthy",
    "western", "wet", "white", "whole", "wide", "wild", "wise", "wonderful",
    "wooden", "wrong", "yellow", "young",
};

const SuffixRule kDefaultSuffixRules[] = {
    {"ous", true},   {"ful", true},   {"less", true}, {"able", true},
    {"ible", true},  {"ive", true},   {"ical", true}, {"ish", true},
    {"ic", true},    {"ness", false}, {"ment", false}, {"ly", false},
    {"ity", false},  {"tion", false}, {"sion", false}, {"ship", false},
};

std::string TrimLine(std::string line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                           line.back() == '\t')) {
    line.pop_back();
  }
  std::size_t first = line.find_first_not_of(" \t");
  return first == std::string::npos ? std::string() : line.substr(first);
}

template <typename Parser>
auto LoadWith(const std::filesystem::path& path, Parser parse) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path.string() + "'");
  return parse(in);
}

}  // namespace

std::size_t DocumentProfile::TokenCount() const {
  std::size_t n = 0;
  for (const auto& s : series) n += s.n_words;
  return n;
}

SentenceScore ScoreSentence(const Sentence& sentence,
                            const EmotionWordList& list) {
  if (sentence.tokens.empty()) {
    throw Error(ErrorKind::kArgument, "cannot score a sentence without words");
  }
  SentenceScore score;
  score.n_words = sentence.tokens.size();
  for (const auto& token : sentence.tokens) {
    score.n_emotional += static_cast<std::size_t>(list.IsEmotional(token));
  }
  score.ei = static_cast<double>(score.n_emotional) /
             static_cast<double>(score.n_words);
  return score;
}

DocumentProfile ProfileDocument(const Document& doc,
                                const EmotionWordList& list,
                                StdMode std_mode) {
  if (doc.sentences.empty()) {
    throw Error(ErrorKind::kEmptyDocument,
                "document '" + doc.doc_id + "' has no sentences");
  }
  DocumentProfile profile;
  profile.doc_id = doc.doc_id;
  profile.std_mode = std_mode;
  std::vector<double> ei;
  ei.reserve(doc.sentences.size());
  for (const auto& s : doc.sentences) {
    profile.series.push_back(ScoreSentence(s, list));
    ei.push_back(profile.series.back().ei);
  }
  profile.mean_ei = Mean(ei);
  profile.std_ei = StandardDeviation(ei, std_mode);
  return profile;
}

AdjectiveLexicon::AdjectiveLexicon(std::set<std::string, std::less<>> adjectives,
                                   std::vector<SuffixRule> suffix_rules)
    : adjectives_(std::move(adjectives)), suffix_rules_(std::move(suffix_rules)) {
  if (adjectives_.empty()) {
    throw Error(ErrorKind::kArgument, "adjective list is empty");
  }
  if (suffix_rules_.empty()) {
    throw Error(ErrorKind::kArgument, "suffix rule list is empty");
  }
}

std::set<std::string, std::less<>> AdjectiveLexicon::DefaultWords() {
  std::set<std::string, std::less<>> words;
  for (const char* w : kDefaultAdjectives) words.emplace(w);
  return words;
}

std::vector<SuffixRule> AdjectiveLexicon::DefaultSuffixRules() {
  return {std::begin(kDefaultSuffixRules), std::end(kDefaultSuffixRules)};
}

const AdjectiveLexicon& AdjectiveLexicon::Default() {
  static const AdjectiveLexicon kDefault(DefaultWords(), DefaultSuffixRules());
  return kDefault;
}

std::set<std::string, std::less<>> AdjectiveLexicon::ParseWordList(
    std::istream& in) {
  std::set<std::string, std::less<>> words;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = TrimLine(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!unicode::IsValidUtf8(line)) throw ParseError(line_no, "invalid UTF-8");
    words.insert(NormalizeToken(line));
  }
  return words;
}

std::vector<SuffixRule> AdjectiveLexicon::ParseSuffixRules(std::istream& in) {
  std::vector<SuffixRule> rules;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = TrimLine(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError(line_no, "expected 'suffix<TAB>adj|notadj'");
    }
    const std::string flag = line.substr(tab + 1);
    if (flag != "adj" && flag != "notadj") {
      throw ParseError(line_no, "flag must be 'adj' or 'notadj', got '" +
                                    flag + "'");
    }
    if (!unicode::IsValidUtf8(line)) throw ParseError(line_no, "invalid UTF-8");
    rules.push_back({NormalizeToken(line.substr(0, tab)), flag == "adj"});
  }
  return rules;
}

bool AdjectiveLexicon::IsAdjective(std::string_view token) const {
  if (adjectives_.contains(token)) return true;
  const SuffixRule* best = nullptr;
  for (const auto& rule : suffix_rules_) {
    if (token.size() < rule.suffix.size() + kMinStem) continue;
    if (!token.ends_with(rule.suffix)) continue;
    if (best == nullptr || rule.suffix.size() > best->suffix.size()) {
      best = &rule;
    }
  }
  return best != nullptr && best->is_adjective;
}

AdjectiveLexicon LoadAdjectiveLexicon(const std::filesystem::path& words,
                                      const std::filesystem::path& rules) {
  auto word_set = words.empty()
                      ? AdjectiveLexicon::DefaultWords()
                      : LoadWith(words, AdjectiveLexicon::ParseWordList);
  auto rule_list = rules.empty()
                       ? AdjectiveLexicon::DefaultSuffixRules()
                       : LoadWith(rules, AdjectiveLexicon::ParseSuffixRules);
  return AdjectiveLexicon(std::move(word_set), std::move(rule_list));
}

double AdjectiveRate(const Document& doc, const AdjectiveLexicon& adjectives) {
  std::size_t total = 0;
  std::size_t flagged = 0;
  for (const auto& s : doc.sentences) {
    for (const auto& token : s.tokens) {
      ++total;
      if (adjectives.IsAdjective(token)) ++flagged;
    }
  }
  if (total == 0) {
    throw Error(ErrorKind::kEmptyDocument,
                "document '" + doc.doc_id + "' has no words");
  }
  return static_cast<double>(flagged) / static_cast<double>(total);
}

}  // namespace affectix
