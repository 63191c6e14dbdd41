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

// Affect dictionary (DAL-format) parsing and the derived high-emotion word
// lists.
//
// DAL-TSV format: UTF-8, one entry per line with exactly four TAB-separated
// fields `word<TAB>pleasantness<TAB>activation<TAB>imagery`. Lines starting
// with '#' and blank lines are ignored; there is no header row.

#ifndef AFFECTIX_LEXICON_HPP_
#define AFFECTIX_LEXICON_HPP_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace affectix {

struct DalEntry {
  std::string word;  // case-folded, no whitespace
  double pleasantness = 0.0;
  double activation = 0.0;
  double imagery = 0.0;
};

// Immutable word -> ratings map. Entries keep file order.
class AffectLexicon {
 public:
  static constexpr std::size_t kMinSize = 10;

  // Throws Error(kLexiconTooSmall) below kMinSize entries and
  // Error(kArgument) on duplicate or malformed words.
  AffectLexicon(std::vector<DalEntry> entries, std::string source_id,
                std::size_t duplicates_dropped = 0);

  const DalEntry* Find(std::string_view word) const;
  bool Contains(std::string_view word) const { return Find(word) != nullptr; }

  std::size_t size() const { return entries_.size(); }
  const std::vector<DalEntry>& entries() const { return entries_; }
  const std::string& source_id() const { return source_id_; }
  // Lines dropped because their case-folded word was already present.
  std::size_t duplicates_dropped() const { return duplicates_dropped_; }

 private:
  std::vector<DalEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  std::string source_id_;
  std::size_t duplicates_dropped_ = 0;
};

AffectLexicon ParseDal(std::istream& in, std::string source_id);
AffectLexicon LoadDal(const std::filesystem::path& path);

// The high-emotion vocabulary: the bottom `lower_frac` and top `upper_frac`
// of the lexicon ranked by pleasantness.
class EmotionWordList {
 public:
  using WordSet = std::set<std::string, std::less<>>;

  EmotionWordList(WordSet negative, WordSet positive, double lower_frac,
                  double upper_frac, std::string source_id);

  // The dal+ / dal- indicator: 1 when the (already case-folded) word sits in
  // either tail, else 0. The tails are disjoint, so the sum never exceeds 1.
  int IsEmotional(std::string_view word) const {
    return positive_.contains(word) || negative_.contains(word) ? 1 : 0;
  }

  const WordSet& positive() const { return positive_; }
  const WordSet& negative() const { return negative_; }
  double lower_frac() const { return lower_frac_; }
  double upper_frac() const { return upper_frac_; }
  const std::string& source_id() const { return source_id_; }

 private:
  WordSet negative_;
  WordSet positive_;
  double lower_frac_;
  double upper_frac_;
  std::string source_id_;
};

inline constexpr double kDefaultTailFraction = 0.2;

// Number of words a tail fraction selects from n entries: ceil(frac * n),
// where a product within 1e-9 of an integer counts as that integer.
std::size_t TailSize(double frac, std::size_t n);

// Ranks entries by (pleasantness, word) ascending. negative takes the first
// TailSize(lower_frac) words, positive the last TailSize(upper_frac) words;
// when the two would overlap (odd n at 0.5/0.5) positive is truncated so the
// tails stay disjoint.
//
// Throws Error(kArgument) unless 0 < frac <= 0.5 for both fractions.
EmotionWordList BuildEmotionList(const AffectLexicon& lexicon,
                                 double lower_frac = kDefaultTailFraction,
                                 double upper_frac = kDefaultTailFraction);

}  // namespace affectix

#endif  // AFFECTIX_LEXICON_HPP_
