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

#include "affectix/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <tuple>
#include <utility>

#include "affectix/error.hpp"
#include "unicode.hpp"

namespace affectix {
namespace {

bool HasWhitespace(std::string_view word) {
  for (const auto& cp : unicode::Decode(word)) {
    if (unicode::IsWhitespace(cp.value)) return true;
  }
  return false;
}

double ParseRating(std::string_view field, std::size_t line,
                   std::string_view column) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || field.empty()) {
    throw ParseError(line, "non-numeric " + std::string(column) + " '" +
                               std::string(field) + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(line, "non-finite " + std::string(column) + " '" +
                               std::string(field) + "'");
  }
  return value;
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

AffectLexicon::AffectLexicon(std::vector<DalEntry> entries,
                             std::string source_id,
                             std::size_t duplicates_dropped)
    : entries_(std::move(entries)),
      source_id_(std::move(source_id)),
      duplicates_dropped_(duplicates_dropped) {
  if (entries_.size() < kMinSize) {
    throw Error(ErrorKind::kLexiconTooSmall,
                "lexicon '" + source_id_ + "' has " +
                    std::to_string(entries_.size()) +
                    " entries; at least " + std::to_string(kMinSize) +
                    " are required");
  }
  index_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const DalEntry& e = entries_[i];
    if (e.word.empty() || !unicode::IsValidUtf8(e.word) ||
        HasWhitespace(e.word) || unicode::CaseFold(e.word) != e.word) {
      throw Error(ErrorKind::kArgument, "invalid lexicon word '" + e.word +
                                            "' (must be case-folded, no "
                                            "whitespace)");
    }
    if (!std::isfinite(e.pleasantness) || !std::isfinite(e.activation) ||
        !std::isfinite(e.imagery)) {
      throw Error(ErrorKind::kArgument,
                  "non-finite rating for lexicon word '" + e.word + "'");
    }
    if (!index_.emplace(e.word, i).second) {
      throw Error(ErrorKind::kArgument, "duplicate lexicon word '" + e.word + "'");
    }
  }
}

const DalEntry* AffectLexicon::Find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

AffectLexicon ParseDal(std::istream& in, std::string source_id) {
  std::vector<DalEntry> entries;
  std::unordered_map<std::string, std::size_t> seen;
  std::size_t duplicates = 0;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (line.empty() || line.front() == '#') continue;
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    if (!unicode::IsValidUtf8(line)) throw ParseError(line_no, "invalid UTF-8");
    const auto fields = SplitTabs(line);
    if (fields.size() != 4) {
      throw ParseError(line_no, "expected 4 tab-separated fields, found " +
                                    std::to_string(fields.size()));
    }
    if (fields[0].empty() || HasWhitespace(fields[0])) {
      throw ParseError(line_no, "word field is empty or contains whitespace");
    }
    DalEntry entry;
    entry.word = unicode::CaseFold(fields[0]);
    entry.pleasantness = ParseRating(fields[1], line_no, "pleasantness");
    entry.activation = ParseRating(fields[2], line_no, "activation");
    entry.imagery = ParseRating(fields[3], line_no, "imagery");

    if (seen.contains(entry.word)) {
      ++duplicates;
      continue;
    }
    seen.emplace(entry.word, entries.size());
    entries.push_back(std::move(entry));
  }
  return AffectLexicon(std::move(entries), std::move(source_id), duplicates);
}

AffectLexicon LoadDal(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot open lexicon '" + path.string() + "'");
  }
  return ParseDal(in, path.filename().string());
}

EmotionWordList::EmotionWordList(WordSet negative, WordSet positive,
                                 double lower_frac, double upper_frac,
                                 std::string source_id)
    : negative_(std::move(negative)),
      positive_(std::move(positive)),
      lower_frac_(lower_frac),
      upper_frac_(upper_frac),
      source_id_(std::move(source_id)) {}

std::size_t TailSize(double frac, std::size_t n) {
  const double x = frac * static_cast<double>(n);
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, x)) {
    return static_cast<std::size_t>(nearest);
  }
  return static_cast<std::size_t>(std::ceil(x));
}

EmotionWordList BuildEmotionList(const AffectLexicon& lexicon,
                                 double lower_frac, double upper_frac) {
  auto in_range = [](double f) { return f > 0.0 && f <= 0.5; };
  if (!in_range(lower_frac) || !in_range(upper_frac)) {
    throw Error(ErrorKind::kArgument,
                "tail fractions must lie in (0, 0.5]; got lower=" +
                    std::to_string(lower_frac) +
                    " upper=" + std::to_string(upper_frac));
  }

  std::vector<const DalEntry*> ranked;
  ranked.reserve(lexicon.size());
  for (const auto& e : lexicon.entries()) ranked.push_back(&e);
  std::sort(ranked.begin(), ranked.end(),
            [](const DalEntry* a, const DalEntry* b) {
              return std::tie(a->pleasantness, a->word) <
                     std::tie(b->pleasantness, b->word);
            });

  const std::size_t n = ranked.size();
  const std::size_t n_neg = std::min(TailSize(lower_frac, n), n);
  const std::size_t n_pos = std::min(TailSize(upper_frac, n), n - n_neg);

  EmotionWordList::WordSet negative;
  EmotionWordList::WordSet positive;
  for (std::size_t i = 0; i < n_neg; ++i) negative.insert(ranked[i]->word);
  for (std::size_t i = n - n_pos; i < n; ++i) positive.insert(ranked[i]->word);
  return EmotionWordList(std::move(negative), std::move(positive), lower_frac,
                         upper_frac, lexicon.source_id());
}

}  // namespace affectix
