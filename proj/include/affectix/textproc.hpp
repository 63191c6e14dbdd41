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

// Rule-based sentence segmentation and word tokenization.
//
// A sentence ends at '.', '!', '?', U+2026 (a run of these counts as one
// terminal, followed by any closing quotes or brackets) or at a run of
// whitespace holding two or more newlines. A lone period does not end a
// sentence when the word before it is a known abbreviation, a single letter
// or when it sits between two digits.
//
// A word is a maximal run of letters (with combining marks), where an
// apostrophe or hyphen between two letters stays inside the word. Words are
// case-folded; digits and punctuation never form words.

#ifndef AFFECTIX_TEXTPROC_HPP_
#define AFFECTIX_TEXTPROC_HPP_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace affectix {

// Half-open byte range [begin, end) into the source text.
struct ByteSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const ByteSpan&, const ByteSpan&) = default;
};

struct Sentence {
  std::vector<std::string> tokens;  // never empty once stored in a Document
  ByteSpan raw_span;
};

struct Document {
  std::string doc_id;
  std::vector<Sentence> sentences;
  std::size_t source_chars = 0;  // code points in the source text

  std::size_t TokenCount() const;
};

// Words after which a period does not end a sentence. Stored case-folded and
// without the trailing period.
class Abbreviations {
 public:
  Abbreviations() = default;
  explicit Abbreviations(std::set<std::string, std::less<>> words)
      : words_(std::move(words)) {}

  // The bundled English list (titles, months, "etc", "vs", ...).
  static const Abbreviations& Default();
  // One abbreviation per line; '#' comments and blank lines are skipped.
  static Abbreviations Parse(std::istream& in);
  static Abbreviations Load(const std::filesystem::path& path);

  bool Contains(std::string_view folded_word) const {
    return words_.contains(folded_word);
  }
  std::size_t size() const { return words_.size(); }

 private:
  std::set<std::string, std::less<>> words_;
};

// Sentence spans in source order, trimmed of surrounding whitespace. Spans
// may hold no words (e.g. "!!!"); SegmentDocument drops those.
// Throws Error(kArgument) on invalid UTF-8.
std::vector<ByteSpan> SplitSentences(
    std::string_view text,
    const Abbreviations& abbreviations = Abbreviations::Default());

std::vector<std::string> Tokenize(std::string_view text);

// Case-folds and maps typographic apostrophes/hyphens onto ASCII ones.
// Idempotent.
std::string NormalizeToken(std::string_view token);

Document SegmentDocument(
    std::string doc_id, std::string_view text,
    const Abbreviations& abbreviations = Abbreviations::Default());

}  // namespace affectix

#endif  // AFFECTIX_TEXTPROC_HPP_
