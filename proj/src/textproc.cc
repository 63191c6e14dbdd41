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

#include "affectix/textproc.hpp"

#include <fstream>
#include <utility>

#include "affectix/error.hpp"
#include "unicode.hpp"

namespace affectix {
namespace {

using unicode::CodePoint;

constexpr char32_t kEllipsis = U'…';

bool IsTerminal(char32_t c) {
  return c == U'.' || c == U'!' || c == U'?' || c == kEllipsis;
}

bool IsCloser(char32_t c) {
  switch (c) {
    case U'"': case U'\'': case U')': case U']': case U'}':
    case U'’': case U'”': case U'»':
      return true;
    default:
      return false;
  }
}

bool IsApostrophe(char32_t c) {
  return c == U'\'' || c == U'’' || c == U'ʼ';
}

bool IsHyphen(char32_t c) {
  return c == U'-' || c == U'‐' || c == U'‑';
}

bool IsJoiner(char32_t c) { return IsApostrophe(c) || IsHyphen(c); }

bool IsWordPart(char32_t c) {
  return unicode::IsLetter(c) || unicode::IsCombiningMark(c);
}

// Decides whether the single period at cps[i] is an abbreviation or decimal
// point rather than a sentence end.
bool SuppressPeriod(const std::vector<CodePoint>& cps, std::size_t i,
                    std::string_view text, const Abbreviations& abbreviations) {
  std::size_t k = i;
  while (k > 0 && (IsWordPart(cps[k - 1].value) || IsJoiner(cps[k - 1].value))) {
    --k;
  }
  while (k < i && IsJoiner(cps[k].value)) ++k;

  if (k == i) {
    return i > 0 && i + 1 < cps.size() && unicode::IsDigit(cps[i - 1].value) &&
           unicode::IsDigit(cps[i + 1].value);
  }

  std::size_t letters = 0;
  for (std::size_t j = k; j < i; ++j) {
    if (unicode::IsLetter(cps[j].value)) ++letters;
  }
  if (letters == 1) return true;

  const std::string_view word =
      text.substr(cps[k].offset, cps[i].offset - cps[k].offset);
  return abbreviations.Contains(NormalizeToken(word));
}

constexpr const char* kDefaultAbbreviations[] = {
    "dr",   "mr",   "mrs",  "ms",   "prof", "sr",   "jr",    "st",
    "vs",   "etc",  "inc",  "ltd",  "jan",  "feb",  "mar",   "apr",
    "jun",  "jul",  "aug",  "sep",  "sept", "oct",  "nov",   "dec",
    "fig",  "vol",  "approx", "dept", "mt", "gen",  "col",   "lt",
    "sgt",  "capt", "rev",  "hon",  "gov",  "pres", "ave",   "cf",
};

}  // namespace

std::size_t Document::TokenCount() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.tokens.size();
  return n;
}

const Abbreviations& Abbreviations::Default() {
  static const Abbreviations kDefault = [] {
    std::set<std::string, std::less<>> words;
    for (const char* w : kDefaultAbbreviations) words.emplace(w);
    return Abbreviations(std::move(words));
  }();
  return kDefault;
}

Abbreviations Abbreviations::Parse(std::istream& in) {
  std::set<std::string, std::less<>> words;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view w = line;
    while (!w.empty() && (w.back() == '\r' || w.back() == ' ' ||
                          w.back() == '\t' || w.back() == '.')) {
      w.remove_suffix(1);
    }
    while (!w.empty() && (w.front() == ' ' || w.front() == '\t')) {
      w.remove_prefix(1);
    }
    if (w.empty() || w.front() == '#') continue;
    if (!unicode::IsValidUtf8(w)) throw ParseError(line_no, "invalid UTF-8");
    words.insert(NormalizeToken(w));
  }
  return Abbreviations(std::move(words));
}

Abbreviations Abbreviations::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIo,
                "cannot open abbreviation list '" + path.string() + "'");
  }
  return Parse(in);
}

std::vector<ByteSpan> SplitSentences(std::string_view text,
                                     const Abbreviations& abbreviations) {
  const std::vector<CodePoint> cps = unicode::Decode(text);
  const std::size_t n = cps.size();
  std::vector<ByteSpan> spans;

  auto emit = [&](std::size_t first, std::size_t last) {
    while (first < last && unicode::IsWhitespace(cps[first].value)) ++first;
    while (last > first && unicode::IsWhitespace(cps[last - 1].value)) --last;
    if (first < last) {
      spans.push_back({cps[first].offset,
                       cps[last - 1].offset + cps[last - 1].length});
    }
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < n) {
    const char32_t c = cps[i].value;
    if (c == U'\n') {
      std::size_t j = i;
      int newlines = 0;
      while (j < n && unicode::IsWhitespace(cps[j].value)) {
        if (cps[j].value == U'\n') ++newlines;
        ++j;
      }
      if (newlines >= 2) {
        emit(start, i);
        start = j;
      }
      i = j;
      continue;
    }
    if (IsTerminal(c)) {
      std::size_t j = i;
      while (j < n && IsTerminal(cps[j].value)) ++j;
      const bool lone_period = (j - i == 1) && c == U'.';
      if (!lone_period || !SuppressPeriod(cps, i, text, abbreviations)) {
        while (j < n && IsCloser(cps[j].value)) ++j;
        emit(start, j);
        start = j;
      }
      i = j;
      continue;
    }
    ++i;
  }
  emit(start, n);
  return spans;
}

std::string NormalizeToken(std::string_view token) {
  const std::string folded = unicode::CaseFold(token);
  std::string out;
  out.reserve(folded.size());
  for (const auto& cp : unicode::Decode(folded)) {
    if (IsApostrophe(cp.value)) {
      out.push_back('\'');
    } else if (IsHyphen(cp.value)) {
      out.push_back('-');
    } else {
      out.append(folded, cp.offset, cp.length);
    }
  }
  return out;
}

std::vector<std::string> Tokenize(std::string_view text) {
  const std::vector<CodePoint> cps = unicode::Decode(text);
  const std::size_t n = cps.size();
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < n) {
    if (!unicode::IsLetter(cps[i].value)) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < n) {
      if (IsWordPart(cps[j].value)) {
        ++j;
      } else if (j + 1 < n && IsJoiner(cps[j].value) &&
                 unicode::IsLetter(cps[j + 1].value)) {
        j += 2;
      } else {
        break;
      }
    }
    const std::size_t end = cps[j - 1].offset + cps[j - 1].length;
    tokens.push_back(
        NormalizeToken(text.substr(cps[i].offset, end - cps[i].offset)));
    i = j;
  }
  return tokens;
}

Document SegmentDocument(std::string doc_id, std::string_view text,
                         const Abbreviations& abbreviations) {
  Document doc;
  doc.doc_id = std::move(doc_id);
  doc.source_chars = unicode::Decode(text).size();
  for (const ByteSpan& span : SplitSentences(text, abbreviations)) {
    Sentence s;
    s.tokens = Tokenize(text.substr(span.begin, span.end - span.begin));
    if (s.tokens.empty()) continue;
    s.raw_span = span;
    doc.sentences.push_back(std::move(s));
  }
  return doc;
}

}  // namespace affectix
