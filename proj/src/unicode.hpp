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

// UTF-8 decoding and character classification shared by the lexicon and
// the text processor. Backed by ICU.

#ifndef AFFECTIX_SRC_UNICODE_HPP_
#define AFFECTIX_SRC_UNICODE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace affectix::unicode {

struct CodePoint {
  char32_t value;
  std::size_t offset;  // byte offset into the source string
  std::size_t length;  // encoded length in bytes
};

bool IsValidUtf8(std::string_view text);

// Throws Error(kArgument) on malformed input.
std::vector<CodePoint> Decode(std::string_view text);

bool IsLetter(char32_t c);
bool IsCombiningMark(char32_t c);
bool IsDigit(char32_t c);
bool IsWhitespace(char32_t c);

// Full Unicode case folding (e.g. "Straße" -> "strasse").
std::string CaseFold(std::string_view text);

void AppendUtf8(std::string& out, char32_t c);

}  // namespace affectix::unicode

#endif  // AFFECTIX_SRC_UNICODE_HPP_
