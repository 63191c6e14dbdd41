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

// Minimal RFC 4180 reading and writing.

#ifndef AFFECTIX_CSV_HPP_
#define AFFECTIX_CSV_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace affectix::csv {

using Record = std::vector<std::string>;

// Accepts CRLF or LF record separators and quoted fields with embedded
// separators, quotes ("") and line breaks. Blank lines are skipped. Throws
// ParseError on an unterminated quote or stray text after a closing quote.
std::vector<Record> Parse(std::string_view text);

// Quotes the field when it holds a comma, quote, CR or LF.
std::string Escape(std::string_view field);

// One record terminated by CRLF.
std::string FormatRecord(std::span<const std::string> fields);

}  // namespace affectix::csv

#endif  // AFFECTIX_CSV_HPP_
