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

#include "affectix/error.hpp"

namespace affectix {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kArgument: return "argument error";
    case ErrorKind::kLexiconTooSmall: return "lexicon too small";
    case ErrorKind::kEmptyDocument: return "empty document";
    case ErrorKind::kDegenerateTest: return "degenerate test";
    case ErrorKind::kNumerical: return "numerical error";
    case ErrorKind::kUndefinedMetric: return "undefined metric";
    case ErrorKind::kNotImplemented: return "not implemented";
    case ErrorKind::kManifest: return "manifest error";
    case ErrorKind::kIo: return "i/o error";
  }
  return "error";
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(ErrorKind::kParse,
            "line " + std::to_string(line) + ": " + message),
      line_(line) {}

}  // namespace affectix
