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

#ifndef AFFECTIX_ERROR_HPP_
#define AFFECTIX_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace affectix {

enum class ErrorKind {
  kParse,
  kArgument,
  kLexiconTooSmall,
  kEmptyDocument,
  kDegenerateTest,
  kNumerical,
  kUndefinedMetric,
  kNotImplemented,
  kManifest,
  kIo,
};

std::string_view ErrorKindName(ErrorKind kind);

// All library failures are reported through this type; callers dispatch on
// kind() (the CLI maps kinds onto exit codes).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// A malformed input line. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace affectix

#endif  // AFFECTIX_ERROR_HPP_
