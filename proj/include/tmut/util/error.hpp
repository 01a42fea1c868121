// Copyright 2026 The tmut Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tmut {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An error tied to a source position (1-based line and column).
class SourceError : public Error {
 public:
  SourceError(const std::string& what, std::size_t line, std::size_t col)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + what),
        line_(line),
        col_(col) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

class LexError : public SourceError {
 public:
  using SourceError::SourceError;
};

class SyntaxError : public SourceError {
 public:
  using SourceError::SourceError;
};

class TypeCheckError : public SourceError {
 public:
  using SourceError::SourceError;
};

}  // namespace tmut
