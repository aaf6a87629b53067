// Copyright 2026 The painfacets Authors.
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

#ifndef PAINFACETS_ERROR_H_
#define PAINFACETS_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace painfacets {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition (bad fraction, k too large, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A line-oriented input failed to parse. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::string what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NotInVocabulary : public Error {
 public:
  explicit NotInVocabulary(const std::string& word)
      : Error("word not in vocabulary: '" + word + "'"), word_(word) {}
  const std::string& word() const { return word_; }

 private:
  std::string word_;
};

// The classifier could not produce a prediction (adapter down, I/O error).
class PredictionUnavailable : public Error {
 public:
  using Error::Error;
};

// The adapter answered, but the answer broke the wire contract.
class ProtocolViolation : public PredictionUnavailable {
 public:
  using PredictionUnavailable::PredictionUnavailable;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace painfacets

#endif  // PAINFACETS_ERROR_H_
