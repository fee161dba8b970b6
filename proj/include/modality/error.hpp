// Copyright 2026 The Modality Toolkit Authors.
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modality {

// Malformed input data: corpus files, manifests, lexicons, tag sequences.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A CoNLL parse failure carrying the 1-based line number of the offending row.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : InputError("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Strict decoding rejected a tag sequence at a given position.
class DecodeError : public InputError {
 public:
  DecodeError(std::size_t index, const std::string& message)
      : InputError("tag " + std::to_string(index) + ": " + message),
        index_(index) {}

  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Invalid experiment configuration (unknown scheme names, bad flags).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace modality
