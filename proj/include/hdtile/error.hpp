// Copyright 2026 The hdtile Authors
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

namespace hdtile {

// Precondition violation on a public entry point (bad dimensions, unknown
// preset, mismatched buffers).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or truncated PPM/PGM input.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File system failure while reading inputs or writing outputs.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A token stream that does not follow the global/separator/local grammar.
// `index()` is the position of the first offending token.
class LayoutError : public std::runtime_error {
 public:
  LayoutError(std::size_t index, const std::string& what)
      : std::runtime_error("token " + std::to_string(index) + ": " + what),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace hdtile
