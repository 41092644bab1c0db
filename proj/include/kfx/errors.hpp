// Copyright 2026 The kfx Authors
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

#include <stdexcept>
#include <string>

namespace kfx {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list text.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Structurally unsuitable graph: disconnected, not unicyclic, wrong engine.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

// Parameters outside the documented range of an operation.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Enumeration would exceed the configured class cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace kfx
