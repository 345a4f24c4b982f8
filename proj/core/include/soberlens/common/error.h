// Copyright 2026 The SoberLens Authors.
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

#ifndef SOBERLENS_COMMON_ERROR_H_
#define SOBERLENS_COMMON_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace soberlens {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input (bad JSON line, bad lexicon line, bad model file).
class ParseError : public Error {
 public:
  ParseError(const std::string &source, std::size_t line,
             const std::string &what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that cannot be processed: empty classes, duplicate ids,
// non-finite feature values.
class DataError : public Error {
 public:
  using Error::Error;
};

// Invalid parameters or lexicon configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A model or registry that does not match what it is applied to.
class ModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace soberlens

#endif  // SOBERLENS_COMMON_ERROR_H_
