/*
 * Copyright 2026 The pitwo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PITWO_ERROR_HPP_
#define PITWO_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace pitwo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed concrete syntax. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A state-space exploration produced more states than allowed.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Diagram interfaces do not line up (composition, currying, plugging).
class InterfaceMismatch : public Error {
 public:
  using Error::Error;
};

/// A redex that does not describe a valid firing of the given term/diagram.
class StaleRedex : public Error {
 public:
  using Error::Error;
};

}  // namespace pitwo

#endif  // PITWO_ERROR_HPP_
