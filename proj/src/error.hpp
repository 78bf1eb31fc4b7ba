// Copyright (c) 2026 the siggb developers
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

namespace sgb {

// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Undefined operation on a value (lm of zero, signature of zero, index
// out of range, ...).
class domain_error : public error {
public:
  explicit domain_error(const std::string& msg) : error(msg) {}
};

// Input text could not be parsed; carries a 1-based source position.
class parse_error : public error {
public:
  parse_error(const std::string& msg, int line, int column)
      : error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

// Inputs that violate a precondition of a computation (corrupted basis
// handed to a reconstruction, inconsistent (G, H) pair, ...).
class inconsistent_input : public error {
public:
  explicit inconsistent_input(const std::string& msg) : error(msg) {}
};

// A violated internal invariant; indicates a bug, never a user error.
class internal_error : public error {
public:
  explicit internal_error(const std::string& msg) : error(msg) {}
};

#define SGB_CHECK(cond, msg)                                                   \
  do {                                                                         \
    if (!(cond)) throw ::sgb::internal_error(msg);                             \
  } while (false)

} // namespace sgb
