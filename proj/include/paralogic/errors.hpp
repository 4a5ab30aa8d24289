// Copyright 2026 The Paralogic Authors. All Rights Reserved.
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

#ifndef PARALOGIC_ERRORS_HPP_
#define PARALOGIC_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace paralogic {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed KB / concept / proposition text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string found,
             std::vector<std::string> expected);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& found() const { return found_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string found_;
  std::vector<std::string> expected_;
};

/// An identifier has no denotation in the interpretation at hand.
class UnknownIdentifierError : public Error {
 public:
  explicit UnknownIdentifierError(const std::string& what_kind,
                                  const std::string& name)
      : Error("unknown " + what_kind + " '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// The brute-force oracle only handles quantifier-free input.
class OracleInapplicableError : public Error {
 public:
  using Error::Error;
};

/// A node, argument or model-space budget was exhausted.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

/// The argumentation framework has no stable extension.
class NoStableExtensionError : public Error {
 public:
  using Error::Error;
};

}  // namespace paralogic

#endif  // PARALOGIC_ERRORS_HPP_
