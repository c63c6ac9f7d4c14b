// Copyright 2026 The hoareopt Authors
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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace hoareopt {

/// Qubit identifier. Unique per allocation event within one circuit.
using QubitId = std::uint32_t;

/// SSA boolean variable: the value of `qubit` after its `version`-th update.
struct Var {
    QubitId qubit = 0;
    std::uint32_t version = 0;

    auto operator<=>(const Var&) const = default;
};

struct VarHash {
    std::size_t operator()(const Var& v) const noexcept {
        return std::hash<std::uint64_t>()((std::uint64_t(v.qubit) << 32) | v.version);
    }
};

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed circuit or condition text. `line` is 1-based, 0 if unknown.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
        : Error(what), line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

/// A circuit that violates an IR invariant where a valid one is required.
class InvalidCircuit : public Error {
  public:
    using Error::Error;
};

/// A simulation or enumeration would exceed its configured size budget.
class BudgetExceeded : public Error {
  public:
    using Error::Error;
};

}  // namespace hoareopt
