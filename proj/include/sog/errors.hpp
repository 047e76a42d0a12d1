// Copyright 2026 The state-o-gram Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace sog {

/// Precondition violated by a caller-supplied value (index out of range,
/// malformed mask, unnormalized state, ...).
class domain_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Phase requested for an amplitude below the vanish threshold.
class undefined_phase_error : public domain_error {
  public:
    using domain_error::domain_error;
};

/// A request that would exceed a size guard (dense oracle, qubit cap).
class resource_error : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// A structurally well-formed circuit that violates a circuit invariant.
/// `column` and `qubit` locate the offence when it has a location.
class validation_error : public std::invalid_argument {
  public:
    validation_error(const std::string &what,
                     std::optional<std::size_t> column = std::nullopt,
                     std::optional<std::size_t> qubit = std::nullopt)
        : std::invalid_argument(what), column_(column), qubit_(qubit) {}

    [[nodiscard]] std::optional<std::size_t> column() const { return column_; }
    [[nodiscard]] std::optional<std::size_t> qubit() const { return qubit_; }

  private:
    std::optional<std::size_t> column_;
    std::optional<std::size_t> qubit_;
};

/// Malformed circuit text. Positions are 1-based.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string &what, std::size_t line, std::size_t column)
        : std::runtime_error(what), line_(line), column_(column) {}

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace sog
