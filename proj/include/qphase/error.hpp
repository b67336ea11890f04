// Copyright 2026 The qphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qphase {

/// Broad failure classes. The CLI maps each one to a distinct exit code and
/// prints the name, so scripted callers can branch on it.
enum class ErrorCategory {
    invalid_dimension,
    invalid_parameter,
    invalid_state,
    degenerate_input,
    resource,
    empty_region,
    insufficient_data,
    parse,
    invalid_data,
    io,
    invariant_violation,
};

std::string_view category_name(ErrorCategory category) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorCategory category, const std::string &message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

  private:
    ErrorCategory category_;
};

/// Malformed input file. `offset` is the byte position where parsing stopped.
class ParseError : public Error {
  public:
    ParseError(const std::string &message, std::size_t offset)
        : Error(ErrorCategory::parse, message + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};

[[noreturn]] inline void fail(ErrorCategory category, const std::string &message) {
    throw Error(category, message);
}

}  // namespace qphase
