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

#include "qphase/log.hpp"

#include <iostream>
#include <mutex>
#include <string>

#include "qphase/error.hpp"

namespace qphase {
namespace {

std::mutex g_log_mutex;
LogSink g_sink;

void emit(std::string_view level, std::string_view message) {
    std::lock_guard lock(g_log_mutex);
    std::string line = std::string(level) + ": " + std::string(message);
    if (g_sink) {
        g_sink(line);
    } else {
        std::cerr << line << '\n';
    }
}

}  // namespace

void log_warning(std::string_view message) { emit("warning", message); }
void log_info(std::string_view message) { emit("info", message); }

LogSink set_log_sink(LogSink sink) {
    std::lock_guard lock(g_log_mutex);
    std::swap(g_sink, sink);
    return sink;
}

std::string_view category_name(ErrorCategory category) noexcept {
    switch (category) {
        case ErrorCategory::invalid_dimension: return "invalid-dimension";
        case ErrorCategory::invalid_parameter: return "invalid-parameter";
        case ErrorCategory::invalid_state: return "invalid-state";
        case ErrorCategory::degenerate_input: return "degenerate-input";
        case ErrorCategory::resource: return "resource";
        case ErrorCategory::empty_region: return "empty-region";
        case ErrorCategory::insufficient_data: return "insufficient-data";
        case ErrorCategory::parse: return "parse";
        case ErrorCategory::invalid_data: return "invalid-data";
        case ErrorCategory::io: return "io";
        case ErrorCategory::invariant_violation: return "invariant-violation";
    }
    return "unknown";
}

}  // namespace qphase
