// Copyright 2026 The Jaqal Toolchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jaqal/gateset.hpp"

namespace jaqal {

/// Contents of a `.expect` sidecar. One keyword per line, `#` comments:
///
///     ACCEPT             the program compiles, schedules and runs
///     REJECT <code>      some stage reports <code> (repeatable)
///     OUTPUT <file>      run output bytes equal <file>, beside the source
///     GATES <n>          primitive count after expansion
///     TOTAL <t>          scheduled duration with default durations
///     SEED <s>           seed for OUTPUT (default 0)
struct Expectation {
    bool accept = true;
    std::vector<std::string> reject_codes;
    std::optional<std::string> output_file;
    std::optional<std::size_t> gates;
    std::optional<double> total;
    std::uint64_t seed = 0;
};

struct CorpusCase {
    std::string name;
    std::filesystem::path source;
    Expectation expect;
};

/// Throws Error(manifest_syntax) with the line on malformed input.
Expectation parse_expectation(std::string_view text);

/// Every `<name>.jaqal` with a `<name>.expect` beside it, sorted by name.
std::vector<CorpusCase> corpus_manifest(const std::filesystem::path& dir);

struct CaseOutcome {
    bool passed = false;
    /// Why it failed, or empty.
    std::string detail;
};

/// Runs the whole pipeline on one case and compares with its expectation.
CaseOutcome check_case(const CorpusCase& c, const GateSet& gates);

/// Whole file as bytes. Throws std::runtime_error when unreadable.
std::string read_file(const std::filesystem::path& path);

}  // namespace jaqal
