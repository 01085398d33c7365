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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace jaqal::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
    exit_ok = 0,
    /// Diagnostics in the program, schedule conflicts or runtime errors.
    exit_program_error = 1,
    /// Unreadable or unwritable files and bad command lines.
    exit_environment_error = 2,
};

struct CommandOptions {
    std::string input;
    /// "-" writes to standard output.
    std::optional<std::string> output;
    std::optional<std::string> durations;
    std::uint64_t seed = 0;
    bool quantize = false;
    bool probabilities = false;
};

int cmd_check(const CommandOptions& options, std::ostream& err);
int cmd_expand(const CommandOptions& options, std::ostream& out, std::ostream& err);
int cmd_schedule(const CommandOptions& options, std::ostream& out, std::ostream& err);
/// Writes to `<input stem>.out` beside the input unless an output is given.
int cmd_run(const CommandOptions& options, std::ostream& out, std::ostream& err);

/// Parses the command line and dispatches.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jaqal::cli
