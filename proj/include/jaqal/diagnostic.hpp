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

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jaqal {

/// Position in a source file. Both fields are 1-based.
///
/// Locations never take part in structural equality of syntax trees, so two
/// programs that differ only in layout compare equal.
struct SourceLoc {
    int line = 1;
    int column = 1;

    friend bool operator==(const SourceLoc&, const SourceLoc&) { return true; }
};

enum class Severity { error, warning };

/// Stable diagnostic codes. Every diagnostic the toolchain produces carries
/// exactly one of these; scripts and the golden corpus match on them.
namespace codes {
// lexical
inline constexpr std::string_view unterminated_comment = "unterminated-comment";
inline constexpr std::string_view illegal_character = "illegal-character";
inline constexpr std::string_view malformed_number = "malformed-number";
inline constexpr std::string_view arithmetic = "arithmetic";
// syntactic
inline constexpr std::string_view unexpected_token = "unexpected-token";
inline constexpr std::string_view expected_separator = "expected-separator";
inline constexpr std::string_view pipe_in_sequential = "pipe-in-sequential";
inline constexpr std::string_view semicolon_in_parallel = "semicolon-in-parallel";
inline constexpr std::string_view newline_before_brace = "newline-before-brace";
inline constexpr std::string_view block_required = "block-required";
inline constexpr std::string_view loop_body_parallel = "loop-body-parallel";
inline constexpr std::string_view keyword_identifier = "keyword-identifier";
inline constexpr std::string_view header_after_body = "header-after-body";
inline constexpr std::string_view header_in_block = "header-in-block";
inline constexpr std::string_view macro_in_block = "macro-in-block";
inline constexpr std::string_view unclosed_block = "unclosed-block";
inline constexpr std::string_view unmatched_close = "unmatched-close";
// semantic
inline constexpr std::string_view missing_register = "missing-register";
inline constexpr std::string_view duplicate_register = "duplicate-register";
inline constexpr std::string_view register_size = "register-size";
inline constexpr std::string_view duplicate_name = "duplicate-name";
inline constexpr std::string_view unknown_name = "unknown-name";
inline constexpr std::string_view map_target_kind = "map-target-kind";
inline constexpr std::string_view index_out_of_bounds = "index-out-of-bounds";
inline constexpr std::string_view slice_step = "slice-step";
inline constexpr std::string_view empty_alias = "empty-alias";
inline constexpr std::string_view missing_index = "missing-index";
inline constexpr std::string_view unexpected_index = "unexpected-index";
inline constexpr std::string_view let_type = "let-type";
inline constexpr std::string_view let_as_qubit = "let-as-qubit";
inline constexpr std::string_view unknown_gate = "unknown-gate";
inline constexpr std::string_view arity = "arity";
inline constexpr std::string_view argument_kind = "argument-kind";
inline constexpr std::string_view param_kind_conflict = "param-kind-conflict";
inline constexpr std::string_view shadowed_name = "shadowed-name";
inline constexpr std::string_view recursive_macro = "recursive-macro";
inline constexpr std::string_view forward_macro_reference = "forward-macro-reference";
inline constexpr std::string_view loop_count = "loop-count";
inline constexpr std::string_view loop_in_parallel = "loop-in-parallel";
inline constexpr std::string_view nested_same_kind = "nested-same-kind";
inline constexpr std::string_view duplicate_qubit = "duplicate-qubit";
inline constexpr std::string_view parallel_conflict = "parallel-conflict";
inline constexpr std::string_view exclusive_gate = "exclusive-gate";
inline constexpr std::string_view global_in_parallel = "global-in-parallel";
// scheduling and execution
inline constexpr std::string_view timing_conflict = "timing-conflict";
inline constexpr std::string_view destroyed_state = "destroyed-state";
inline constexpr std::string_view too_many_qubits = "too-many-qubits";
inline constexpr std::string_view empty_program = "empty-program";
// gate set and output format
inline constexpr std::string_view bad_argument = "bad-argument";
inline constexpr std::string_view manifest_syntax = "manifest-syntax";
inline constexpr std::string_view negative_duration = "negative-duration";
inline constexpr std::string_view invalid_bit = "invalid-bit";
inline constexpr std::string_view ragged_record = "ragged-record";
inline constexpr std::string_view carriage_return = "carriage-return";
inline constexpr std::string_view missing_final_newline = "missing-final-newline";
inline constexpr std::string_view internal_error = "internal-error";
}  // namespace codes

struct Diagnostic {
    Severity severity = Severity::error;
    SourceLoc loc;
    std::string code;
    std::string message;

    bool is_error() const { return severity == Severity::error; }
};

inline bool has_errors(std::span<const Diagnostic> diagnostics) {
    for (const auto& d : diagnostics)
        if (d.is_error())
            return true;
    return false;
}

/// Renders `file:line:col: code: message`; warnings get a `warning:` prefix
/// on the message.
std::string render(const Diagnostic& diagnostic, std::string_view file);

/// Exception for failures outside the diagnostic-list passes (gate-set
/// construction, simulation, output parsing).
class Error : public std::runtime_error {
public:
    Error(std::string_view code, const std::string& message, SourceLoc loc = {})
        : std::runtime_error(message), code_(code), loc_(loc) {}

    const std::string& code() const { return code_; }
    SourceLoc loc() const { return loc_; }

private:
    std::string code_;
    SourceLoc loc_;
};

}  // namespace jaqal
