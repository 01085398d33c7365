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
#include <string>
#include <string_view>
#include <vector>

#include "jaqal/diagnostic.hpp"

namespace jaqal {

enum class TokenKind {
    identifier,
    integer,
    real,
    lbrace,     // {
    rbrace,     // }
    langle,     // <
    rangle,     // >
    lbracket,   // [
    rbracket,   // ]
    colon,      // :
    semicolon,  // ;
    pipe,       // |
    newline,
    end,
};

struct Token {
    TokenKind kind = TokenKind::end;
    std::string text;
    SourceLoc loc;
    std::int64_t int_value = 0;
    double real_value = 0.0;
};

struct LexResult {
    std::vector<Token> tokens;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return !has_errors(diagnostics); }
};

/// Splits Jaqal source into tokens.
///
/// Comments and horizontal whitespace are dropped. Line breaks (LF or CRLF)
/// become `newline` tokens; so does a `//` comment, which always ends its
/// line, and a block comment that spans a line break. No `end` token is
/// appended. Lexing continues past errors, skipping the offending text.
LexResult lex(std::string_view source);

const char* to_string(TokenKind kind);

}  // namespace jaqal
