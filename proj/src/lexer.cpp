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

#include "jaqal/lexer.hpp"

#include <charconv>
#include <cmath>

namespace jaqal {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

class Lexer {
public:
    explicit Lexer(std::string_view source) : src_(source) {}

    LexResult run() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                push(TokenKind::newline, "\n", here());
                advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                line_comment();
            } else if (c == '/' && peek(1) == '*') {
                block_comment();
            } else if (is_ident_start(c)) {
                identifier();
            } else if (is_digit(c) || (c == '.' && is_digit(peek(1))) ||
                       (c == '-' && (is_digit(peek(1)) || (peek(1) == '.' && is_digit(peek(2)))))) {
                number();
            } else {
                punctuation(c);
            }
        }
        return std::move(result_);
    }

private:
    char peek(std::size_t ahead) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    SourceLoc here() const { return {line_, column_}; }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void push(TokenKind kind, std::string text, SourceLoc loc) {
        Token t;
        t.kind = kind;
        t.text = std::move(text);
        t.loc = loc;
        result_.tokens.push_back(std::move(t));
    }

    void error(std::string_view code, std::string message, SourceLoc loc) {
        result_.diagnostics.push_back({Severity::error, loc, std::string(code), std::move(message)});
    }

    // A line comment terminates its line even when the file ends without a
    // line break.
    void line_comment() {
        SourceLoc loc = here();
        while (pos_ < src_.size() && src_[pos_] != '\n')
            advance();
        if (pos_ < src_.size())
            advance();
        push(TokenKind::newline, "\n", loc);
    }

    void block_comment() {
        SourceLoc loc = here();
        advance();
        advance();
        bool spans_lines = false;
        while (pos_ < src_.size()) {
            if (src_[pos_] == '*' && peek(1) == '/') {
                advance();
                advance();
                if (spans_lines)
                    push(TokenKind::newline, "\n", loc);
                return;
            }
            if (src_[pos_] == '\n')
                spans_lines = true;
            advance();
        }
        error(codes::unterminated_comment, "unterminated block comment", loc);
    }

    void identifier() {
        SourceLoc loc = here();
        std::size_t start = pos_;
        while (pos_ < src_.size() && is_ident_char(src_[pos_]))
            advance();
        push(TokenKind::identifier, std::string(src_.substr(start, pos_ - start)), loc);
    }

    void number() {
        SourceLoc loc = here();
        std::size_t start = pos_;
        bool is_real = false;
        if (src_[pos_] == '-')
            advance();
        while (is_digit(peek(0)))
            advance();
        if (peek(0) == '.') {
            is_real = true;
            advance();
            while (is_digit(peek(0)))
                advance();
        }
        bool bad = false;
        if (peek(0) == 'e' || peek(0) == 'E') {
            is_real = true;
            advance();
            if (peek(0) == '+' || peek(0) == '-')
                advance();
            if (!is_digit(peek(0)))
                bad = true;
            while (is_digit(peek(0)))
                advance();
        }
        // Trailing letters, digits or dots glue onto the literal: `12abc`, `1.2.3`.
        while (pos_ < src_.size() && (is_ident_char(src_[pos_]) || src_[pos_] == '.')) {
            bad = true;
            advance();
        }
        std::string text(src_.substr(start, pos_ - start));
        if (bad) {
            error(codes::malformed_number, "malformed numeric literal '" + text + "'", loc);
            return;
        }
        Token t;
        t.loc = loc;
        t.text = text;
        const char* first = text.data();
        const char* last = text.data() + text.size();
        if (is_real) {
            auto [ptr, ec] = std::from_chars(first, last, t.real_value);
            if (ec != std::errc() || ptr != last || !std::isfinite(t.real_value)) {
                error(codes::malformed_number, "numeric literal '" + text + "' is out of range", loc);
                return;
            }
            t.kind = TokenKind::real;
        } else {
            auto [ptr, ec] = std::from_chars(first, last, t.int_value);
            if (ec != std::errc() || ptr != last) {
                error(codes::malformed_number, "integer literal '" + text + "' is out of range", loc);
                return;
            }
            t.kind = TokenKind::integer;
        }
        result_.tokens.push_back(std::move(t));
    }

    void punctuation(char c) {
        SourceLoc loc = here();
        TokenKind kind;
        switch (c) {
        case '{': kind = TokenKind::lbrace; break;
        case '}': kind = TokenKind::rbrace; break;
        case '<': kind = TokenKind::langle; break;
        case '>': kind = TokenKind::rangle; break;
        case '[': kind = TokenKind::lbracket; break;
        case ']': kind = TokenKind::rbracket; break;
        case ':': kind = TokenKind::colon; break;
        case ';': kind = TokenKind::semicolon; break;
        case '|': kind = TokenKind::pipe; break;
        case '+':
        case '-':
        case '*':
        case '/':
            error(codes::arithmetic,
                  std::string("arithmetic operator '") + c +
                      "' is not supported; compute the value before emitting Jaqal",
                  loc);
            advance();
            return;
        default: {
            std::size_t start = pos_;
            advance();
            // Keep a multi-byte UTF-8 sequence together in one report.
            if (static_cast<unsigned char>(c) >= 0x80) {
                while (pos_ < src_.size() && (static_cast<unsigned char>(src_[pos_]) & 0xC0) == 0x80)
                    advance();
            }
            error(codes::illegal_character,
                  "illegal character '" + std::string(src_.substr(start, pos_ - start)) + "'", loc);
            return;
        }
        }
        push(kind, std::string(1, c), loc);
        advance();
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    LexResult result_;
};

}  // namespace

LexResult lex(std::string_view source) { return Lexer(source).run(); }

const char* to_string(TokenKind kind) {
    switch (kind) {
    case TokenKind::identifier: return "identifier";
    case TokenKind::integer: return "integer";
    case TokenKind::real: return "float";
    case TokenKind::lbrace: return "'{'";
    case TokenKind::rbrace: return "'}'";
    case TokenKind::langle: return "'<'";
    case TokenKind::rangle: return "'>'";
    case TokenKind::lbracket: return "'['";
    case TokenKind::rbracket: return "']'";
    case TokenKind::colon: return "':'";
    case TokenKind::semicolon: return "';'";
    case TokenKind::pipe: return "'|'";
    case TokenKind::newline: return "newline";
    case TokenKind::end: return "end of file";
    }
    return "?";
}

}  // namespace jaqal
