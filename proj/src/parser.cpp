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

#include "jaqal/parser.hpp"

#include <optional>
#include <string>
#include <utility>

#include "jaqal/lexer.hpp"

namespace jaqal {

namespace {

using namespace ast;

// Where a statement sits. `top` is the implicit sequential context of the
// file body; it may hold braced blocks and accepts header statements.
enum class Context { top, sequential, parallel };

class Parser {
public:
    Parser(std::vector<Token> tokens, std::vector<Diagnostic> diagnostics)
        : tokens_(std::move(tokens)), diags_(std::move(diagnostics)) {
        Token end;
        end.kind = TokenKind::end;
        end.loc = tokens_.empty() ? SourceLoc{} : tokens_.back().loc;
        tokens_.push_back(end);
    }

    ParseResult run() {
        ParseResult result;
        bool seen_body = false;
        while (true) {
            const Token& t = peek();
            if (t.kind == TokenKind::end)
                break;
            if (t.kind == TokenKind::newline || t.kind == TokenKind::semicolon) {
                advance();
                continue;
            }
            if (t.kind == TokenKind::pipe) {
                error(codes::pipe_in_sequential, "'|' separates statements only inside a parallel block", t.loc);
                advance();
                continue;
            }
            if (t.kind == TokenKind::rbrace || t.kind == TokenKind::rangle) {
                error(codes::unmatched_close, std::string("unmatched ") + to_string(t.kind), t.loc);
                advance();
                continue;
            }
            if (header_keyword()) {
                SourceLoc loc = t.loc;
                auto header = parse_header();
                if (seen_body)
                    error(codes::header_after_body, "header statements must precede all body statements", loc);
                else if (header)
                    result.program.headers.push_back(std::move(*header));
            } else {
                seen_body = true;
                if (auto stmt = parse_statement(Context::top))
                    result.program.body.push_back(std::move(*stmt));
            }
            finish_statement(Context::top);
        }
        result.diagnostics = std::move(diags_);
        return result;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    bool check(TokenKind kind) const { return peek().kind == kind; }
    const Token& advance() {
        const Token& t = tokens_[pos_];
        if (pos_ + 1 < tokens_.size())
            ++pos_;
        return t;
    }

    bool is_keyword_token(std::string_view word) const {
        return check(TokenKind::identifier) && peek().text == word;
    }
    bool header_keyword() const {
        return is_keyword_token("register") || is_keyword_token("map") || is_keyword_token("let");
    }

    void error(std::string_view code, std::string message, SourceLoc loc) {
        diags_.push_back({Severity::error, loc, std::string(code), std::move(message)});
    }

    void unexpected(std::string_view expected) {
        const Token& t = peek();
        std::string found = t.kind == TokenKind::identifier || t.kind == TokenKind::integer ||
                                    t.kind == TokenKind::real
                                ? "'" + t.text + "'"
                                : to_string(t.kind);
        error(codes::unexpected_token, "expected " + std::string(expected) + ", found " + found, t.loc);
    }

    static bool ends_statement(TokenKind kind) {
        switch (kind) {
        case TokenKind::newline:
        case TokenKind::semicolon:
        case TokenKind::pipe:
        case TokenKind::rbrace:
        case TokenKind::rangle:
        case TokenKind::end: return true;
        default: return false;
        }
    }

    // Skips to the next statement boundary without consuming it.
    void synchronize() {
        while (!ends_statement(peek().kind))
            advance();
    }

    // Consumes the separator after a statement, checking it suits the context.
    void finish_statement(Context ctx) {
        const Token& t = peek();
        switch (t.kind) {
        case TokenKind::newline: advance(); return;
        case TokenKind::semicolon:
            if (ctx == Context::parallel)
                error(codes::semicolon_in_parallel, "use '|' instead of ';' inside a parallel block", t.loc);
            advance();
            return;
        case TokenKind::pipe:
            if (ctx != Context::parallel)
                error(codes::pipe_in_sequential, "'|' separates statements only inside a parallel block", t.loc);
            advance();
            return;
        case TokenKind::rbrace:
        case TokenKind::rangle:
        case TokenKind::end: return;
        default:
            error(codes::expected_separator,
                  std::string("expected a line break or separator before ") + describe(t), t.loc);
            synchronize();
        }
    }

    static std::string describe(const Token& t) {
        if (t.kind == TokenKind::identifier || t.kind == TokenKind::integer || t.kind == TokenKind::real)
            return "'" + t.text + "'";
        return to_string(t.kind);
    }

    std::optional<std::string> expect_name(std::string_view what) {
        const Token& t = peek();
        if (t.kind != TokenKind::identifier) {
            unexpected(what);
            return std::nullopt;
        }
        if (is_keyword(t.text)) {
            error(codes::keyword_identifier, "keyword '" + t.text + "' cannot be used as " + std::string(what),
                  t.loc);
            advance();
            return std::nullopt;
        }
        return advance().text;
    }

    bool expect(TokenKind kind, std::string_view what) {
        if (check(kind)) {
            advance();
            return true;
        }
        unexpected(what);
        return false;
    }

    std::optional<IntExpr> parse_int_expr(std::string_view what) {
        const Token& t = peek();
        if (t.kind == TokenKind::integer) {
            advance();
            return IntExpr{t.int_value, t.loc};
        }
        if (t.kind == TokenKind::identifier) {
            SourceLoc loc = t.loc;
            auto name = expect_name(what);
            if (!name)
                return std::nullopt;
            return IntExpr{NameRef{*name, loc}, loc};
        }
        unexpected(what);
        return std::nullopt;
    }

    // ---- header statements -------------------------------------------------

    std::optional<HeaderStatement> parse_header() {
        const Token& kw = advance();
        std::optional<HeaderStatement> out;
        if (kw.text == "register")
            out = parse_register(kw.loc);
        else if (kw.text == "map")
            out = parse_map(kw.loc);
        else
            out = parse_let(kw.loc);
        if (!out)
            synchronize();
        return out;
    }

    std::optional<HeaderStatement> parse_register(SourceLoc loc) {
        auto name = expect_name("a register name");
        if (!name || !expect(TokenKind::lbracket, "'['"))
            return std::nullopt;
        auto size = parse_int_expr("a register size");
        if (!size || !expect(TokenKind::rbracket, "']'"))
            return std::nullopt;
        return RegisterDecl{*name, *size, loc};
    }

    std::optional<HeaderStatement> parse_map(SourceLoc loc) {
        auto name = expect_name("an alias name");
        if (!name)
            return std::nullopt;
        auto target = expect_name("a register or alias name");
        if (!target)
            return std::nullopt;
        if (!check(TokenKind::lbracket))
            return MapAlias{*name, *target, WholeSelector{}, loc};
        advance();
        auto selector = parse_selector();
        if (!selector || !expect(TokenKind::rbracket, "']'"))
            return std::nullopt;
        return MapAlias{*name, *target, std::move(*selector), loc};
    }

    std::optional<IntExpr> parse_optional_bound(bool& ok) {
        if (check(TokenKind::colon) || check(TokenKind::rbracket))
            return std::nullopt;
        auto e = parse_int_expr("a slice bound");
        ok = ok && e.has_value();
        return e;
    }

    std::optional<Selector> parse_selector() {
        bool ok = true;
        auto first = parse_optional_bound(ok);
        if (!ok)
            return std::nullopt;
        if (!check(TokenKind::colon)) {
            if (!first) {
                unexpected("an index or slice");
                return std::nullopt;
            }
            return IndexSelector{*first};
        }
        SliceSelector slice;
        slice.start = first;
        advance();
        slice.stop = parse_optional_bound(ok);
        if (ok && check(TokenKind::colon)) {
            advance();
            slice.step = parse_optional_bound(ok);
        }
        if (!ok)
            return std::nullopt;
        return slice;
    }

    std::optional<HeaderStatement> parse_let(SourceLoc loc) {
        auto name = expect_name("a constant name");
        if (!name)
            return std::nullopt;
        const Token& t = peek();
        if (t.kind == TokenKind::integer) {
            advance();
            return LetConstant{*name, t.int_value, loc};
        }
        if (t.kind == TokenKind::real) {
            advance();
            return LetConstant{*name, t.real_value, loc};
        }
        unexpected("a numeric value");
        return std::nullopt;
    }

    // ---- body statements ---------------------------------------------------

    std::optional<BodyStatement> parse_statement(Context ctx) {
        const Token& t = peek();
        if (ctx != Context::top && header_keyword()) {
            error(codes::header_in_block, "header statements are not allowed inside a block", t.loc);
            parse_header();
            return std::nullopt;
        }
        if (is_keyword_token("macro")) {
            if (ctx != Context::top)
                error(codes::macro_in_block, "macros may only be defined at the top level", t.loc);
            auto m = parse_macro();
            if (!m || ctx != Context::top)
                return std::nullopt;
            return BodyStatement{std::move(*m)};
        }
        if (is_keyword_token("loop")) {
            if (ctx == Context::parallel)
                error(codes::loop_in_parallel, "loops are not allowed inside a parallel block", t.loc);
            auto l = parse_loop();
            if (!l)
                return std::nullopt;
            return BodyStatement{std::move(*l)};
        }
        if (t.kind == TokenKind::lbrace || t.kind == TokenKind::langle) {
            BlockKind kind = t.kind == TokenKind::lbrace ? BlockKind::sequential : BlockKind::parallel;
            if ((ctx == Context::sequential && kind == BlockKind::sequential) ||
                (ctx == Context::parallel && kind == BlockKind::parallel))
                error(codes::nested_same_kind,
                      std::string("a ") + to_string(kind) + " block cannot be nested directly in another",
                      t.loc);
            return BodyStatement{parse_block()};
        }
        if (t.kind == TokenKind::identifier) {
            auto g = parse_gate();
            if (!g)
                return std::nullopt;
            return BodyStatement{std::move(*g)};
        }
        unexpected("a statement");
        advance();
        synchronize();
        return std::nullopt;
    }

    std::optional<GateStatement> parse_gate() {
        GateStatement gate;
        gate.loc = peek().loc;
        auto name = expect_name("a gate name");
        if (!name) {
            synchronize();
            return std::nullopt;
        }
        gate.name = *name;
        while (!ends_statement(peek().kind)) {
            const Token& t = peek();
            if (t.kind == TokenKind::integer) {
                gate.args.emplace_back(IntLiteral{t.int_value, t.loc});
                advance();
            } else if (t.kind == TokenKind::real) {
                gate.args.emplace_back(FloatLiteral{t.real_value, t.loc});
                advance();
            } else if (t.kind == TokenKind::identifier) {
                SourceLoc loc = t.loc;
                auto base = expect_name("a gate argument");
                if (!base) {
                    synchronize();
                    return std::nullopt;
                }
                if (check(TokenKind::lbracket)) {
                    advance();
                    auto index = parse_int_expr("an index");
                    if (!index || !expect(TokenKind::rbracket, "']'")) {
                        synchronize();
                        return std::nullopt;
                    }
                    gate.args.emplace_back(QubitRef{*base, *index, loc});
                } else {
                    gate.args.emplace_back(NameRef{*base, loc});
                }
            } else {
                unexpected("a gate argument");
                synchronize();
                return std::nullopt;
            }
        }
        return gate;
    }

    // `{` must follow on the same line. A block on a later line is still
    // parsed so the rest of the file gets checked.
    bool at_block_start(std::string_view owner) {
        if (check(TokenKind::lbrace) || check(TokenKind::langle))
            return true;
        if (check(TokenKind::newline)) {
            std::size_t ahead = 0;
            while (peek(ahead).kind == TokenKind::newline)
                ++ahead;
            TokenKind next = peek(ahead).kind;
            if (next == TokenKind::lbrace || next == TokenKind::langle) {
                error(codes::newline_before_brace,
                      "the opening bracket of a " + std::string(owner) + " must be on the same line",
                      peek(ahead).loc);
                while (check(TokenKind::newline))
                    advance();
                return true;
            }
        }
        error(codes::block_required, "a " + std::string(owner) + " body must be a gate block", peek().loc);
        synchronize();
        return false;
    }

    std::optional<MacroDef> parse_macro() {
        MacroDef m;
        m.loc = advance().loc;
        auto name = expect_name("a macro name");
        if (!name) {
            synchronize();
            return std::nullopt;
        }
        m.name = *name;
        while (check(TokenKind::identifier)) {
            auto param = expect_name("a macro parameter");
            if (!param) {
                synchronize();
                return std::nullopt;
            }
            m.params.push_back(*param);
        }
        if (!at_block_start("macro"))
            return std::nullopt;
        m.body = parse_block();
        return m;
    }

    std::optional<LoopStatement> parse_loop() {
        LoopStatement l;
        l.loc = advance().loc;
        auto count = parse_int_expr("a loop count");
        if (!count) {
            synchronize();
            return std::nullopt;
        }
        l.count = *count;
        if (!at_block_start("loop"))
            return std::nullopt;
        if (check(TokenKind::langle))
            error(codes::loop_body_parallel, "a loop body must be a sequential block", peek().loc);
        l.body = parse_block();
        return l;
    }

    GateBlock parse_block() {
        GateBlock block;
        const Token& open = advance();
        block.loc = open.loc;
        block.kind = open.kind == TokenKind::lbrace ? BlockKind::sequential : BlockKind::parallel;
        Context ctx = block.kind == BlockKind::sequential ? Context::sequential : Context::parallel;
        TokenKind close = block.kind == BlockKind::sequential ? TokenKind::rbrace : TokenKind::rangle;
        TokenKind other_close = block.kind == BlockKind::sequential ? TokenKind::rangle : TokenKind::rbrace;
        while (true) {
            const Token& t = peek();
            if (t.kind == close) {
                advance();
                return block;
            }
            if (t.kind == TokenKind::end) {
                error(codes::unclosed_block, std::string("unclosed ") + to_string(block.kind) + " block",
                      block.loc);
                return block;
            }
            if (t.kind == other_close) {
                error(codes::unmatched_close, std::string("unmatched ") + to_string(t.kind), t.loc);
                advance();
                continue;
            }
            if (t.kind == TokenKind::newline || t.kind == TokenKind::semicolon || t.kind == TokenKind::pipe) {
                finish_statement(ctx);
                continue;
            }
            if (auto stmt = parse_statement(ctx))
                block.statements.push_back(std::move(*stmt));
            finish_statement(ctx);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<Diagnostic> diags_;
};

}  // namespace

ParseResult parse(std::string_view source) {
    LexResult lexed = lex(source);
    return Parser(std::move(lexed.tokens), std::move(lexed.diagnostics)).run();
}

}  // namespace jaqal
