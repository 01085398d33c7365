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
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jaqal/diagnostic.hpp"

/// Syntax tree for Jaqal programs.
///
/// Nodes are plain values. `operator==` is structural: source locations are
/// carried for diagnostics but ignored by comparisons.
namespace jaqal::ast {

/// A bare identifier used where a value is expected. Whether it names a
/// qubit alias, a let constant or a macro parameter is decided by the
/// analyzer.
struct NameRef {
    std::string name;
    SourceLoc loc;

    bool operator==(const NameRef&) const = default;
};

/// Integer-valued position: register sizes, indices, slice bounds, loop
/// counts. Either a literal or the name of an integer let.
struct IntExpr {
    std::variant<std::int64_t, NameRef> value;
    SourceLoc loc;

    bool operator==(const IntExpr&) const = default;
};

/// Value of a let constant; the alternative held is the type tag.
using Number = std::variant<std::int64_t, double>;

struct WholeSelector {
    bool operator==(const WholeSelector&) const = default;
};

struct IndexSelector {
    IntExpr index;

    bool operator==(const IndexSelector&) const = default;
};

struct SliceSelector {
    std::optional<IntExpr> start;
    std::optional<IntExpr> stop;
    std::optional<IntExpr> step;

    bool operator==(const SliceSelector&) const = default;
};

using Selector = std::variant<WholeSelector, IndexSelector, SliceSelector>;

struct RegisterDecl {
    std::string name;
    IntExpr size;
    SourceLoc loc;

    bool operator==(const RegisterDecl&) const = default;
};

struct MapAlias {
    std::string name;
    std::string target;
    Selector selector;
    SourceLoc loc;

    bool operator==(const MapAlias&) const = default;
};

struct LetConstant {
    std::string name;
    Number value;
    SourceLoc loc;

    bool operator==(const LetConstant&) const = default;
};

using HeaderStatement = std::variant<RegisterDecl, MapAlias, LetConstant>;

/// `base[index]`. The parser only produces indexed references; an unindexed
/// name in argument position is a NameRef.
struct QubitRef {
    std::string base;
    std::optional<IntExpr> index;
    SourceLoc loc;

    bool operator==(const QubitRef&) const = default;
};

struct IntLiteral {
    std::int64_t value = 0;
    SourceLoc loc;

    bool operator==(const IntLiteral&) const = default;
};

struct FloatLiteral {
    double value = 0.0;
    SourceLoc loc;

    bool operator==(const FloatLiteral&) const = default;
};

using GateArg = std::variant<QubitRef, IntLiteral, FloatLiteral, NameRef>;

/// A native gate application or a macro invocation.
struct GateStatement {
    std::string name;
    std::vector<GateArg> args;
    SourceLoc loc;

    bool operator==(const GateStatement&) const = default;
};

enum class BlockKind { sequential, parallel };

struct BodyStatement;

struct GateBlock {
    BlockKind kind = BlockKind::sequential;
    std::vector<BodyStatement> statements;
    SourceLoc loc;

    bool operator==(const GateBlock&) const;
};

struct LoopStatement {
    IntExpr count;
    GateBlock body;
    SourceLoc loc;

    bool operator==(const LoopStatement&) const = default;
};

struct MacroDef {
    std::string name;
    std::vector<std::string> params;
    GateBlock body;
    SourceLoc loc;

    bool operator==(const MacroDef&) const = default;
};

struct BodyStatement {
    std::variant<GateStatement, GateBlock, LoopStatement, MacroDef> node;

    bool operator==(const BodyStatement&) const = default;
};

inline bool GateBlock::operator==(const GateBlock& other) const {
    return kind == other.kind && statements == other.statements;
}

struct Program {
    std::vector<HeaderStatement> headers;
    std::vector<BodyStatement> body;

    bool operator==(const Program&) const = default;
};

/// One of `register`, `map`, `let`, `macro`, `loop`.
bool is_keyword(std::string_view text);

/// `[A-Za-z_][A-Za-z0-9_]*` and not a keyword.
bool is_valid_identifier(std::string_view text);

const char* to_string(BlockKind kind);

}  // namespace jaqal::ast
