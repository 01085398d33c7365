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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jaqal/ast.hpp"
#include "jaqal/diagnostic.hpp"
#include "jaqal/gateset.hpp"

namespace jaqal {

struct RegisterInfo {
    std::string name;
    std::size_t size = 0;
    std::size_t order = 0;
    SourceLoc loc;
};

/// A map alias, resolved to absolute register offsets.
struct AliasInfo {
    std::string name;
    /// False for `map a q[3]`: a single-qubit alias used without an index.
    bool is_array = true;
    std::vector<std::size_t> offsets;
    std::size_t order = 0;
    SourceLoc loc;
};

struct LetInfo {
    std::string name;
    ast::Number value;
    std::size_t order = 0;
    SourceLoc loc;
};

/// How a macro parameter is used in the macro body.
enum class MacroParamKind { unused, qubit, angle };

struct MacroInfo {
    ast::MacroDef def;
    std::vector<MacroParamKind> param_kinds;
    std::size_t order = 0;
};

/// Declared names, in one shared namespace. `order` is the declaration
/// index across headers and macro definitions; every dependency of an entry
/// has a smaller index.
struct SymbolTable {
    std::optional<RegisterInfo> reg;
    std::map<std::string, AliasInfo, std::less<>> aliases;
    std::map<std::string, LetInfo, std::less<>> lets;
    std::map<std::string, MacroInfo, std::less<>> macros;

    std::size_t qubit_count() const { return reg ? reg->size : 0; }
    bool declares(std::string_view name) const;
    /// `q[3]`-style display of an absolute offset.
    std::string qubit_name(std::size_t offset) const;
};

/// Hardware restrictions on parallel blocks, kept apart from the language
/// rules so another target can swap them.
struct ParallelismModel {
    /// Gates that may only run in a parallel block with no siblings.
    std::set<std::string, std::less<>> exclusive_gates{"MS", "Sxx"};
};

struct AnalyzeOptions {
    ParallelismModel parallelism;
};

struct AnalysisResult {
    SymbolTable table;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return !has_errors(diagnostics); }
};

/// Semantic validation of a parsed program against a gate set.
///
/// Checks, each with its own code: a single register of positive size; map
/// targets exist and offsets are in range; let references resolve with the
/// right type (integer contexts need integer lets); gate names are native
/// gates or macros defined earlier (no recursion, no forward references);
/// arity and argument kinds; no loops in parallel blocks; no same-kind
/// nesting; no repeated qubit within a gate; no qubit shared by siblings of
/// a parallel block; exclusive gates alone in their parallel block; no
/// prepare_all/measure_all inside parallel blocks.
///
/// Macro invocations are checked again with their actual arguments, so a
/// conflict that only appears after substitution is reported at the call.
/// Analysis is total and deterministic.
AnalysisResult analyze(const ast::Program& program, const GateSet& gates, const AnalyzeOptions& options = {});

/// Concrete values bound to macro parameters during expansion.
using MacroBinding = std::variant<std::size_t, double>;
using Bindings = std::map<std::string, MacroBinding, std::less<>>;

/// Absolute register offset of a qubit reference, following aliases
/// transitively. Throws Error(unknown_name | missing_index |
/// unexpected_index | index_out_of_bounds | let_as_qubit).
std::size_t resolve_qubit(const ast::QubitRef& ref, const SymbolTable& table, const Bindings* bindings = nullptr);
std::size_t resolve_qubit(const ast::GateArg& arg, const SymbolTable& table, const Bindings* bindings = nullptr);

/// Value of an integer expression. Throws Error(unknown_name | let_type).
std::int64_t resolve_int(const ast::IntExpr& expr, const SymbolTable& table);

/// Value of an angle argument: a literal, a let of either type or a bound
/// parameter. Throws Error(unknown_name | argument_kind).
double resolve_angle(const ast::GateArg& arg, const SymbolTable& table, const Bindings* bindings = nullptr);

/// Python slice semantics over a sequence of `length` items: negative
/// bounds count from the end, omitted bounds default by step sign, and
/// out-of-range bounds clamp. Returns positions into the sequence. `step`
/// must be non-zero.
std::vector<std::size_t> slice_positions(std::size_t length, std::optional<std::int64_t> start,
                                         std::optional<std::int64_t> stop, std::optional<std::int64_t> step);

}  // namespace jaqal
