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

#include <optional>
#include <string_view>
#include <vector>

#include "jaqal/analyzer.hpp"
#include "jaqal/ast.hpp"
#include "jaqal/diagnostic.hpp"
#include "jaqal/expander.hpp"
#include "jaqal/gateset.hpp"

namespace jaqal {

/// Everything produced on the way from source text to a flat circuit.
struct Compilation {
    ast::Program program;
    SymbolTable table;
    /// Set only when parsing and analysis produced no errors.
    std::optional<FlatCircuit> circuit;
    /// Lexer, parser and analyzer diagnostics, in that order.
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return circuit.has_value(); }
};

/// Parses and analyzes `source`; expands it when both are clean. Analysis
/// is skipped after parse errors.
Compilation compile(std::string_view source, const GateSet& gates, const AnalyzeOptions& options = {});

}  // namespace jaqal
