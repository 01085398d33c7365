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

#include <string_view>
#include <vector>

#include "jaqal/ast.hpp"
#include "jaqal/diagnostic.hpp"

namespace jaqal {

struct ParseResult {
    ast::Program program;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return !has_errors(diagnostics); }
};

/// Parses Jaqal source into a syntax tree.
///
/// All purely syntactic rules are enforced here: header/body ordering,
/// separator discipline (`;` only in sequential context, `|` only in
/// parallel blocks), `{` on the same line as `macro`/`loop`, block-only
/// bodies, no loops or directly nested parallel blocks inside parallel
/// blocks, and no directly nested sequential blocks inside sequential
/// blocks. Top-level statements form an implicit sequential context that
/// may hold a braced block.
///
/// Parsing recovers at the next line break or separator so one run can
/// report several problems. `program` holds whatever was recovered and is
/// only meaningful when `ok()`.
ParseResult parse(std::string_view source);

}  // namespace jaqal
