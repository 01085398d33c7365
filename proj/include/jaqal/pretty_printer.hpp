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

#include <string>

#include "jaqal/ast.hpp"

namespace jaqal {

/// Canonical Jaqal text for a program: one statement per line, four-space
/// indentation, line breaks as the only separators. Parsing the output
/// yields a structurally equal tree.
std::string pretty_print(const ast::Program& program);

}  // namespace jaqal
