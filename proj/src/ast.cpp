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

#include "jaqal/ast.hpp"

#include <array>

namespace jaqal::ast {

bool is_keyword(std::string_view text) {
    static constexpr std::array<std::string_view, 5> keywords{"register", "map", "let", "macro", "loop"};
    for (auto k : keywords)
        if (k == text)
            return true;
    return false;
}

bool is_valid_identifier(std::string_view text) {
    if (text.empty())
        return false;
    auto start = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
    if (!start(text.front()))
        return false;
    for (char c : text)
        if (!start(c) && !(c >= '0' && c <= '9'))
            return false;
    return !is_keyword(text);
}

const char* to_string(BlockKind kind) { return kind == BlockKind::sequential ? "sequential" : "parallel"; }

}  // namespace jaqal::ast
