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

#include "jaqal/diagnostic.hpp"

namespace jaqal {

std::string render(const Diagnostic& diagnostic, std::string_view file) {
    std::string out(file);
    out += ':' + std::to_string(diagnostic.loc.line) + ':' + std::to_string(diagnostic.loc.column) + ": ";
    out += diagnostic.code + ": ";
    if (!diagnostic.is_error())
        out += "warning: ";
    out += diagnostic.message;
    return out;
}

}  // namespace jaqal
