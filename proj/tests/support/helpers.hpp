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

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jaqal/diagnostic.hpp"
#include "jaqal/gateset.hpp"
#include "jaqal/pipeline.hpp"

namespace jaqal::testing {

inline std::vector<std::string> codes_of(const std::vector<Diagnostic>& diagnostics) {
    std::vector<std::string> out;
    for (const auto& d : diagnostics)
        out.push_back(d.code);
    return out;
}

inline bool has_code(const std::vector<Diagnostic>& diagnostics, std::string_view code) {
    return std::any_of(diagnostics.begin(), diagnostics.end(), [&](const Diagnostic& d) { return d.code == code; });
}

inline std::string joined(const std::vector<Diagnostic>& diagnostics) {
    std::string out;
    for (const auto& d : diagnostics)
        out += render(d, "src") + "\n";
    return out;
}

/// Compiles with the built-in gates and insists on success.
inline FlatCircuit flatten(std::string_view source, const GateSet& gates = builtin_gateset()) {
    Compilation c = compile(source, gates);
    if (!c.ok())
        throw std::runtime_error("compilation failed:\n" + joined(c.diagnostics) + std::string(source));
    return *c.circuit;
}

}  // namespace jaqal::testing
