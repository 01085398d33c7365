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

#include "jaqal/pipeline.hpp"

#include "jaqal/parser.hpp"

namespace jaqal {

Compilation compile(std::string_view source, const GateSet& gates, const AnalyzeOptions& options) {
    Compilation c;
    ParseResult parsed = parse(source);
    c.program = std::move(parsed.program);
    c.diagnostics = std::move(parsed.diagnostics);
    if (has_errors(c.diagnostics))
        return c;
    AnalysisResult analysis = analyze(c.program, gates, options);
    c.diagnostics.insert(c.diagnostics.end(), analysis.diagnostics.begin(), analysis.diagnostics.end());
    if (!analysis.ok()) {
        c.table = std::move(analysis.table);
        return c;
    }
    c.circuit = expand(c.program, analysis, gates);
    c.table = std::move(analysis.table);
    return c;
}

}  // namespace jaqal
