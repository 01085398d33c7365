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
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "jaqal/analyzer.hpp"
#include "jaqal/ast.hpp"
#include "jaqal/gateset.hpp"

namespace jaqal {

/// A native gate on absolute register offsets with its angles resolved.
struct PrimitiveGate {
    std::shared_ptr<const GateDefinition> definition;
    std::vector<std::size_t> qubits;
    std::vector<double> angles;
    /// The gate statement this came from (inside the macro body for
    /// expanded macros).
    SourceLoc loc;

    const std::string& name() const { return definition->name; }

    bool operator==(const PrimitiveGate& other) const {
        return name() == other.name() && qubits == other.qubits && angles == other.angles;
    }
};

struct FlatItem;

/// Sequential or parallel grouping. After expansion a block never directly
/// contains a block of its own kind and never contains an empty block.
struct FlatBlock {
    ast::BlockKind kind = ast::BlockKind::sequential;
    std::vector<FlatItem> items;

    bool operator==(const FlatBlock& other) const;
};

struct FlatItem {
    std::variant<PrimitiveGate, FlatBlock> node;

    bool operator==(const FlatItem&) const = default;
};

inline bool FlatBlock::operator==(const FlatBlock& other) const {
    return kind == other.kind && items == other.items;
}

/// Fully elaborated program: no macros, loops, lets or aliases.
struct FlatCircuit {
    std::size_t qubit_count = 0;
    FlatBlock root;

    bool operator==(const FlatCircuit&) const = default;
};

/// Lowers an analyzed program: lets and aliases resolve to values and
/// offsets, macro calls inline their bodies with arguments substituted,
/// loops unroll eagerly, and same-kind nested blocks splice into their
/// parent.
///
/// Requires `analysis.ok()`. Any failure here is an internal error
/// (Error(internal_error)), including parallel siblings that end up sharing
/// a qubit.
FlatCircuit expand(const ast::Program& program, const AnalysisResult& analysis, const GateSet& gates);

std::size_t count_primitive_gates(const FlatCircuit& circuit);
std::size_t count_primitive_gates(const FlatBlock& block);

/// Text dump, one primitive per line (`name offsets... angles...`), nested
/// blocks opened by `{`/`<` and closed by `}`/`>`, four-space indentation.
/// The root block is not bracketed.
std::string dump(const FlatCircuit& circuit);

/// Re-encodes a flat circuit as a program over `register q[n]`.
ast::Program to_program(const FlatCircuit& circuit);

/// Calls `fn` on every primitive in execution order.
template <class Fn>
void for_each_primitive(const FlatBlock& block, Fn&& fn) {
    for (const auto& item : block.items) {
        if (auto g = std::get_if<PrimitiveGate>(&item.node))
            fn(*g);
        else
            for_each_primitive(std::get<FlatBlock>(item.node), fn);
    }
}

}  // namespace jaqal
