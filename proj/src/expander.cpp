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

#include "jaqal/expander.hpp"

#include <map>
#include <set>

#include "jaqal/format.hpp"

namespace jaqal {

namespace {

using namespace ast;

class Expander {
public:
    Expander(const SymbolTable& table, const GateSet& gates) : table_(table), gates_(gates) {}

    FlatCircuit run(const Program& program) {
        FlatCircuit circuit;
        circuit.qubit_count = table_.qubit_count();
        circuit.root.kind = BlockKind::sequential;
        for (const auto& s : program.body)
            statement(s, circuit.root, nullptr);
        return circuit;
    }

private:
    std::shared_ptr<const GateDefinition> definition(const std::string& name) {
        auto it = cache_.find(name);
        if (it != cache_.end())
            return it->second;
        const GateDefinition* def = gates_.find(name);
        if (def == nullptr)
            throw Error(codes::internal_error, "gate '" + name + "' vanished during expansion");
        auto ptr = std::make_shared<const GateDefinition>(*def);
        cache_.emplace(name, ptr);
        return ptr;
    }

    static void append(FlatBlock& out, FlatBlock&& inner) {
        if (inner.items.empty())
            return;
        if (inner.kind == out.kind) {
            for (auto& item : inner.items)
                out.items.push_back(std::move(item));
        } else {
            out.items.push_back(FlatItem{std::move(inner)});
        }
    }

    void statement(const BodyStatement& s, FlatBlock& out, const Bindings* bindings) {
        if (auto g = std::get_if<GateStatement>(&s.node)) {
            gate(*g, out, bindings);
        } else if (auto b = std::get_if<GateBlock>(&s.node)) {
            append(out, block(*b, bindings));
        } else if (auto l = std::get_if<LoopStatement>(&s.node)) {
            if (out.kind != BlockKind::sequential)
                throw Error(codes::internal_error, "loop inside a parallel block reached the expander", l->loc);
            std::int64_t count = resolve_int(l->count, table_);
            FlatBlock body = block(l->body, bindings);
            for (std::int64_t i = 0; i < count; ++i)
                append(out, FlatBlock(body));
        }
        // Macro definitions produce nothing where they are written.
    }

    FlatBlock block(const GateBlock& b, const Bindings* bindings) {
        FlatBlock out;
        out.kind = b.kind;
        for (const auto& s : b.statements)
            statement(s, out, bindings);
        return out;
    }

    void gate(const GateStatement& g, FlatBlock& out, const Bindings* bindings) {
        if (const GateDefinition* def = gates_.find(g.name)) {
            PrimitiveGate p;
            p.definition = definition(g.name);
            p.loc = g.loc;
            for (std::size_t i = 0; i < g.args.size(); ++i) {
                if (def->params[i] == ParamKind::qubit)
                    p.qubits.push_back(resolve_qubit(g.args[i], table_, bindings));
                else
                    p.angles.push_back(resolve_angle(g.args[i], table_, bindings));
            }
            out.items.push_back(FlatItem{std::move(p)});
            return;
        }
        auto it = table_.macros.find(g.name);
        if (it == table_.macros.end())
            throw Error(codes::internal_error, "unresolved gate '" + g.name + "' reached the expander", g.loc);
        const MacroInfo& macro = it->second;
        Bindings inner;
        for (std::size_t i = 0; i < g.args.size(); ++i) {
            const std::string& param = macro.def.params[i];
            switch (macro.param_kinds[i]) {
            case MacroParamKind::qubit: inner[param] = resolve_qubit(g.args[i], table_, bindings); break;
            case MacroParamKind::angle: inner[param] = resolve_angle(g.args[i], table_, bindings); break;
            case MacroParamKind::unused: break;
            }
        }
        append(out, block(macro.def.body, &inner));
    }

    const SymbolTable& table_;
    const GateSet& gates_;
    std::map<std::string, std::shared_ptr<const GateDefinition>> cache_;
};

// Qubits touched by an item; `all` when a global gate is inside.
void footprint(const FlatItem& item, std::set<std::size_t>& qubits, bool& all) {
    if (auto g = std::get_if<PrimitiveGate>(&item.node)) {
        all = all || g->definition->acts_on_all_qubits();
        qubits.insert(g->qubits.begin(), g->qubits.end());
        return;
    }
    for (const auto& inner : std::get<FlatBlock>(item.node).items)
        footprint(inner, qubits, all);
}

void check_block(const FlatBlock& b) {
    if (b.kind == BlockKind::parallel) {
        std::set<std::size_t> seen;
        for (const auto& item : b.items) {
            std::set<std::size_t> mine;
            bool all = false;
            footprint(item, mine, all);
            if (all)
                throw Error(codes::internal_error, "global gate inside a parallel block after expansion");
            for (auto q : mine)
                if (!seen.insert(q).second)
                    throw Error(codes::internal_error,
                                "qubit " + std::to_string(q) + " shared by parallel siblings after expansion");
        }
    }
    for (const auto& item : b.items) {
        if (auto inner = std::get_if<FlatBlock>(&item.node)) {
            if (inner->kind == b.kind || inner->items.empty())
                throw Error(codes::internal_error, "unnormalized block after expansion");
            check_block(*inner);
        }
    }
}

void dump_block(const FlatBlock& b, int depth, std::string& out) {
    for (const auto& item : b.items) {
        out.append(static_cast<std::size_t>(depth) * 4, ' ');
        if (auto g = std::get_if<PrimitiveGate>(&item.node)) {
            out += g->name();
            for (auto q : g->qubits)
                out += " " + std::to_string(q);
            for (auto a : g->angles)
                out += " " + format_float_literal(a);
            out += '\n';
        } else {
            const auto& inner = std::get<FlatBlock>(item.node);
            bool seq = inner.kind == BlockKind::sequential;
            out += seq ? "{\n" : "<\n";
            dump_block(inner, depth + 1, out);
            out.append(static_cast<std::size_t>(depth) * 4, ' ');
            out += seq ? "}\n" : ">\n";
        }
    }
}

BodyStatement to_statement(const FlatItem& item) {
    if (auto g = std::get_if<PrimitiveGate>(&item.node)) {
        GateStatement s;
        s.name = g->name();
        for (auto q : g->qubits)
            s.args.emplace_back(QubitRef{"q", IntExpr{static_cast<std::int64_t>(q), {}}, {}});
        for (auto a : g->angles)
            s.args.emplace_back(FloatLiteral{a, {}});
        return BodyStatement{std::move(s)};
    }
    const auto& inner = std::get<FlatBlock>(item.node);
    GateBlock b;
    b.kind = inner.kind;
    for (const auto& i : inner.items)
        b.statements.push_back(to_statement(i));
    return BodyStatement{std::move(b)};
}

}  // namespace

FlatCircuit expand(const Program& program, const AnalysisResult& analysis, const GateSet& gates) {
    FlatCircuit circuit;
    try {
        circuit = Expander(analysis.table, gates).run(program);
    } catch (const Error& e) {
        if (e.code() == codes::internal_error)
            throw;
        throw Error(codes::internal_error, "expansion failed: " + std::string(e.what()), e.loc());
    }
    check_block(circuit.root);
    return circuit;
}

std::size_t count_primitive_gates(const FlatBlock& block) {
    std::size_t n = 0;
    for_each_primitive(block, [&](const PrimitiveGate&) { ++n; });
    return n;
}

std::size_t count_primitive_gates(const FlatCircuit& circuit) { return count_primitive_gates(circuit.root); }

std::string dump(const FlatCircuit& circuit) {
    std::string out;
    dump_block(circuit.root, 0, out);
    return out;
}

Program to_program(const FlatCircuit& circuit) {
    Program p;
    if (circuit.qubit_count > 0)
        p.headers.emplace_back(RegisterDecl{"q", IntExpr{static_cast<std::int64_t>(circuit.qubit_count), {}}, {}});
    for (const auto& item : circuit.root.items)
        p.body.push_back(to_statement(item));
    return p;
}

}  // namespace jaqal
