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

#include "jaqal/analyzer.hpp"

#include <algorithm>
#include <utility>

namespace jaqal {

namespace {

using namespace ast;

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

struct Failure {
    std::string_view code;
    std::string message;
};

template <class T>
using Outcome = std::variant<T, Failure>;

template <class T>
const Failure* failed(const Outcome<T>& o) {
    return std::get_if<Failure>(&o);
}

Failure unknown_name(std::string_view name) {
    return {codes::unknown_name, "'" + std::string(name) + "' is not declared"};
}

Outcome<std::int64_t> eval_int(const IntExpr& expr, const SymbolTable& table) {
    if (auto v = std::get_if<std::int64_t>(&expr.value))
        return *v;
    const std::string& name = std::get<NameRef>(expr.value).name;
    if (auto it = table.lets.find(name); it != table.lets.end()) {
        if (auto v = std::get_if<std::int64_t>(&it->second.value))
            return *v;
        return Failure{codes::let_type, "let '" + name + "' holds a float; an integer is required here"};
    }
    if (table.declares(name))
        return Failure{codes::argument_kind, "'" + name + "' is not an integer constant"};
    return unknown_name(name);
}

Outcome<std::size_t> index_into(const std::vector<std::size_t>& offsets, std::string_view base, const IntExpr& index,
                                const SymbolTable& table) {
    auto i = eval_int(index, table);
    if (auto f = failed(i))
        return *f;
    std::int64_t v = std::get<std::int64_t>(i);
    if (v < 0 || static_cast<std::uint64_t>(v) >= offsets.size())
        return Failure{codes::index_out_of_bounds, "index " + std::to_string(v) + " is out of bounds for '" +
                                                       std::string(base) + "' of size " +
                                                       std::to_string(offsets.size())};
    return offsets[static_cast<std::size_t>(v)];
}

std::vector<std::size_t> iota(std::size_t n) {
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = i;
    return out;
}

// Global (non-parameter) qubit resolution.
Outcome<std::size_t> resolve_global_qubit(std::string_view base, const std::optional<IntExpr>& index,
                                          const SymbolTable& table) {
    if (table.reg && table.reg->name == base) {
        if (!index)
            return Failure{codes::missing_index, "register '" + std::string(base) + "' needs an index here"};
        return index_into(iota(table.reg->size), base, *index, table);
    }
    if (auto it = table.aliases.find(base); it != table.aliases.end()) {
        const AliasInfo& alias = it->second;
        if (!alias.is_array) {
            if (index)
                return Failure{codes::unexpected_index, "'" + std::string(base) + "' names a single qubit"};
            return alias.offsets.front();
        }
        if (!index)
            return Failure{codes::missing_index, "alias '" + std::string(base) + "' needs an index here"};
        return index_into(alias.offsets, base, *index, table);
    }
    if (table.lets.contains(base))
        return Failure{codes::let_as_qubit, "let '" + std::string(base) + "' is a number, not a qubit"};
    if (table.macros.contains(base))
        return Failure{codes::argument_kind, "macro '" + std::string(base) + "' is not a qubit"};
    return unknown_name(base);
}

Outcome<std::size_t> resolve_qubit_outcome(std::string_view base, const std::optional<IntExpr>& index,
                                           const SymbolTable& table, const Bindings* bindings) {
    if (bindings) {
        if (auto it = bindings->find(base); it != bindings->end()) {
            if (index)
                return Failure{codes::unexpected_index, "parameter '" + std::string(base) + "' names a single qubit"};
            if (auto off = std::get_if<std::size_t>(&it->second))
                return *off;
            return Failure{codes::argument_kind, "parameter '" + std::string(base) + "' is bound to an angle"};
        }
    }
    return resolve_global_qubit(base, index, table);
}

std::pair<std::string_view, std::optional<IntExpr>> qubit_parts(const GateArg& arg) {
    if (auto q = std::get_if<QubitRef>(&arg))
        return {q->base, q->index};
    if (auto n = std::get_if<NameRef>(&arg))
        return {n->name, std::nullopt};
    return {std::string_view(), std::nullopt};
}

SourceLoc loc_of(const GateArg& arg) {
    return std::visit([](const auto& a) { return a.loc; }, arg);
}

SourceLoc loc_of(const BodyStatement& s) {
    return std::visit([](const auto& n) { return n.loc; }, s.node);
}

// ---- analysis walk -----------------------------------------------------------

enum class Ctx { top, sequential, parallel };

Ctx ctx_of(BlockKind kind) { return kind == BlockKind::sequential ? Ctx::sequential : Ctx::parallel; }

// A qubit as seen while walking. `key` identifies it at the level being
// reported; `origin` identifies it as the enclosing macro definition saw
// it. Concrete qubits are keyed by offset, parameters symbolically.
struct Qubit {
    std::string key;
    std::string origin;
    std::string display;
};

struct Footprint {
    std::vector<Qubit> qubits;
    bool all = false;
    bool exclusive = false;

    bool empty() const { return qubits.empty() && !all; }

    void add(const Qubit& q) {
        for (const auto& e : qubits)
            if (e.key == q.key && e.origin == q.origin)
                return;
        qubits.push_back(q);
    }
    void merge(const Footprint& other) {
        for (const auto& q : other.qubits)
            add(q);
        all = all || other.all;
        exclusive = exclusive || other.exclusive;
    }
};

struct Bound {
    MacroParamKind kind = MacroParamKind::unused;
    Qubit qubit;
};

struct Scope {
    std::map<std::string, Bound, std::less<>> params;
    // Walking a macro body for a call site; only substitution-induced
    // conflicts are reported, at `site`.
    bool invocation = false;
    SourceLoc site;
    std::string via;
    // Definition mode: the macro being defined and its inferred param kinds.
    std::string defining;
    std::map<std::string, MacroParamKind, std::less<>>* inferring = nullptr;
};

class Analyzer {
public:
    Analyzer(const GateSet& gates, const AnalyzeOptions& options) : gates_(gates), options_(options) {}

    AnalysisResult run(const Program& program) {
        for (const auto& h : program.headers)
            std::visit([&](const auto& s) { header_names_.insert(s.name); }, h);
        for (const auto& s : program.body)
            if (auto m = std::get_if<MacroDef>(&s.node))
                pending_macros_.insert(m->name);

        for (const auto& h : program.headers)
            std::visit([&](const auto& s) { header(s); }, h);

        if (!table_.reg) {
            std::optional<SourceLoc> where;
            for (const auto& h : program.headers)
                if (auto m = std::get_if<MapAlias>(&h); m && !where)
                    where = m->loc;
            if (!where && !program.body.empty())
                where = loc_of(program.body.front());
            if (where)
                error(codes::missing_register, "the program needs a register statement", *where);
        }

        Scope top;
        for (const auto& s : program.body) {
            if (auto m = std::get_if<MacroDef>(&s.node))
                define_macro(*m);
            else
                statement(s, Ctx::top, top);
        }
        return {std::move(table_), std::move(diags_)};
    }

private:
    void error(std::string_view code, std::string message, SourceLoc loc) {
        diags_.push_back({Severity::error, loc, std::string(code), std::move(message)});
    }
    void warning(std::string_view code, std::string message, SourceLoc loc) {
        diags_.push_back({Severity::warning, loc, std::string(code), std::move(message)});
    }
    void report(const Failure& f, SourceLoc loc, const std::string& name = {}) {
        std::string message = f.message;
        if (f.code == codes::unknown_name && !name.empty() && header_names_.contains(name) &&
            !table_.declares(name))
            message = "'" + name + "' is used before its definition";
        error(f.code, std::move(message), loc);
    }

    // Conflict reports: direct in normal mode, attributed to the call site
    // when walking a macro body for an invocation.
    void conflict(const Scope& scope, std::string_view code, std::string message, SourceLoc loc) {
        if (scope.invocation) {
            message += " (via macro '" + scope.via + "')";
            loc = scope.site;
        }
        error(code, std::move(message), loc);
    }

    bool claim_name(const std::string& name, SourceLoc loc) {
        if (table_.declares(name)) {
            error(codes::duplicate_name, "'" + name + "' is already declared", loc);
            return false;
        }
        return true;
    }

    // ---- headers ----

    void header(const RegisterDecl& r) {
        if (table_.reg) {
            error(codes::duplicate_register, "only one register may be declared", r.loc);
            return;
        }
        if (!claim_name(r.name, r.loc))
            return;
        RegisterInfo info{r.name, 0, order_++, r.loc};
        auto size = eval_int(r.size, table_);
        if (auto f = failed(size))
            report(*f, r.size.loc, name_of(r.size));
        else if (std::get<std::int64_t>(size) <= 0)
            error(codes::register_size, "register size must be positive", r.size.loc);
        else
            info.size = static_cast<std::size_t>(std::get<std::int64_t>(size));
        table_.reg = std::move(info);
    }

    void header(const MapAlias& m) {
        if (!claim_name(m.name, m.loc))
            return;
        std::vector<std::size_t> source;
        bool source_is_array = true;
        if (table_.reg && table_.reg->name == m.target) {
            source = iota(table_.reg->size);
        } else if (auto it = table_.aliases.find(m.target); it != table_.aliases.end()) {
            source = it->second.offsets;
            source_is_array = it->second.is_array;
        } else if (table_.lets.contains(m.target) || table_.macros.contains(m.target)) {
            error(codes::map_target_kind, "'" + m.target + "' is not a register or alias", m.loc);
            return;
        } else {
            report(unknown_name(m.target), m.loc, m.target);
            return;
        }

        AliasInfo alias{m.name, true, {}, order_++, m.loc};
        bool ok = std::visit(
            overloaded{
                [&](const WholeSelector&) {
                    alias.offsets = source;
                    alias.is_array = source_is_array;
                    return true;
                },
                [&](const IndexSelector& sel) {
                    if (!source_is_array) {
                        error(codes::unexpected_index, "'" + m.target + "' names a single qubit", m.loc);
                        return false;
                    }
                    auto off = index_into(source, m.target, sel.index, table_);
                    if (auto f = failed(off)) {
                        report(*f, sel.index.loc, name_of(sel.index));
                        return false;
                    }
                    alias.offsets = {std::get<std::size_t>(off)};
                    alias.is_array = false;
                    return true;
                },
                [&](const SliceSelector& sel) {
                    if (!source_is_array) {
                        error(codes::unexpected_index, "'" + m.target + "' names a single qubit", m.loc);
                        return false;
                    }
                    std::optional<std::int64_t> bounds[3];
                    const std::optional<IntExpr>* parts[3] = {&sel.start, &sel.stop, &sel.step};
                    for (int k = 0; k < 3; ++k) {
                        if (!*parts[k])
                            continue;
                        auto v = eval_int(**parts[k], table_);
                        if (auto f = failed(v)) {
                            report(*f, (*parts[k])->loc, name_of(**parts[k]));
                            return false;
                        }
                        bounds[k] = std::get<std::int64_t>(v);
                    }
                    if (bounds[2] && *bounds[2] == 0) {
                        error(codes::slice_step, "slice step cannot be zero", m.loc);
                        return false;
                    }
                    for (auto pos : slice_positions(source.size(), bounds[0], bounds[1], bounds[2]))
                        alias.offsets.push_back(source[pos]);
                    return true;
                }},
            m.selector);
        if (!ok)
            return;
        if (alias.is_array && alias.offsets.empty())
            warning(codes::empty_alias, "alias '" + m.name + "' selects no qubits", m.loc);
        table_.aliases.emplace(m.name, std::move(alias));
    }

    void header(const LetConstant& l) {
        if (!claim_name(l.name, l.loc))
            return;
        table_.lets.emplace(l.name, LetInfo{l.name, l.value, order_++, l.loc});
    }

    static std::string name_of(const IntExpr& e) {
        if (auto n = std::get_if<NameRef>(&e.value))
            return n->name;
        return {};
    }

    // ---- macros ----

    void define_macro(const MacroDef& m) {
        pending_macros_.erase(m.name);
        bool register_it = true;
        if (gates_.contains(m.name)) {
            error(codes::duplicate_name, "macro '" + m.name + "' redefines a native gate", m.loc);
            register_it = false;
        } else if (!claim_name(m.name, m.loc)) {
            register_it = false;
        }

        std::map<std::string, MacroParamKind, std::less<>> kinds;
        Scope scope;
        scope.defining = m.name;
        scope.inferring = &kinds;
        for (const auto& p : m.params) {
            if (scope.params.contains(p)) {
                error(codes::duplicate_name, "parameter '" + p + "' is repeated", m.loc);
                continue;
            }
            if (table_.declares(p) || p == m.name)
                error(codes::shadowed_name, "parameter '" + p + "' shadows a global name", m.loc);
            scope.params.emplace(p, Bound{MacroParamKind::unused, Qubit{"p:" + p, "p:" + p, p}});
            kinds.emplace(p, MacroParamKind::unused);
        }
        block_contents(m.body, scope);

        if (!register_it)
            return;
        MacroInfo info{m, {}, order_++};
        for (const auto& p : m.params)
            info.param_kinds.push_back(kinds[p]);
        table_.macros.emplace(m.name, std::move(info));
    }

    void mark_param(const std::string& name, MacroParamKind kind, Scope& scope, SourceLoc loc) {
        if (!scope.inferring)
            return;
        auto& current = (*scope.inferring)[name];
        if (current == MacroParamKind::unused)
            current = kind;
        else if (current != kind)
            error(codes::param_kind_conflict, "parameter '" + name + "' is used both as a qubit and as an angle",
                  loc);
    }

    // ---- body walk ----

    Footprint statement(const BodyStatement& s, Ctx ctx, Scope& scope) {
        return std::visit(overloaded{[&](const GateStatement& g) { return gate(g, scope); },
                                     [&](const GateBlock& b) {
                                         if (!scope.invocation && ((ctx == Ctx::sequential && b.kind == BlockKind::sequential) ||
                                                                   (ctx == Ctx::parallel && b.kind == BlockKind::parallel)))
                                             error(codes::nested_same_kind,
                                                   std::string("a ") + to_string(b.kind) +
                                                       " block cannot be nested directly in another",
                                                   b.loc);
                                         return block_contents(b, scope);
                                     },
                                     [&](const LoopStatement& l) { return loop(l, ctx, scope); },
                                     [&](const MacroDef& m) {
                                         if (!scope.invocation)
                                             error(codes::macro_in_block, "macros may only be defined at the top level",
                                                   m.loc);
                                         return Footprint{};
                                     }},
                          s.node);
    }

    Footprint loop(const LoopStatement& l, Ctx ctx, Scope& scope) {
        if (!scope.invocation) {
            if (ctx == Ctx::parallel)
                error(codes::loop_in_parallel, "loops are not allowed inside a parallel block", l.loc);
            if (auto n = std::get_if<NameRef>(&l.count.value); n && scope.params.contains(n->name)) {
                error(codes::argument_kind, "macro parameter '" + n->name + "' cannot be a loop count", l.count.loc);
            } else {
                auto count = eval_int(l.count, table_);
                if (auto f = failed(count))
                    report(*f, l.count.loc, name_of(l.count));
                else if (std::get<std::int64_t>(count) < 0)
                    error(codes::loop_count, "loop count must not be negative", l.count.loc);
            }
            if (l.body.kind != BlockKind::sequential)
                error(codes::loop_body_parallel, "a loop body must be a sequential block", l.body.loc);
        }
        return block_contents(l.body, scope);
    }

    Footprint block_contents(const GateBlock& b, Scope& scope) {
        Ctx ctx = ctx_of(b.kind);
        std::vector<Footprint> parts;
        parts.reserve(b.statements.size());
        for (const auto& s : b.statements)
            parts.push_back(statement(s, ctx, scope));
        if (b.kind == BlockKind::parallel)
            check_parallel(b, parts, scope);
        Footprint out;
        for (const auto& p : parts)
            out.merge(p);
        return out;
    }

    void check_parallel(const GateBlock& b, const std::vector<Footprint>& parts, const Scope& scope) {
        if (!scope.invocation) {
            std::size_t busy = 0;
            for (const auto& p : parts)
                if (!p.empty())
                    ++busy;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                SourceLoc loc = loc_of(b.statements[i]);
                if (parts[i].all)
                    error(codes::global_in_parallel,
                          "prepare_all and measure_all act on every qubit and cannot run in a parallel block", loc);
                else if (parts[i].exclusive && busy > 1)
                    error(codes::exclusive_gate, "a two-qubit gate must run alone in its parallel block", loc);
            }
        }
        std::set<std::string> reported;
        for (std::size_t j = 1; j < parts.size(); ++j) {
            if (parts[j].all)
                continue;
            for (std::size_t i = 0; i < j; ++i) {
                if (parts[i].all)
                    continue;
                for (const auto& qj : parts[j].qubits) {
                    if (reported.contains(qj.key))
                        continue;
                    bool clash = false;
                    bool known = false;
                    for (const auto& qi : parts[i].qubits) {
                        if (qi.key != qj.key)
                            continue;
                        clash = true;
                        for (const auto& qi2 : parts[i].qubits)
                            for (const auto& qj2 : parts[j].qubits)
                                if (qi2.key == qj.key && qj2.key == qj.key && qi2.origin == qj2.origin)
                                    known = true;
                    }
                    if (!clash || (scope.invocation && known))
                        continue;
                    reported.insert(qj.key);
                    conflict(scope, codes::parallel_conflict,
                             "qubit " + qj.display + " used twice in parallel block", loc_of(b.statements[j]));
                }
            }
        }
    }

    std::optional<Qubit> qubit_arg(const GateArg& arg, Scope& scope) {
        if (std::holds_alternative<IntLiteral>(arg) || std::holds_alternative<FloatLiteral>(arg)) {
            if (!scope.invocation)
                error(codes::argument_kind, "expected a qubit, found a number", loc_of(arg));
            return std::nullopt;
        }
        auto [base, index] = qubit_parts(arg);
        if (auto it = scope.params.find(base); it != scope.params.end()) {
            if (index) {
                if (!scope.invocation)
                    error(codes::unexpected_index, "parameter '" + std::string(base) + "' names a single qubit",
                          loc_of(arg));
                return std::nullopt;
            }
            if (scope.invocation)
                return it->second.kind == MacroParamKind::qubit ? std::optional(it->second.qubit) : std::nullopt;
            mark_param(it->first, MacroParamKind::qubit, scope, loc_of(arg));
            return it->second.qubit;
        }
        auto off = resolve_global_qubit(base, index, table_);
        if (auto f = failed(off)) {
            if (!scope.invocation)
                report(*f, loc_of(arg), std::string(base));
            return std::nullopt;
        }
        std::size_t o = std::get<std::size_t>(off);
        std::string key = "q:" + std::to_string(o);
        return Qubit{key, key, table_.qubit_name(o)};
    }

    bool angle_arg(const GateArg& arg, Scope& scope) {
        if (std::holds_alternative<IntLiteral>(arg) || std::holds_alternative<FloatLiteral>(arg))
            return true;
        if (std::holds_alternative<QubitRef>(arg)) {
            if (!scope.invocation)
                error(codes::argument_kind, "expected an angle, found a qubit", loc_of(arg));
            return false;
        }
        const std::string& name = std::get<NameRef>(arg).name;
        if (auto it = scope.params.find(name); it != scope.params.end()) {
            if (scope.invocation)
                return it->second.kind == MacroParamKind::angle;
            mark_param(it->first, MacroParamKind::angle, scope, loc_of(arg));
            return true;
        }
        if (table_.lets.contains(name))
            return true;
        if (!scope.invocation) {
            if (table_.declares(name))
                error(codes::argument_kind, "expected an angle, found '" + name + "'", loc_of(arg));
            else
                report(unknown_name(name), loc_of(arg), name);
        }
        return false;
    }

    // Argument for a parameter the macro never uses: anything that names
    // something is accepted.
    void free_arg(const GateArg& arg, Scope& scope) {
        if (scope.invocation || std::holds_alternative<IntLiteral>(arg) || std::holds_alternative<FloatLiteral>(arg))
            return;
        auto [base, index] = qubit_parts(arg);
        if (scope.params.contains(base) || (!index && table_.lets.contains(base)))
            return;
        qubit_arg(arg, scope);
    }

    void check_duplicates(const std::vector<Qubit>& qubits, const GateStatement& g, const Scope& scope) {
        std::set<std::string> reported;
        for (std::size_t j = 1; j < qubits.size(); ++j)
            for (std::size_t i = 0; i < j; ++i) {
                if (qubits[i].key != qubits[j].key || reported.contains(qubits[j].key))
                    continue;
                if (scope.invocation && qubits[i].origin == qubits[j].origin)
                    continue;
                reported.insert(qubits[j].key);
                conflict(scope, codes::duplicate_qubit,
                         "qubit " + qubits[j].display + " is passed twice to '" + g.name + "'", g.loc);
            }
    }

    bool check_arity(const GateStatement& g, std::size_t expected, const Scope& scope) {
        if (g.args.size() == expected)
            return true;
        if (!scope.invocation)
            error(codes::arity,
                  "'" + g.name + "' takes " + std::to_string(expected) + " argument(s), got " +
                      std::to_string(g.args.size()),
                  g.loc);
        return false;
    }

    Footprint gate(const GateStatement& g, Scope& scope) {
        Footprint fp;
        if (const GateDefinition* def = gates_.find(g.name)) {
            fp.all = def->acts_on_all_qubits();
            fp.exclusive = options_.parallelism.exclusive_gates.contains(g.name);
            if (!check_arity(g, def->params.size(), scope))
                return fp;
            std::vector<Qubit> qubits;
            for (std::size_t i = 0; i < g.args.size(); ++i) {
                if (def->params[i] == ParamKind::qubit) {
                    if (auto q = qubit_arg(g.args[i], scope))
                        qubits.push_back(*q);
                } else {
                    angle_arg(g.args[i], scope);
                }
            }
            check_duplicates(qubits, g, scope);
            for (const auto& q : qubits)
                fp.add(q);
            return fp;
        }

        auto it = table_.macros.find(g.name);
        if (it == table_.macros.end()) {
            if (!scope.invocation) {
                if (g.name == scope.defining)
                    error(codes::recursive_macro, "macro '" + g.name + "' cannot invoke itself (recursive macro)",
                          g.loc);
                else if (pending_macros_.contains(g.name))
                    error(codes::forward_macro_reference,
                          "macro '" + g.name + "' is used before its definition", g.loc);
                else
                    error(codes::unknown_gate, "unknown gate or macro '" + g.name + "'", g.loc);
            }
            return fp;
        }

        const MacroInfo& macro = it->second;
        if (!check_arity(g, macro.def.params.size(), scope))
            return fp;
        Scope callee;
        callee.invocation = true;
        callee.site = scope.invocation ? scope.site : g.loc;
        callee.via = scope.invocation ? scope.via : g.name;
        bool complete = true;
        for (std::size_t i = 0; i < g.args.size(); ++i) {
            const std::string& param = macro.def.params[i];
            switch (macro.param_kinds[i]) {
            case MacroParamKind::qubit:
                if (auto q = qubit_arg(g.args[i], scope)) {
                    Qubit bound = *q;
                    if (!scope.invocation)
                        bound.origin = "p:" + param;
                    callee.params.emplace(param, Bound{MacroParamKind::qubit, bound});
                } else {
                    complete = false;
                }
                break;
            case MacroParamKind::angle:
                complete = angle_arg(g.args[i], scope) && complete;
                callee.params.emplace(param, Bound{MacroParamKind::angle, {}});
                break;
            case MacroParamKind::unused:
                free_arg(g.args[i], scope);
                callee.params.emplace(param, Bound{MacroParamKind::unused, {}});
                break;
            }
        }
        if (!complete)
            return fp;
        return block_contents(macro.def.body, callee);
    }

    const GateSet& gates_;
    const AnalyzeOptions& options_;
    SymbolTable table_;
    std::vector<Diagnostic> diags_;
    std::size_t order_ = 0;
    std::set<std::string, std::less<>> header_names_;
    std::set<std::string, std::less<>> pending_macros_;
};

}  // namespace

bool SymbolTable::declares(std::string_view name) const {
    return (reg && reg->name == name) || aliases.contains(name) || lets.contains(name) || macros.contains(name);
}

std::string SymbolTable::qubit_name(std::size_t offset) const {
    return (reg ? reg->name : std::string("q")) + "[" + std::to_string(offset) + "]";
}

AnalysisResult analyze(const Program& program, const GateSet& gates, const AnalyzeOptions& options) {
    return Analyzer(gates, options).run(program);
}

std::size_t resolve_qubit(const QubitRef& ref, const SymbolTable& table, const Bindings* bindings) {
    auto off = resolve_qubit_outcome(ref.base, ref.index, table, bindings);
    if (auto f = failed(off))
        throw Error(f->code, f->message, ref.loc);
    return std::get<std::size_t>(off);
}

std::size_t resolve_qubit(const GateArg& arg, const SymbolTable& table, const Bindings* bindings) {
    if (auto q = std::get_if<QubitRef>(&arg))
        return resolve_qubit(*q, table, bindings);
    if (auto n = std::get_if<NameRef>(&arg))
        return resolve_qubit(QubitRef{n->name, std::nullopt, n->loc}, table, bindings);
    throw Error(codes::argument_kind, "expected a qubit, found a number", loc_of(arg));
}

std::int64_t resolve_int(const IntExpr& expr, const SymbolTable& table) {
    auto v = eval_int(expr, table);
    if (auto f = failed(v))
        throw Error(f->code, f->message, expr.loc);
    return std::get<std::int64_t>(v);
}

double resolve_angle(const GateArg& arg, const SymbolTable& table, const Bindings* bindings) {
    return std::visit(
        overloaded{[](const IntLiteral& i) { return static_cast<double>(i.value); },
                   [](const FloatLiteral& f) { return f.value; },
                   [](const QubitRef& q) -> double {
                       throw Error(codes::argument_kind, "expected an angle, found a qubit", q.loc);
                   },
                   [&](const NameRef& n) -> double {
                       if (bindings) {
                           if (auto it = bindings->find(n.name); it != bindings->end()) {
                               if (auto a = std::get_if<double>(&it->second))
                                   return *a;
                               throw Error(codes::argument_kind, "parameter '" + n.name + "' is bound to a qubit",
                                           n.loc);
                           }
                       }
                       auto it = table.lets.find(n.name);
                       if (it == table.lets.end())
                           throw Error(codes::unknown_name, "'" + n.name + "' is not a numeric constant", n.loc);
                       return std::visit([](auto v) { return static_cast<double>(v); }, it->second.value);
                   }},
        arg);
}

std::vector<std::size_t> slice_positions(std::size_t length, std::optional<std::int64_t> start,
                                         std::optional<std::int64_t> stop, std::optional<std::int64_t> step) {
    const auto len = static_cast<std::int64_t>(length);
    const std::int64_t s = step.value_or(1);
    auto clamp_bound = [&](std::int64_t v, bool negative_step) {
        if (v < 0) {
            v += len;
            if (v < 0)
                v = negative_step ? -1 : 0;
        } else if (v >= len) {
            v = negative_step ? len - 1 : len;
        }
        return v;
    };
    std::vector<std::size_t> out;
    if (s > 0) {
        std::int64_t lo = start ? clamp_bound(*start, false) : 0;
        std::int64_t hi = stop ? clamp_bound(*stop, false) : len;
        for (std::int64_t i = lo; i < hi; i += s)
            out.push_back(static_cast<std::size_t>(i));
    } else if (s < 0) {
        std::int64_t hi = start ? clamp_bound(*start, true) : len - 1;
        std::int64_t lo = stop ? clamp_bound(*stop, true) : -1;
        for (std::int64_t i = hi; i > lo; i += s)
            out.push_back(static_cast<std::size_t>(i));
    }
    return out;
}

}  // namespace jaqal
