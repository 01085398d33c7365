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

#include "jaqal/pretty_printer.hpp"

#include "jaqal/format.hpp"

namespace jaqal {

namespace {

using namespace ast;

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::string print(const IntExpr& e) {
    return std::visit(overloaded{[](std::int64_t v) { return std::to_string(v); },
                                 [](const NameRef& n) { return n.name; }},
                      e.value);
}

std::string print(const Selector& s) {
    return std::visit(overloaded{[](const WholeSelector&) { return std::string(); },
                                 [](const IndexSelector& i) { return "[" + print(i.index) + "]"; },
                                 [](const SliceSelector& sl) {
                                     std::string out = "[";
                                     if (sl.start)
                                         out += print(*sl.start);
                                     out += ':';
                                     if (sl.stop)
                                         out += print(*sl.stop);
                                     if (sl.step)
                                         out += ':' + print(*sl.step);
                                     return out + "]";
                                 }},
                      s);
}

std::string print(const GateArg& a) {
    return std::visit(overloaded{[](const QubitRef& q) {
                                     return q.index ? q.base + "[" + print(*q.index) + "]" : q.base;
                                 },
                                 [](const IntLiteral& i) { return std::to_string(i.value); },
                                 [](const FloatLiteral& f) { return format_float_literal(f.value); },
                                 [](const NameRef& n) { return n.name; }},
                      a);
}

class Printer {
public:
    std::string out;

    void header(const HeaderStatement& h) {
        std::visit(overloaded{[&](const RegisterDecl& r) { out += "register " + r.name + "[" + print(r.size) + "]\n"; },
                              [&](const MapAlias& m) { out += "map " + m.name + " " + m.target + print(m.selector) + "\n"; },
                              [&](const LetConstant& l) {
                                  out += "let " + l.name + " ";
                                  out += std::visit(overloaded{[](std::int64_t v) { return std::to_string(v); },
                                                               [](double v) { return format_float_literal(v); }},
                                                    l.value);
                                  out += '\n';
                              }},
                   h);
    }

    void statement(const BodyStatement& s, int depth) {
        std::visit(overloaded{[&](const GateStatement& g) {
                                  indent(depth);
                                  out += g.name;
                                  for (const auto& a : g.args)
                                      out += " " + print(a);
                                  out += '\n';
                              },
                              [&](const GateBlock& b) {
                                  indent(depth);
                                  block(b, depth);
                              },
                              [&](const LoopStatement& l) {
                                  indent(depth);
                                  out += "loop " + print(l.count) + " ";
                                  block(l.body, depth);
                              },
                              [&](const MacroDef& m) {
                                  indent(depth);
                                  out += "macro " + m.name;
                                  for (const auto& p : m.params)
                                      out += " " + p;
                                  out += ' ';
                                  block(m.body, depth);
                              }},
                   s.node);
    }

private:
    void indent(int depth) { out.append(static_cast<std::size_t>(depth) * 4, ' '); }

    // Caller has written the indentation and any prefix of the opening line.
    void block(const GateBlock& b, int depth) {
        bool seq = b.kind == BlockKind::sequential;
        out += seq ? "{\n" : "<\n";
        for (const auto& s : b.statements)
            statement(s, depth + 1);
        indent(depth);
        out += seq ? "}\n" : ">\n";
    }
};

}  // namespace

std::string pretty_print(const Program& program) {
    Printer p;
    for (const auto& h : program.headers)
        p.header(h);
    for (const auto& s : program.body)
        p.statement(s, 0);
    return p.out;
}

}  // namespace jaqal
