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

#include "generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numeric>

#include "jaqal/format.hpp"

namespace jaqal::testing {

namespace {

const std::vector<std::string> one_qubit_fixed{"Px", "Py", "Pz", "Sx", "Sy", "Sz", "Sxd", "Syd", "Szd"};
const std::vector<std::string> one_qubit_angle{"Rx", "Ry", "Rz"};

struct Macro {
    std::string name;
    std::size_t qubit_params = 0;
    std::size_t angle_params = 0;
    std::size_t cost = 0;
};

class ProgramGenerator {
public:
    ProgramGenerator(Rng& rng, const ProgramShape& shape) : rng_(rng), shape_(shape) {}

    std::string run() {
        n_ = static_cast<std::size_t>(rng_.integer(1, static_cast<std::int64_t>(shape_.max_qubits)));
        std::string out;
        if (rng_.chance(0.3)) {
            out += "let size " + std::to_string(n_) + "\nregister q[size]\n";
        } else {
            out += "register q[" + std::to_string(n_) + "]\n";
        }
        headers(out);
        out += '\n';
        macros(out);
        std::size_t budget = shape_.max_gates;
        while (budget >= 3) {
            std::size_t used = 0;
            std::string seg = segment(budget, used);
            if (used == 0)
                break;
            out += seg;
            budget -= used;
            if (rng_.chance(0.3))
                break;
        }
        return out;
    }

private:
    void headers(std::string& out) {
        int lets = static_cast<int>(rng_.integer(0, 2));
        for (int i = 0; i < lets; ++i) {
            std::string name = "theta" + std::to_string(i);
            if (rng_.chance(0.3))
                out += "let " + name + " " + std::to_string(rng_.integer(-3, 3)) + "\n";
            else
                out += "let " + name + " " + format_float_literal(rng_.real(-7, 7)) + "\n";
            angle_names_.push_back(name);
        }
        if (rng_.chance(0.4)) {
            out += "let reps 2\n";
            has_reps_ = true;
        }
        if (rng_.chance(0.5)) {
            std::size_t i = rng_.index(n_);
            out += "map anc q[" + std::to_string(i) + "]\n";
            singles_["anc"] = i;
        }
        if (rng_.chance(0.5)) {
            // Random slice; negative bounds and steps included.
            std::int64_t len = static_cast<std::int64_t>(n_);
            std::vector<std::size_t> all(n_);
            std::iota(all.begin(), all.end(), 0);
            for (int tries = 0; tries < 10; ++tries) {
                std::optional<std::int64_t> start, stop, step;
                if (rng_.chance(0.6))
                    start = rng_.integer(-len - 1, len + 1);
                if (rng_.chance(0.6))
                    stop = rng_.integer(-len - 1, len + 1);
                if (rng_.chance(0.6)) {
                    step = rng_.integer(-2, 2);
                    if (*step == 0)
                        step = 1;
                }
                auto picked = slice(all, start, stop, step);
                if (picked.empty())
                    continue;
                std::string text = "map arr q[";
                if (start)
                    text += std::to_string(*start);
                text += ':';
                if (stop)
                    text += std::to_string(*stop);
                if (step)
                    text += ':' + std::to_string(*step);
                out += text + "]\n";
                arrays_["arr"] = picked;
                break;
            }
        } else if (rng_.chance(0.3)) {
            out += "map all q\n";
            std::vector<std::size_t> all(n_);
            std::iota(all.begin(), all.end(), 0);
            arrays_["all"] = all;
        }
    }

    // Straightforward Python slicing, used only to know which offsets the
    // generated alias covers.
    static std::vector<std::size_t> slice(const std::vector<std::size_t>& items, std::optional<std::int64_t> start,
                                          std::optional<std::int64_t> stop, std::optional<std::int64_t> step) {
        auto len = static_cast<std::int64_t>(items.size());
        std::int64_t st = step.value_or(1);
        std::vector<std::size_t> out;
        for (std::int64_t i = 0; i < len; ++i) {
            std::int64_t idx = st > 0 ? i : len - 1 - i;
            auto norm = [&](std::int64_t v) { return v < 0 ? v + len : v; };
            std::int64_t lo = start ? norm(*start) : (st > 0 ? 0 : len - 1);
            bool inside = st > 0 ? idx >= lo && (!stop || idx < norm(*stop)) : idx <= lo && (!stop || idx > norm(*stop));
            if (inside && ((idx - lo) % st) == 0)
                out.push_back(items[static_cast<std::size_t>(idx)]);
        }
        return out;
    }

    // Spellings that resolve to offset `q` at top level.
    std::string qubit_text(std::size_t q) {
        std::vector<std::string> forms{"q[" + std::to_string(q) + "]"};
        for (const auto& [name, off] : singles_)
            if (off == q)
                forms.push_back(name);
        for (const auto& [name, offs] : arrays_)
            for (std::size_t i = 0; i < offs.size(); ++i)
                if (offs[i] == q)
                    forms.push_back(name + "[" + std::to_string(i) + "]");
        return rng_.pick(forms);
    }

    std::string angle_text() {
        if (!angle_names_.empty() && rng_.chance(0.3))
            return rng_.pick(angle_names_);
        if (rng_.chance(0.1))
            return std::to_string(rng_.integer(-4, 4));
        return format_float_literal(rng_.real(-7, 7));
    }

    std::string single_gate(const std::string& qubit) {
        if (rng_.chance(0.5))
            return rng_.pick(one_qubit_fixed) + " " + qubit;
        if (rng_.chance(0.1))
            return "I_Sx " + qubit;
        return rng_.pick(one_qubit_angle) + " " + qubit + " " + angle_text();
    }

    std::string two_qubit_gate(const std::string& a, const std::string& b) {
        if (rng_.chance(0.4))
            return "Sxx " + a + " " + b;
        return "MS " + a + " " + b + " " + angle_text() + " " + angle_text();
    }

    void macros(std::string& out) {
        int count = static_cast<int>(rng_.integer(0, 2));
        for (int m = 0; m < count; ++m) {
            Macro mac;
            mac.name = "mac" + std::to_string(m);
            mac.qubit_params = static_cast<std::size_t>(rng_.integer(1, std::min<std::int64_t>(2, static_cast<std::int64_t>(n_))));
            mac.angle_params = static_cast<std::size_t>(rng_.integer(0, 1));
            std::vector<std::string> qp, ap;
            std::string header = "macro " + mac.name;
            for (std::size_t i = 0; i < mac.qubit_params; ++i) {
                qp.push_back("a" + std::to_string(i));
                header += " " + qp.back();
            }
            for (std::size_t i = 0; i < mac.angle_params; ++i) {
                ap.push_back("t" + std::to_string(i));
                header += " " + ap.back();
            }
            std::string body;
            int stmts = static_cast<int>(rng_.integer(1, 3));
            for (int s = 0; s < stmts; ++s) {
                std::string sep = rng_.chance(0.5) ? "\n    " : "; ";
                if (qp.size() == 2 && rng_.chance(0.3)) {
                    body += sep + two_qubit_gate(qp[0], qp[1]);
                    mac.cost += 1;
                } else if (!ap.empty() && rng_.chance(0.5)) {
                    body += sep + rng_.pick(one_qubit_angle) + " " + rng_.pick(qp) + " " + ap[0];
                    mac.cost += 1;
                } else if (!macros_.empty() && rng_.chance(0.3)) {
                    const Macro& callee = rng_.pick(macros_);
                    if (callee.qubit_params <= qp.size()) {
                        std::string call = callee.name;
                        for (std::size_t i = 0; i < callee.qubit_params; ++i)
                            call += " " + qp[i];
                        for (std::size_t i = 0; i < callee.angle_params; ++i)
                            call += " " + (ap.empty() ? angle_text() : ap[0]);
                        body += sep + call;
                        mac.cost += callee.cost;
                    }
                } else {
                    body += sep + single_gate(rng_.pick(qp));
                    mac.cost += 1;
                }
            }
            if (ap.size() == 1 && body.find(" t0") == std::string::npos) {
                body += "\n    Rz " + qp[0] + " t0";
                mac.cost += 1;
            }
            out += header + " {" + body + "\n}\n";
            if (mac.cost > 0)
                macros_.push_back(mac);
        }
    }

    std::string call_macro(const Macro& m, std::size_t& used) {
        std::vector<std::size_t> order(n_);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng_.engine());
        std::string text = m.name;
        for (std::size_t i = 0; i < m.qubit_params; ++i)
            text += " " + qubit_text(order[i]);
        for (std::size_t i = 0; i < m.angle_params; ++i)
            text += " " + angle_text();
        used += m.cost;
        return text;
    }

    // One statement costing at most `budget` primitives.
    std::string statement(std::size_t budget, std::size_t depth, std::size_t& used) {
        double r = rng_.real(0, 1);
        if (r < 0.15 && depth < shape_.max_loop_depth && budget >= 2) {
            std::int64_t count = rng_.integer(1, 3);
            std::string count_text = std::to_string(count);
            if (has_reps_ && rng_.chance(0.3)) {
                count = 2;
                count_text = "reps";
            }
            std::size_t inner_budget = budget / static_cast<std::size_t>(count);
            if (inner_budget == 0)
                return single(used);
            std::size_t inner_used = 0;
            std::string body = sequence(inner_budget, depth + 1, inner_used);
            if (inner_used == 0)
                return single(used);
            used += inner_used * static_cast<std::size_t>(count);
            return "loop " + count_text + " {" + body + "}";
        }
        if (r < 0.35 && budget >= 2)
            return parallel(budget, used);
        if (r < 0.45 && budget >= 2) {
            std::size_t inner_used = 0;
            std::string body = sequence(budget, depth, inner_used);
            used += inner_used;
            if (inner_used == 0)
                return single(used);
            // Sequential blocks cannot nest directly; wrap with a
            // parallel block when at sequential level.
            return "< {" + body + "} >";
        }
        if (r < 0.6 && !macros_.empty()) {
            const Macro& m = rng_.pick(macros_);
            if (m.cost <= budget && m.qubit_params <= n_)
                return call_macro(m, used);
        }
        if (r < 0.7 && n_ >= 2) {
            std::vector<std::size_t> order(n_);
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng_.engine());
            used += 1;
            return two_qubit_gate(qubit_text(order[0]), qubit_text(order[1]));
        }
        return single(used);
    }

    std::string single(std::size_t& used) {
        used += 1;
        return single_gate(qubit_text(rng_.index(n_)));
    }

    std::string parallel(std::size_t budget, std::size_t& used) {
        if (n_ >= 2 && rng_.chance(0.15)) {
            used += 1;
            return "< " + two_qubit_gate(qubit_text(0), qubit_text(1)) + " >";
        }
        std::vector<std::size_t> order(n_);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng_.engine());
        std::size_t lanes = static_cast<std::size_t>(rng_.integer(1, static_cast<std::int64_t>(n_)));
        std::string text = "<";
        std::size_t spent = 0;
        for (std::size_t l = 0; l < lanes && spent < budget; ++l) {
            std::string lane;
            std::size_t q = order[l];
            if (budget - spent >= 2 && rng_.chance(0.3)) {
                lane = "{ " + single_gate(qubit_text(q)) + "; " + single_gate(qubit_text(q)) + " }";
                spent += 2;
            } else {
                lane = single_gate(qubit_text(q));
                spent += 1;
            }
            text += (l == 0 ? " " : rng_.chance(0.5) ? " | " : "\n    ") + lane;
        }
        used += spent;
        return text + " >";
    }

    std::string sequence(std::size_t budget, std::size_t depth, std::size_t& used) {
        std::string text;
        int count = static_cast<int>(rng_.integer(1, 4));
        for (int i = 0; i < count && used < budget; ++i) {
            std::size_t step = 0;
            std::string s = statement(budget - used, depth, step);
            used += step;
            text += (rng_.chance(0.5) ? "\n    " : " ") + s + (rng_.chance(0.5) ? ";" : "\n");
        }
        return text;
    }

    std::string segment(std::size_t budget, std::size_t& used) {
        bool looped = rng_.chance(0.3);
        std::int64_t reps = looped ? rng_.integer(1, 3) : 1;
        std::size_t per = budget / static_cast<std::size_t>(reps);
        if (per < 3)
            return {};
        std::size_t inner = 0;
        std::string body = sequence(per - 2, looped ? 1 : 0, inner);
        std::string text = "prepare_all\n" + body + "\nmeasure_all\n";
        used = (inner + 2) * static_cast<std::size_t>(reps);
        if (looped)
            return "loop " + std::to_string(reps) + " {\n" + text + "}\n";
        return text;
    }

    Rng& rng_;
    ProgramShape shape_;
    std::size_t n_ = 1;
    std::vector<std::string> angle_names_;
    bool has_reps_ = false;
    std::map<std::string, std::size_t> singles_;
    std::map<std::string, std::vector<std::size_t>> arrays_;
    std::vector<Macro> macros_;
};

std::shared_ptr<const GateDefinition> share(const GateSet& gates, const std::string& name) {
    return std::make_shared<const GateDefinition>(*gates.find(name));
}

class CircuitGenerator {
public:
    CircuitGenerator(Rng& rng, const GateSet& gates) : rng_(rng), gates_(gates) {}

    PrimitiveGate one(std::size_t q) {
        PrimitiveGate g;
        if (rng_.chance(0.6)) {
            g.definition = share(gates_, rng_.pick(one_qubit_fixed));
        } else {
            g.definition = share(gates_, rng_.pick(one_qubit_angle));
            g.angles.push_back(rng_.real(-6, 6));
        }
        g.qubits = {q};
        return g;
    }

    PrimitiveGate two(std::size_t a, std::size_t b) {
        PrimitiveGate g;
        g.definition = share(gates_, "Sxx");
        g.qubits = {a, b};
        return g;
    }

    // Block of `kind` over the allowed qubits, with at most `budget` items.
    FlatBlock block(ast::BlockKind kind, std::vector<std::size_t> qubits, std::size_t& budget, int depth) {
        FlatBlock b;
        b.kind = kind;
        if (kind == ast::BlockKind::parallel) {
            std::shuffle(qubits.begin(), qubits.end(), rng_.engine());
            std::size_t pos = 0;
            while (pos < qubits.size() && budget > 0) {
                std::size_t width = std::min<std::size_t>(qubits.size() - pos, static_cast<std::size_t>(rng_.integer(1, 2)));
                std::vector<std::size_t> lane(qubits.begin() + static_cast<std::ptrdiff_t>(pos),
                                              qubits.begin() + static_cast<std::ptrdiff_t>(pos + width));
                pos += width;
                b.items.push_back(item(ast::BlockKind::parallel, lane, budget, depth));
                if (rng_.chance(0.3))
                    break;
            }
        } else {
            int count = static_cast<int>(rng_.integer(1, 4));
            for (int i = 0; i < count && budget > 0; ++i)
                b.items.push_back(item(ast::BlockKind::sequential, qubits, budget, depth));
        }
        return b;
    }

    FlatItem item(ast::BlockKind parent, const std::vector<std::size_t>& qubits, std::size_t& budget, int depth) {
        if (depth < 4 && budget > 2 && rng_.chance(0.35)) {
            auto kind = parent == ast::BlockKind::sequential ? ast::BlockKind::parallel : ast::BlockKind::sequential;
            FlatBlock inner = block(kind, qubits, budget, depth + 1);
            if (!inner.items.empty())
                return FlatItem{std::move(inner)};
        }
        --budget;
        if (qubits.size() >= 2 && rng_.chance(0.3))
            return FlatItem{two(qubits[0], qubits[1])};
        return FlatItem{one(rng_.pick(qubits))};
    }

private:
    Rng& rng_;
    const GateSet& gates_;
};

}  // namespace

std::string random_program(Rng& rng, const ProgramShape& shape) { return ProgramGenerator(rng, shape).run(); }

FlatCircuit random_circuit(Rng& rng, const GateSet& gates, std::size_t qubits, std::size_t max_items) {
    std::vector<std::size_t> all(qubits);
    std::iota(all.begin(), all.end(), 0);
    FlatCircuit c;
    c.qubit_count = qubits;
    std::size_t budget = max_items;
    c.root = CircuitGenerator(rng, gates).block(ast::BlockKind::sequential, all, budget, 0);
    return c;
}

GateSet random_durations(Rng& rng) {
    GateSet gates = builtin_gateset();
    std::vector<std::string> names;
    for (const auto& [name, def] : gates)
        if (def.kind != UnitaryKind::idle)
            names.push_back(name);
    for (const auto& name : names)
        gates.set_duration(name, static_cast<double>(rng.integer(1, 5)));
    return gates;
}

MeasurementRecord random_record(Rng& rng) {
    MeasurementRecord r;
    auto width = static_cast<std::size_t>(rng.integer(0, 10));
    auto lines = rng.integer(0, 20);
    for (std::int64_t i = 0; i < lines; ++i) {
        std::string bits(width, '0');
        for (auto& c : bits)
            c = rng.chance(0.5) ? '1' : '0';
        r.bitstrings.push_back(bits);
    }
    return r;
}

std::vector<Complex> random_state(Rng& rng, std::size_t qubits) {
    std::normal_distribution<double> gauss;
    std::vector<Complex> v(std::size_t{1} << qubits);
    double norm = 0;
    for (auto& a : v) {
        a = {gauss(rng.engine()), gauss(rng.engine())};
        norm += std::norm(a);
    }
    for (auto& a : v)
        a /= std::sqrt(norm);
    return v;
}

Dense random_unitary(Rng& rng, std::size_t dim) {
    std::normal_distribution<double> gauss;
    std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
    for (auto& c : cols)
        for (auto& x : c)
            x = {gauss(rng.engine()), gauss(rng.engine())};
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            Complex dot = 0;
            for (std::size_t i = 0; i < dim; ++i)
                dot += std::conj(cols[k][i]) * cols[j][i];
            for (std::size_t i = 0; i < dim; ++i)
                cols[j][i] -= dot * cols[k][i];
        }
        double n = 0;
        for (auto& x : cols[j])
            n += std::norm(x);
        for (auto& x : cols[j])
            x /= std::sqrt(n);
    }
    Dense u(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            u(r, c) = cols[c][r];
    return u;
}

}  // namespace jaqal::testing
