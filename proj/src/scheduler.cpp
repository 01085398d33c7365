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

#include "jaqal/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "jaqal/format.hpp"

namespace jaqal {

namespace {

using ast::BlockKind;

bool before(double a, double b) { return a < b - 1e-9 * std::max(1.0, std::abs(b)); }

double gate_duration(const PrimitiveGate& g, const GateSet& gates) {
    if (const GateDefinition* def = gates.find(g.name()))
        return def->duration;
    return g.definition->duration;
}

std::vector<std::size_t> occupied_qubits(const PrimitiveGate& g, std::size_t qubit_count) {
    if (!g.definition->acts_on_all_qubits())
        return g.qubits;
    std::vector<std::size_t> all(qubit_count);
    for (std::size_t q = 0; q < qubit_count; ++q)
        all[q] = q;
    return all;
}

struct Busy {
    double start;
    double end;
    std::size_t entry;
};

// One diagnostic per qubit, for the first overlapping pair.
std::vector<Diagnostic> find_conflicts(const std::vector<TimelineEntry>& entries) {
    std::map<std::size_t, std::vector<Busy>> per_qubit;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        if (e.duration <= 0)
            continue;
        for (auto q : e.occupied)
            per_qubit[q].push_back({e.start, e.start + e.duration, i});
    }
    std::vector<Diagnostic> out;
    for (auto& [qubit, busy] : per_qubit) {
        std::stable_sort(busy.begin(), busy.end(), [](const Busy& a, const Busy& b) { return a.start < b.start; });
        // `prev` is the latest-ending earlier interval: the one that can overlap.
        std::size_t prev = 0;
        for (std::size_t k = 1; k < busy.size(); ++k) {
            if (before(busy[k].start, busy[prev].end)) {
                const auto& a = entries[busy[prev].entry];
                const auto& b = entries[busy[k].entry];
                out.push_back({Severity::error, b.gate.loc, std::string(codes::timing_conflict),
                               "qubit q[" + std::to_string(qubit) + "] is used by '" + a.gate.name() + "' and '" +
                                   b.gate.name() + "' at the same time"});
                break;
            }
            if (busy[k].end > busy[prev].end)
                prev = k;
        }
    }
    return out;
}

class Scheduler {
public:
    Scheduler(const GateSet& gates, std::size_t qubit_count, bool pad)
        : gates_(gates), qubit_count_(qubit_count), pad_(pad) {}

    Timeline timeline;

    double place(const FlatItem& item, double start) {
        if (auto g = std::get_if<PrimitiveGate>(&item.node)) {
            double d = gate_duration(*g, gates_);
            timeline.entries.push_back({*g, start, d, occupied_qubits(*g, qubit_count_)});
            return start + d;
        }
        const auto& block = std::get<FlatBlock>(item.node);
        if (block.kind == BlockKind::sequential) {
            double t = start;
            for (const auto& inner : block.items)
                t = place(inner, t);
            return t;
        }
        std::size_t first_entry = timeline.entries.size();
        std::size_t first_idle = timeline.idles.size();
        double end = start;
        for (const auto& inner : block.items)
            end = std::max(end, place(inner, start));
        if (pad_)
            pad(first_entry, first_idle, start, end);
        return end;
    }

private:
    void pad(std::size_t first_entry, std::size_t first_idle, double start, double end) {
        std::map<std::size_t, std::vector<std::pair<double, double>>> covered;
        for (std::size_t i = first_entry; i < timeline.entries.size(); ++i) {
            const auto& e = timeline.entries[i];
            for (auto q : e.occupied)
                covered[q].emplace_back(e.start, e.start + e.duration);
        }
        for (std::size_t i = first_idle; i < timeline.idles.size(); ++i) {
            const auto& idle = timeline.idles[i];
            covered[idle.qubit].emplace_back(idle.start, idle.start + idle.duration);
        }
        for (auto& [qubit, spans] : covered) {
            std::sort(spans.begin(), spans.end());
            double cursor = start;
            for (auto [s, e] : spans) {
                if (before(cursor, s))
                    timeline.idles.push_back({qubit, cursor, s - cursor});
                cursor = std::max(cursor, e);
            }
            if (before(cursor, end))
                timeline.idles.push_back({qubit, cursor, end - cursor});
        }
    }

    const GateSet& gates_;
    std::size_t qubit_count_;
    bool pad_;
};

double duration_of(const FlatItem& item, const GateSet& gates) {
    if (auto g = std::get_if<PrimitiveGate>(&item.node))
        return gate_duration(*g, gates);
    const auto& block = std::get<FlatBlock>(item.node);
    double total = 0;
    for (const auto& inner : block.items) {
        double d = duration_of(inner, gates);
        total = block.kind == BlockKind::sequential ? total + d : std::max(total, d);
    }
    return total;
}

}  // namespace

ScheduleResult schedule(const FlatCircuit& circuit, const GateSet& gates) {
    Scheduler s(gates, circuit.qubit_count, true);
    FlatItem root{circuit.root};
    s.timeline.total_duration = s.place(root, 0.0);
    ScheduleResult result;
    result.diagnostics = find_conflicts(s.timeline.entries);
    result.timeline = std::move(s.timeline);
    return result;
}

DurationResult total_duration(const FlatCircuit& circuit, const GateSet& gates) {
    DurationResult result;
    double total = 0;
    for (const auto& item : circuit.root.items)
        total += duration_of(item, gates);
    result.total = total;
    // Conflict detection needs start times but not padding.
    Scheduler s(gates, circuit.qubit_count, false);
    for (const auto& item : circuit.root.items)
        s.place(item, 0.0);
    result.diagnostics = find_conflicts(s.timeline.entries);
    return result;
}

std::string dump(const Timeline& timeline) {
    struct Line {
        double start;
        std::size_t qubit;
        std::string text;
    };
    std::vector<Line> lines;
    for (const auto& e : timeline.entries) {
        std::string text = format_real(e.start) + " " + format_real(e.duration) + " " + e.gate.name();
        for (auto q : e.gate.qubits)
            text += " " + std::to_string(q);
        for (auto a : e.gate.angles)
            text += " " + format_float_literal(a);
        lines.push_back({e.start, e.occupied.empty() ? 0 : e.occupied.front(), std::move(text)});
    }
    for (const auto& idle : timeline.idles)
        lines.push_back({idle.start, idle.qubit,
                         format_real(idle.start) + " " + format_real(idle.duration) + " " + pad_idle_name + " " +
                             std::to_string(idle.qubit)});
    std::stable_sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        return a.start != b.start ? a.start < b.start : a.qubit < b.qubit;
    });
    std::string out;
    for (const auto& l : lines)
        out += l.text + '\n';
    out += "total " + format_real(timeline.total_duration) + '\n';
    return out;
}

}  // namespace jaqal
