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

#include <gtest/gtest.h>

#include <algorithm>

#include "jaqal/scheduler.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"
#include "support/timing.hpp"

namespace jaqal {
namespace {

using testing::flatten;

PrimitiveGate prim(const GateSet& gates, const std::string& name, std::vector<std::size_t> qubits) {
    PrimitiveGate g;
    g.definition = std::make_shared<const GateDefinition>(*gates.find(name));
    g.qubits = std::move(qubits);
    return g;
}

TEST(Scheduler, PadTimingExample) {
    GateSet gates = builtin_gateset();
    auto result = schedule(flatten("register q[2]\n< Px q[0] | { Sx q[1] ; Sy q[1] } >\n"), gates);
    ASSERT_TRUE(result.ok());
    const auto& t = result.timeline;
    EXPECT_EQ(t.total_duration, 2.0);
    ASSERT_EQ(t.idles.size(), 1U);
    EXPECT_EQ(t.idles[0].qubit, 0U);
    EXPECT_EQ(t.idles[0].start, 1.0);
    EXPECT_EQ(t.idles[0].duration, 1.0);
    EXPECT_EQ(dump(t), "0 1 Px 0\n0 1 Sx 1\n1 1 I_pad 0\n1 1 Sy 1\ntotal 2\n");
}

TEST(Scheduler, ParallelGatesStartTogether) {
    GateSet gates = builtin_gateset();
    auto c = flatten("register q[3]\n< Rx q[1] 0.1 | Sx q[2] >\n");
    auto t = schedule(c, gates).timeline;
    ASSERT_EQ(t.entries.size(), 2U);
    EXPECT_EQ(t.entries[0].start, 0.0);
    EXPECT_EQ(t.entries[1].start, 0.0);
    EXPECT_EQ(t.total_duration, 1.0);
    EXPECT_TRUE(t.idles.empty());

    gates.set_duration("Rx", 0.25);
    t = schedule(c, gates).timeline;
    ASSERT_EQ(t.idles.size(), 1U);
    EXPECT_EQ(t.idles[0].qubit, 1U);
    EXPECT_EQ(t.idles[0].start, 0.25);
    EXPECT_EQ(t.idles[0].duration, 0.75);
}

TEST(Scheduler, EmptyProgram) {
    auto r = schedule(flatten(""), builtin_gateset());
    EXPECT_EQ(dump(r.timeline), "total 0\n");
}

TEST(Scheduler, SequentialDurationsAdd) {
    auto r = schedule(flatten("register q[2]\nprepare_all\nSxx q[0] q[1]\nSx q[0]\nmeasure_all\n"), builtin_gateset());
    EXPECT_EQ(r.timeline.total_duration, 51.0);
    EXPECT_EQ(r.timeline.entries[0].occupied, (std::vector<std::size_t>{0, 1}));
}

TEST(Scheduler, OverlapIsATimingConflict) {
    GateSet gates = builtin_gateset();
    FlatCircuit c;
    c.qubit_count = 1;
    FlatBlock par;
    par.kind = ast::BlockKind::parallel;
    par.items.push_back(FlatItem{prim(gates, "Sx", {0})});
    par.items.push_back(FlatItem{prim(gates, "Sy", {0})});
    c.root.items.push_back(FlatItem{par});
    auto r = schedule(c, gates);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.diagnostics[0].code, codes::timing_conflict);
    EXPECT_NE(r.diagnostics[0].message.find("q[0]"), std::string::npos);
    EXPECT_NE(r.diagnostics[0].message.find("Sx"), std::string::npos);
    EXPECT_NE(r.diagnostics[0].message.find("Sy"), std::string::npos);
    EXPECT_FALSE(total_duration(c, gates).ok());
}

TEST(Scheduler, GlobalGateConflictsWithEverything) {
    GateSet gates = builtin_gateset();
    FlatCircuit c;
    c.qubit_count = 2;
    FlatBlock par;
    par.kind = ast::BlockKind::parallel;
    par.items.push_back(FlatItem{prim(gates, "measure_all", {})});
    par.items.push_back(FlatItem{prim(gates, "Sx", {1})});
    c.root.items.push_back(FlatItem{par});
    EXPECT_FALSE(schedule(c, gates).ok());
}

FlatCircuit concat(const FlatCircuit& a, const FlatCircuit& b, ast::BlockKind kind) {
    FlatCircuit out;
    out.qubit_count = std::max(a.qubit_count, b.qubit_count);
    FlatBlock block;
    block.kind = kind;
    block.items.push_back(FlatItem{a.root});
    block.items.push_back(FlatItem{b.root});
    out.root.items.push_back(FlatItem{block});
    return out;
}

// Moves every qubit of `c` up by `offset`.
FlatCircuit shifted(FlatCircuit c, std::size_t offset) {
    std::function<void(FlatBlock&)> walk = [&](FlatBlock& b) {
        for (auto& item : b.items) {
            if (auto g = std::get_if<PrimitiveGate>(&item.node))
                for (auto& q : g->qubits)
                    q += offset;
            else
                walk(std::get<FlatBlock>(item.node));
        }
    };
    walk(c.root);
    c.qubit_count += offset;
    return c;
}

TEST(SchedulerProperties, AdditivityMaximalityAndPadding) {
    testing::Rng rng(5150);
    for (int i = 0; i < 200; ++i) {
        GateSet gates = testing::random_durations(rng);
        auto a = testing::random_circuit(rng, gates, 3, 12);
        auto b = testing::random_circuit(rng, gates, 3, 12);
        double ta = total_duration(a, gates).total;
        double tb = total_duration(b, gates).total;

        auto seq = concat(a, b, ast::BlockKind::sequential);
        EXPECT_EQ(schedule(seq, gates).timeline.total_duration, ta + tb);

        auto par = concat(a, shifted(b, 3), ast::BlockKind::parallel);
        auto r = schedule(par, gates);
        ASSERT_TRUE(r.ok()) << testing::joined(r.diagnostics);
        EXPECT_EQ(r.timeline.total_duration, std::max(ta, tb));

        for (const FlatCircuit* c : {&a, &seq, &par}) {
            auto s = schedule(*c, gates);
            ASSERT_TRUE(s.ok());
            EXPECT_EQ(testing::check_padding(*c, gates, s.timeline), "");
            EXPECT_TRUE(testing::conflicting_qubits(s.timeline).empty());
            double last = 0;
            for (const auto& e : s.timeline.entries)
                last = std::max(last, e.start + e.duration);
            EXPECT_EQ(s.timeline.total_duration, last);
            EXPECT_EQ(total_duration(*c, gates).total, s.timeline.total_duration);
        }
    }
}

TEST(SchedulerProperties, ConflictsMatchPairwiseOracle) {
    testing::Rng rng(8);
    GateSet gates = builtin_gateset();
    int conflicted = 0;
    for (int i = 0; i < 200; ++i) {
        // Overlaying two unrelated circuits in parallel creates clashes.
        auto a = testing::random_circuit(rng, gates, 3, 6);
        auto b = testing::random_circuit(rng, gates, 3, 6);
        auto par = concat(a, b, ast::BlockKind::parallel);
        auto r = schedule(par, gates);
        auto oracle = testing::conflicting_qubits(r.timeline);
        std::set<std::size_t> reported;
        for (const auto& d : r.diagnostics)
            for (std::size_t q = 0; q < 3; ++q)
                if (d.message.find("q[" + std::to_string(q) + "]") != std::string::npos)
                    reported.insert(q);
        EXPECT_EQ(reported, oracle);
        conflicted += oracle.empty() ? 0 : 1;
    }
    EXPECT_GT(conflicted, 50);
}

}  // namespace
}  // namespace jaqal
