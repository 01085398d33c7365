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

#include <cmath>
#include <map>
#include <numbers>

#include "jaqal/simulator.hpp"
#include "support/dense.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

namespace jaqal {
namespace {

using testing::flatten;

const GateSet& gates() {
    static const GateSet g = builtin_gateset();
    return g;
}

MeasurementRecord run_source(std::string_view src, std::uint64_t seed = 0) {
    return run(flatten(src), gates(), {seed, false, {}});
}

TEST(Simulator, OutputExampleIsExact) {
    const char* src =
        "register q[2]\nloop 2 {\n prepare_all\n Px q[0]\n measure_all\n}\n"
        "loop 2 {\n prepare_all\n Px q[1]\n measure_all\n}\n";
    for (std::uint64_t seed : {0ULL, 1ULL, 12345ULL})
        EXPECT_EQ(run_source(src, seed).bitstrings, (std::vector<std::string>{"10", "10", "01", "01"}));
}

TEST(Simulator, TrivialMeasurement) {
    EXPECT_EQ(run_source("register q[3]\nprepare_all\nmeasure_all\n").bitstrings, std::vector<std::string>{"000"});
}

TEST(Simulator, LittleEndianBitstrings) {
    EXPECT_EQ(run_source("register q[2]\nprepare_all\nPx q[0]\nmeasure_all\n").bitstrings,
              std::vector<std::string>{"10"});
    EXPECT_EQ(bitstring(0b110, 3), "011");
}

TEST(Simulator, BellSamplingFrequencies) {
    auto c = flatten("register q[2]\nloop 10000 {\n prepare_all\n Sxx q[0] q[1]\n measure_all\n}\n");
    auto r0 = run(c, gates(), {0, false, {}});
    std::map<std::string, int> counts;
    for (const auto& b : r0.bitstrings)
        ++counts[b];
    EXPECT_NEAR(counts["00"] / 10000.0, 0.5, 0.02);
    EXPECT_NEAR(counts["11"] / 10000.0, 0.5, 0.02);
    EXPECT_EQ(counts["01"], 0);
    EXPECT_EQ(counts["10"], 0);
    EXPECT_EQ(run(c, gates(), {0, false, {}}), r0);
    EXPECT_NE(run(c, gates(), {1, false, {}}), r0);
}

TEST(Simulator, OperationsOnDestroyedStateFail) {
    for (const char* tail : {"Sx q[0]\n", "measure_all\n", "I_Sx q[0]\n"}) {
        try {
            run_source(std::string("register q[1]\nprepare_all\nmeasure_all\n") + tail);
            FAIL() << tail;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), codes::destroyed_state);
            EXPECT_EQ(e.loc().line, 4);
        }
    }
    EXPECT_NO_THROW(run_source("register q[1]\nprepare_all\nmeasure_all\nprepare_all\nSx q[0]\nmeasure_all\n"));
    // The initial state is |0...0>, so gates before any prepare_all are fine.
    EXPECT_EQ(run_source("register q[1]\nPx q[0]\nmeasure_all\n").bitstrings, std::vector<std::string>{"1"});
}

TEST(Simulator, QubitCap) {
    EXPECT_THROW(QuantumState(max_simulated_qubits + 1), Error);
    try {
        run_source("register q[25]\nprepare_all\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), codes::too_many_qubits);
    }
}

TEST(Probabilities, Examples) {
    auto d = probabilities(flatten("register q[2]\nprepare_all\nPx q[0]\nmeasure_all\n"), gates());
    ASSERT_EQ(d.size(), 1U);
    auto s = d[0].support();
    ASSERT_EQ(s.size(), 1U);
    EXPECT_EQ(s[0].first, "10");
    EXPECT_NEAR(s[0].second, 1.0, 1e-12);

    auto z = probabilities(flatten("register q[4]\nprepare_all\nmeasure_all\n"), gates());
    EXPECT_EQ(z[0].support()[0].first, "0000");

    double theta = 0.9;
    auto rx = probabilities(flatten("register q[1]\nprepare_all\nRx q[0] 0.9\nmeasure_all\n"), gates());
    EXPECT_NEAR(rx[0].probabilities[0], std::pow(std::cos(theta / 2), 2), 1e-12);
    EXPECT_NEAR(rx[0].probabilities[1], std::pow(std::sin(theta / 2), 2), 1e-12);
}

TEST(Probabilities, ShareTheDestroyedStateRule) {
    // The branch kept after a measurement can never be observed: only
    // prepare_all may follow, and it resets the state.
    auto c = flatten("register q[1]\nprepare_all\nRx q[0] 2.5\nmeasure_all\nmeasure_all\n");
    EXPECT_THROW(probabilities(c, gates()), Error);
    auto ok = probabilities(flatten("register q[1]\nRx q[0] 2.5\nmeasure_all\nprepare_all\nmeasure_all\n"), gates());
    ASSERT_EQ(ok.size(), 2U);
    EXPECT_NEAR(ok[1].probabilities[0], 1.0, 1e-15);
}

TEST(Probabilities, GlobalPhaseInsensitive) {
    auto px = probabilities(flatten("register q[2]\nprepare_all\nSy q[1]\nPx q[0]\nmeasure_all\n"), gates());
    auto rx = probabilities(flatten("register q[2]\nprepare_all\nSy q[1]\nRx q[0] 3.141592653589793\nmeasure_all\n"),
                            gates());
    for (std::size_t i = 0; i < 4; ++i)
        EXPECT_NEAR(px[0].probabilities[i], rx[0].probabilities[i], 1e-12);
}

TEST(ApplyUnitary, IdentityAndIndexOrdering) {
    QuantumState s(2);
    auto same = apply_unitary(s, UnitaryMatrix::identity(2), std::vector<std::size_t>{1});
    EXPECT_EQ(std::vector<Complex>(same.amplitudes().begin(), same.amplitudes().end()),
              std::vector<Complex>(s.amplitudes().begin(), s.amplitudes().end()));
    auto px = unitary_of(*gates().find("Px"), {});
    auto flipped = apply_unitary(s, px, std::vector<std::size_t>{1});
    EXPECT_NEAR(std::abs(flipped.amplitudes()[2]), 1.0, 1e-15);
}

TEST(ApplyUnitary, RejectsBadShapes) {
    QuantumState s(2);
    auto px = unitary_of(*gates().find("Px"), {});
    EXPECT_THROW(s.apply(px, std::vector<std::size_t>{0, 1}), Error);
    EXPECT_THROW(s.apply(UnitaryMatrix::identity(4), std::vector<std::size_t>{1, 1}), Error);
    EXPECT_THROW(s.apply(px, std::vector<std::size_t>{2}), Error);
}

TEST(ApplyUnitary, SxxTwiceEqualsItsSquare) {
    testing::Rng rng(6);
    auto sxx = unitary_of(*gates().find("Sxx"), {});
    auto square = sxx * sxx;
    for (int trial = 0; trial < 20; ++trial) {
        auto v = testing::random_state(rng, 3);
        QuantumState a(3), b(3);
        std::copy(v.begin(), v.end(), a.amplitudes().begin());
        std::copy(v.begin(), v.end(), b.amplitudes().begin());
        std::vector<std::size_t> qs{2, 0};
        a.apply(sxx, qs);
        a.apply(sxx, qs);
        b.apply(square, qs);
        for (std::size_t i = 0; i < 8; ++i)
            EXPECT_LT(std::abs(a.amplitudes()[i] - b.amplitudes()[i]), 1e-12);
    }
}

TEST(ApplyUnitary, MatchesDenseOracleOnRandomUnitaries) {
    testing::Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.integer(2, 3));
        std::size_t a = rng.index(n), b = (a + 1 + rng.index(n - 1)) % n;
        bool two = rng.chance(0.5);
        auto u = testing::random_unitary(rng, two ? 4 : 2);
        UnitaryMatrix m{two ? 4 : 2, u.a};
        std::vector<std::size_t> qs = two ? std::vector<std::size_t>{a, b} : std::vector<std::size_t>{a};
        auto v = testing::random_state(rng, n);
        QuantumState s(n);
        std::copy(v.begin(), v.end(), s.amplitudes().begin());
        s.apply(m, qs);
        auto expected = testing::apply(testing::embed(u, qs, n), v);
        for (std::size_t i = 0; i < v.size(); ++i)
            EXPECT_LT(std::abs(s.amplitudes()[i] - expected[i]), 1e-12);
    }
}

TEST(SimulatorProperties, NormPreservedOverLongCircuits) {
    testing::Rng rng(9);
    for (int trial = 0; trial < 5; ++trial) {
        auto c = testing::random_circuit(rng, gates(), 4, 1000);
        QuantumState s(4);
        for_each_primitive(c.root, [&](const PrimitiveGate& g) {
            s.apply(unitary_of(*g.definition, g.angles), g.qubits);
            EXPECT_NEAR(s.norm_squared(), 1.0, 1e-9);
        });
    }
}

TEST(SimulatorProperties, QuantizedAnglesAreReported) {
    auto c = flatten("register q[1]\nprepare_all\nRx q[0] 0.1234567890123\nRz q[0] 100.0\nmeasure_all\n");
    std::vector<double> requested, applied;
    RunOptions opts{0, true, [&](const PrimitiveGate& g, std::span<const double> a) {
                        requested.insert(requested.end(), g.angles.begin(), g.angles.end());
                        applied.insert(applied.end(), a.begin(), a.end());
                    }};
    run(c, gates(), opts);
    ASSERT_EQ(applied.size(), 2U);
    for (std::size_t i = 0; i < applied.size(); ++i) {
        EXPECT_EQ(applied[i], quantize_angle(requested[i]));
        EXPECT_LE(std::abs(applied[i] - wrap_angle(requested[i])), 2 * std::numbers::pi / std::ldexp(1.0, 39));
    }
}

TEST(Sampling, UnitIntervalAndCumulativeChoice) {
    EXPECT_EQ(unit_interval(0), 0.0);
    EXPECT_LT(unit_interval(~0ULL), 1.0);
    std::vector<double> p{0.25, 0.0, 0.75};
    EXPECT_EQ(sample_index(p, 0.0), 0U);
    EXPECT_EQ(sample_index(p, 0.2499), 0U);
    EXPECT_EQ(sample_index(p, 0.25), 2U);
    EXPECT_EQ(sample_index(p, 0.9999999), 2U);
    // Rounding slack goes to the last outcome with mass.
    std::vector<double> short_sum{0.5, 0.4999999, 0.0};
    EXPECT_EQ(sample_index(short_sum, 0.99999999), 1U);
}

}  // namespace
}  // namespace jaqal
