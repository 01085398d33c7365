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

#include "jaqal/kernels.hpp"
#include "support/dense.hpp"
#include "support/generators.hpp"

namespace jaqal {
namespace {

using kernels::Matrix2;
using kernels::Matrix4;

template <std::size_t N>
std::array<Complex, N> flat(const testing::Dense& d) {
    std::array<Complex, N> out;
    std::copy(d.a.begin(), d.a.end(), out.begin());
    return out;
}

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

TEST(Kernels, OneQubitMatchesKroneckerOracle) {
    testing::Rng rng(1);
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t q = 0; q < n; ++q)
            for (int trial = 0; trial < 10; ++trial) {
                auto u = testing::random_unitary(rng, 2);
                auto state = testing::random_state(rng, n);
                auto expected = testing::apply(testing::embed_kron(u, q, n), state);
                auto serial = state, omp = state;
                kernels::serial::apply_1q(serial, q, flat<4>(u));
                kernels::omp::apply_1q(omp, q, flat<4>(u));
                EXPECT_LT(max_diff(serial, expected), 1e-12);
                EXPECT_LT(max_diff(omp, expected), 1e-12);
            }
}

TEST(Kernels, EntrywiseEmbeddingAgreesWithKronecker) {
    testing::Rng rng(2);
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t q = 0; q < n; ++q) {
            auto u = testing::random_unitary(rng, 2);
            std::size_t qs[] = {q};
            EXPECT_LT(testing::max_abs_diff(testing::embed(u, qs, n), testing::embed_kron(u, q, n)), 1e-15);
        }
}

TEST(Kernels, TwoQubitMatchesDenseOracle) {
    testing::Rng rng(3);
    for (std::size_t n = 2; n <= 3; ++n)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b)
                    continue;
                auto u = testing::random_unitary(rng, 4);
                auto state = testing::random_state(rng, n);
                std::size_t qs[] = {a, b};
                auto expected = testing::apply(testing::embed(u, qs, n), state);
                auto serial = state, omp = state;
                kernels::serial::apply_2q(serial, a, b, flat<16>(u));
                kernels::omp::apply_2q(omp, a, b, flat<16>(u));
                EXPECT_LT(max_diff(serial, expected), 1e-12) << a << b;
                EXPECT_LT(max_diff(omp, expected), 1e-12) << a << b;
            }
}

TEST(Kernels, ParallelEqualsSerialOnLargeStates) {
    testing::Rng rng(4);
    const std::size_t n = 16;
    auto state = testing::random_state(rng, n);
    auto serial = state, omp = state, dispatched = state;
    for (int step = 0; step < 20; ++step) {
        if (step % 2 == 0) {
            auto u = flat<4>(testing::random_unitary(rng, 2));
            std::size_t q = rng.index(n);
            kernels::serial::apply_1q(serial, q, u);
            kernels::omp::apply_1q(omp, q, u);
            kernels::apply_1q(dispatched, q, u);
        } else {
            auto u = flat<16>(testing::random_unitary(rng, 4));
            std::size_t a = rng.index(n), b = (a + 1 + rng.index(n - 1)) % n;
            kernels::serial::apply_2q(serial, a, b, u);
            kernels::omp::apply_2q(omp, a, b, u);
            kernels::apply_2q(dispatched, a, b, u);
        }
    }
    // Same arithmetic per element, so the results are bit-identical.
    EXPECT_EQ(serial, omp);
    EXPECT_EQ(serial, dispatched);
    std::vector<double> ps(serial.size()), po(serial.size());
    kernels::serial::probabilities(serial, ps);
    kernels::omp::probabilities(omp, po);
    EXPECT_EQ(ps, po);
    EXPECT_NEAR(kernels::serial::norm_squared(serial), 1.0, 1e-12);
    EXPECT_NEAR(kernels::omp::norm_squared(omp), kernels::serial::norm_squared(serial), 1e-12);
}

TEST(Kernels, InsertZero) {
    EXPECT_EQ(kernels::insert_zero(0b111, 0), 0b1110U);
    EXPECT_EQ(kernels::insert_zero(0b111, 1), 0b1101U);
    EXPECT_EQ(kernels::insert_zero(0b111, 3), 0b0111U);
}

}  // namespace
}  // namespace jaqal
