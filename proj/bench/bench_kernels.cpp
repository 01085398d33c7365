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

// Serial reference kernels against their OpenMP counterparts.
//
//   ./build/bench/bench_kernels --benchmark_filter=apply_2q

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "jaqal/kernels.hpp"

namespace {

using namespace jaqal::kernels;

std::vector<Complex> uniform_state(std::size_t qubits) {
    std::size_t n = std::size_t{1} << qubits;
    return std::vector<Complex>(n, Complex(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
}

// Rx(pi/3) and its tensor square: dense enough that no entry is trivial.
const Matrix2 rx = {Complex(0.8660254037844387, 0), Complex(0, -0.5), Complex(0, -0.5),
                    Complex(0.8660254037844387, 0)};

Matrix4 rx_squared() {
    Matrix4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            m[static_cast<std::size_t>(4 * r + c)] = rx[static_cast<std::size_t>(2 * (r >> 1) + (c >> 1))] *
                                                     rx[static_cast<std::size_t>(2 * (r & 1) + (c & 1))];
    return m;
}

template <void (*Apply)(std::span<Complex>, std::size_t, const Matrix2&)>
void apply_1q(benchmark::State& state) {
    auto qubits = static_cast<std::size_t>(state.range(0));
    auto amps = uniform_state(qubits);
    for (auto _ : state) {
        Apply(amps, qubits / 2, rx);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <void (*Apply)(std::span<Complex>, std::size_t, std::size_t, const Matrix4&)>
void apply_2q(benchmark::State& state) {
    auto qubits = static_cast<std::size_t>(state.range(0));
    auto amps = uniform_state(qubits);
    const Matrix4 m = rx_squared();
    for (auto _ : state) {
        Apply(amps, 0, qubits - 1, m);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <double (*Norm)(std::span<const Complex>)>
void norm(benchmark::State& state) {
    auto amps = uniform_state(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(Norm(amps));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

void sizes(benchmark::internal::Benchmark* b) {
    for (int q = 8; q <= 22; q += 2)
        b->Arg(q);
}

BENCHMARK(apply_1q<serial::apply_1q>)->Name("serial/apply_1q")->Apply(sizes);
BENCHMARK(apply_1q<omp::apply_1q>)->Name("omp/apply_1q")->Apply(sizes);
BENCHMARK(apply_2q<serial::apply_2q>)->Name("serial/apply_2q")->Apply(sizes);
BENCHMARK(apply_2q<omp::apply_2q>)->Name("omp/apply_2q")->Apply(sizes);
BENCHMARK(norm<serial::norm_squared>)->Name("serial/norm")->Apply(sizes);
BENCHMARK(norm<omp::norm_squared>)->Name("omp/norm")->Apply(sizes);

}  // namespace

BENCHMARK_MAIN();
