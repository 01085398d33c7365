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

#include "jaqal/kernels.hpp"

#include <algorithm>
#include <bit>

namespace jaqal::kernels {

namespace serial {

void apply_1q(std::span<Complex> amps, std::size_t qubit, const Matrix2& m) {
    const std::size_t half = amps.size() / 2;
    const std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t k = 0; k < half; ++k) {
        std::size_t i0 = insert_zero(k, qubit);
        std::size_t i1 = i0 | stride;
        Complex a = amps[i0];
        Complex b = amps[i1];
        amps[i0] = m[0] * a + m[1] * b;
        amps[i1] = m[2] * a + m[3] * b;
    }
}

void apply_2q(std::span<Complex> amps, std::size_t first, std::size_t second, const Matrix4& m) {
    const std::size_t quarter = amps.size() / 4;
    const std::size_t lo = std::min(first, second);
    const std::size_t hi = std::max(first, second);
    const std::size_t bit_first = std::size_t{1} << first;
    const std::size_t bit_second = std::size_t{1} << second;
    for (std::size_t k = 0; k < quarter; ++k) {
        std::size_t base = insert_zero(insert_zero(k, lo), hi);
        const std::size_t idx[4] = {base, base | bit_second, base | bit_first, base | bit_first | bit_second};
        Complex v[4] = {amps[idx[0]], amps[idx[1]], amps[idx[2]], amps[idx[3]]};
        for (int r = 0; r < 4; ++r)
            amps[idx[r]] = m[r * 4 + 0] * v[0] + m[r * 4 + 1] * v[1] + m[r * 4 + 2] * v[2] + m[r * 4 + 3] * v[3];
    }
}

void probabilities(std::span<const Complex> amps, std::span<double> out) {
    for (std::size_t i = 0; i < amps.size(); ++i)
        out[i] = std::norm(amps[i]);
}

double norm_squared(std::span<const Complex> amps) {
    double total = 0;
    for (const auto& a : amps)
        total += std::norm(a);
    return total;
}

}  // namespace serial

void apply_1q(std::span<Complex> amps, std::size_t qubit, const Matrix2& m) {
    if (std::bit_width(amps.size()) - 1 >= parallel_threshold)
        omp::apply_1q(amps, qubit, m);
    else
        serial::apply_1q(amps, qubit, m);
}

void apply_2q(std::span<Complex> amps, std::size_t first, std::size_t second, const Matrix4& m) {
    if (std::bit_width(amps.size()) - 1 >= parallel_threshold)
        omp::apply_2q(amps, first, second, m);
    else
        serial::apply_2q(amps, first, second, m);
}

void probabilities(std::span<const Complex> amps, std::span<double> out) {
    if (std::bit_width(amps.size()) - 1 >= parallel_threshold)
        omp::probabilities(amps, out);
    else
        serial::probabilities(amps, out);
}

double norm_squared(std::span<const Complex> amps) {
    if (std::bit_width(amps.size()) - 1 >= parallel_threshold)
        return omp::norm_squared(amps);
    return serial::norm_squared(amps);
}

}  // namespace jaqal::kernels
