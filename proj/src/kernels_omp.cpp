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

#include <omp.h>

#include <algorithm>
#include <cstdint>

#include "jaqal/kernels.hpp"

namespace jaqal::kernels::omp {

void apply_1q(std::span<Complex> amps, std::size_t qubit, const Matrix2& m) {
    const auto half = static_cast<std::int64_t>(amps.size() / 2);
    const std::size_t stride = std::size_t{1} << qubit;
    Complex* data = amps.data();
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < half; ++k) {
        std::size_t i0 = insert_zero(static_cast<std::size_t>(k), qubit);
        std::size_t i1 = i0 | stride;
        Complex a = data[i0];
        Complex b = data[i1];
        data[i0] = m[0] * a + m[1] * b;
        data[i1] = m[2] * a + m[3] * b;
    }
}

void apply_2q(std::span<Complex> amps, std::size_t first, std::size_t second, const Matrix4& m) {
    const auto quarter = static_cast<std::int64_t>(amps.size() / 4);
    const std::size_t lo = std::min(first, second);
    const std::size_t hi = std::max(first, second);
    const std::size_t bit_first = std::size_t{1} << first;
    const std::size_t bit_second = std::size_t{1} << second;
    Complex* data = amps.data();
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < quarter; ++k) {
        std::size_t base = insert_zero(insert_zero(static_cast<std::size_t>(k), lo), hi);
        const std::size_t idx[4] = {base, base | bit_second, base | bit_first, base | bit_first | bit_second};
        Complex v[4] = {data[idx[0]], data[idx[1]], data[idx[2]], data[idx[3]]};
        for (int r = 0; r < 4; ++r)
            data[idx[r]] = m[r * 4 + 0] * v[0] + m[r * 4 + 1] * v[1] + m[r * 4 + 2] * v[2] + m[r * 4 + 3] * v[3];
    }
}

void probabilities(std::span<const Complex> amps, std::span<double> out) {
    const auto n = static_cast<std::int64_t>(amps.size());
    const Complex* data = amps.data();
    double* dst = out.data();
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        dst[i] = std::norm(data[i]);
}

double norm_squared(std::span<const Complex> amps) {
    const auto n = static_cast<std::int64_t>(amps.size());
    const Complex* data = amps.data();
    double total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (std::int64_t i = 0; i < n; ++i)
        total += std::norm(data[i]);
    return total;
}

}  // namespace jaqal::kernels::omp
