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

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>

/// State-vector kernels. `serial` is the reference implementation; `omp`
/// splits the same loops across OpenMP threads. Both index amplitudes
/// little-endian: bit b of an index is qubit b.
namespace jaqal::kernels {

using Complex = std::complex<double>;
/// Row-major 2x2.
using Matrix2 = std::array<Complex, 4>;
/// Row-major 4x4 over local index 2 * bit(first) + bit(second).
using Matrix4 = std::array<Complex, 16>;

namespace serial {
void apply_1q(std::span<Complex> amps, std::size_t qubit, const Matrix2& m);
void apply_2q(std::span<Complex> amps, std::size_t first, std::size_t second, const Matrix4& m);
void probabilities(std::span<const Complex> amps, std::span<double> out);
double norm_squared(std::span<const Complex> amps);
}  // namespace serial

namespace omp {
void apply_1q(std::span<Complex> amps, std::size_t qubit, const Matrix2& m);
void apply_2q(std::span<Complex> amps, std::size_t first, std::size_t second, const Matrix4& m);
void probabilities(std::span<const Complex> amps, std::span<double> out);
double norm_squared(std::span<const Complex> amps);
}  // namespace omp

/// States with at least this many qubits go to the OpenMP kernels.
inline constexpr std::size_t parallel_threshold = 14;

void apply_1q(std::span<Complex> amps, std::size_t qubit, const Matrix2& m);
void apply_2q(std::span<Complex> amps, std::size_t first, std::size_t second, const Matrix4& m);
void probabilities(std::span<const Complex> amps, std::span<double> out);
double norm_squared(std::span<const Complex> amps);

/// Index with a zero bit inserted at position `bit`.
inline std::size_t insert_zero(std::size_t k, std::size_t bit) {
    std::size_t low = k & ((std::size_t{1} << bit) - 1);
    return ((k >> bit) << (bit + 1)) | low;
}

}  // namespace jaqal::kernels
