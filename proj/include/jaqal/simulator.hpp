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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jaqal/expander.hpp"
#include "jaqal/gateset.hpp"

namespace jaqal {

/// Largest register the simulator accepts (2^24 amplitudes, 256 MiB).
inline constexpr std::size_t max_simulated_qubits = 24;

/// Dense state vector. Bit b of an amplitude index is the state of qubit b.
class QuantumState {
public:
    /// |0...0>. Throws Error(too_many_qubits) above max_simulated_qubits.
    explicit QuantumState(std::size_t qubit_count);

    std::size_t qubit_count() const { return qubit_count_; }
    std::span<const Complex> amplitudes() const { return amps_; }
    std::span<Complex> amplitudes() { return amps_; }

    /// Back to |0...0>.
    void reset();

    /// Applies `u` to `qubits`; for two qubits the first is the high bit of
    /// the matrix index. Throws Error(bad_argument) on a dimension mismatch,
    /// a repeated qubit or an offset out of range.
    void apply(const UnitaryMatrix& u, std::span<const std::size_t> qubits);

    /// Collapses onto one basis state with amplitude 1.
    void collapse(std::size_t basis_index);

    std::vector<double> probabilities() const;
    double norm_squared() const;

private:
    std::size_t qubit_count_;
    std::vector<Complex> amps_;
};

/// Value-returning form of QuantumState::apply.
QuantumState apply_unitary(QuantumState state, const UnitaryMatrix& u, std::span<const std::size_t> qubits);

/// One bitstring per measure_all, in execution order. Character i is qubit i.
struct MeasurementRecord {
    std::vector<std::string> bitstrings;

    bool operator==(const MeasurementRecord&) const = default;
};

struct RunOptions {
    std::uint64_t seed = 0;
    /// Round every float argument with quantize_angle before use.
    bool quantize = false;
    /// Called before each primitive with the angles actually applied.
    std::function<void(const PrimitiveGate&, std::span<const double>)> on_gate;
};

/// Executes the circuit in order. prepare_all resets to |0...0>; measure_all
/// samples one outcome and collapses; idles change nothing.
///
/// Sampling uses std::mt19937_64 seeded with `seed`, one draw per
/// measure_all: the top 53 bits give u in [0, 1), and the outcome is the
/// first index whose running probability sum exceeds u.
///
/// The state starts in |0...0>. After measure_all it is destroyed; any
/// primitive other than prepare_all then throws Error(destroyed_state).
MeasurementRecord run(const FlatCircuit& circuit, const GateSet& gates, const RunOptions& options = {});

/// Exact outcome distribution at one measure_all.
struct Distribution {
    std::size_t qubit_count = 0;
    std::vector<double> probabilities;

    /// (bitstring, probability) for outcomes above `threshold`, sorted by
    /// bitstring.
    std::vector<std::pair<std::string, double>> support(double threshold = 1e-15) const;
};

/// Like run() but returns the Born distribution at each measure_all. The
/// branch taken afterwards is the most probable outcome, ties to the lower
/// index.
std::vector<Distribution> probabilities(const FlatCircuit& circuit, const GateSet& gates, bool quantize = false);

/// The gate's float arguments, quantized when asked.
std::vector<double> applied_angles(const PrimitiveGate& gate, bool quantize);

/// Basis index as a little-endian bitstring of `width` characters.
std::string bitstring(std::size_t index, std::size_t width);

/// Maps one generator draw to [0, 1) using its top 53 bits.
double unit_interval(std::uint64_t draw);

/// First index whose cumulative probability exceeds `u`; the last index
/// with non-zero probability absorbs rounding.
std::size_t sample_index(std::span<const double> probabilities, double u);

}  // namespace jaqal
