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

#include "jaqal/simulator.hpp"

#include <algorithm>
#include <map>

#include "jaqal/diagnostic.hpp"
#include "jaqal/kernels.hpp"

namespace jaqal {

QuantumState::QuantumState(std::size_t qubit_count) : qubit_count_(qubit_count) {
    if (qubit_count > max_simulated_qubits)
        throw Error(codes::too_many_qubits, "cannot simulate " + std::to_string(qubit_count) +
                                                " qubits; the limit is " + std::to_string(max_simulated_qubits));
    amps_.assign(std::size_t{1} << qubit_count, Complex{});
    amps_[0] = 1.0;
}

void QuantumState::reset() {
    std::fill(amps_.begin(), amps_.end(), Complex{});
    amps_[0] = 1.0;
}

void QuantumState::apply(const UnitaryMatrix& u, std::span<const std::size_t> qubits) {
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] >= qubit_count_)
            throw Error(codes::bad_argument, "qubit " + std::to_string(qubits[i]) + " is out of range");
        for (std::size_t j = 0; j < i; ++j)
            if (qubits[i] == qubits[j])
                throw Error(codes::bad_argument, "qubit " + std::to_string(qubits[i]) + " is repeated");
    }
    if (u.dim != (1 << qubits.size()) || u.entries.size() != static_cast<std::size_t>(u.dim * u.dim))
        throw Error(codes::bad_argument, "matrix of dimension " + std::to_string(u.dim) + " cannot act on " +
                                             std::to_string(qubits.size()) + " qubit(s)");
    if (qubits.size() == 1) {
        kernels::Matrix2 m;
        std::copy(u.entries.begin(), u.entries.end(), m.begin());
        kernels::apply_1q(amps_, qubits[0], m);
    } else if (qubits.size() == 2) {
        kernels::Matrix4 m;
        std::copy(u.entries.begin(), u.entries.end(), m.begin());
        kernels::apply_2q(amps_, qubits[0], qubits[1], m);
    } else {
        throw Error(codes::bad_argument, "only one- and two-qubit matrices are supported");
    }
}

void QuantumState::collapse(std::size_t basis_index) {
    std::fill(amps_.begin(), amps_.end(), Complex{});
    amps_.at(basis_index) = 1.0;
}

std::vector<double> QuantumState::probabilities() const {
    std::vector<double> out(amps_.size());
    kernels::probabilities(amps_, out);
    return out;
}

double QuantumState::norm_squared() const { return kernels::norm_squared(amps_); }

QuantumState apply_unitary(QuantumState state, const UnitaryMatrix& u, std::span<const std::size_t> qubits) {
    state.apply(u, qubits);
    return state;
}

std::vector<std::pair<std::string, double>> Distribution::support(double threshold) const {
    std::vector<std::pair<std::string, double>> out;
    for (std::size_t i = 0; i < probabilities.size(); ++i)
        if (probabilities[i] > threshold)
            out.emplace_back(bitstring(i, qubit_count), probabilities[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> applied_angles(const PrimitiveGate& gate, bool quantize) {
    std::vector<double> out = gate.angles;
    if (quantize)
        for (auto& a : out)
            a = quantize_angle(a);
    return out;
}

std::string bitstring(std::size_t index, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t b = 0; b < width; ++b)
        if ((index >> b) & 1U)
            s[b] = '1';
    return s;
}

double unit_interval(std::uint64_t draw) { return static_cast<double>(draw >> 11) * 0x1.0p-53; }

std::size_t sample_index(std::span<const double> probabilities, double u) {
    double running = 0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        if (probabilities[i] <= 0)
            continue;
        running += probabilities[i];
        last = i;
        if (u < running)
            return i;
    }
    return last;
}

namespace {

// Walks the circuit in order; `measure` picks the outcome for each
// measure_all from the pre-measurement state.
class Executor {
public:
    Executor(const FlatCircuit& circuit, const GateSet& gates, bool quantize)
        : circuit_(circuit), gates_(gates), quantize_(quantize), state_(circuit.qubit_count) {}

    template <class Measure>
    void execute(Measure&& measure, const std::function<void(const PrimitiveGate&, std::span<const double>)>& on_gate) {
        for_each_primitive(circuit_.root, [&](const PrimitiveGate& g) {
            const GateDefinition& def = definition(g);
            std::vector<double> angles = applied_angles(g, quantize_);
            if (on_gate)
                on_gate(g, angles);
            if (def.kind == UnitaryKind::preparation) {
                state_.reset();
                destroyed_ = false;
                return;
            }
            if (destroyed_)
                throw Error(codes::destroyed_state,
                            "'" + g.name() + "' operates on a state destroyed by measure_all; call prepare_all first",
                            g.loc);
            if (def.kind == UnitaryKind::measurement) {
                state_.collapse(measure(state_));
                destroyed_ = true;
                return;
            }
            if (def.kind == UnitaryKind::idle)
                return;
            state_.apply(unitary(def, angles), g.qubits);
        });
    }

private:
    const GateDefinition& definition(const PrimitiveGate& g) const {
        if (const GateDefinition* def = gates_.find(g.name()))
            return *def;
        return *g.definition;
    }

    UnitaryMatrix unitary(const GateDefinition& def, const std::vector<double>& angles) {
        if (!angles.empty())
            return unitary_of(def, angles);
        auto it = fixed_.find(def.name);
        if (it == fixed_.end())
            it = fixed_.emplace(def.name, unitary_of(def, {})).first;
        return it->second;
    }

    const FlatCircuit& circuit_;
    const GateSet& gates_;
    bool quantize_;
    QuantumState state_;
    bool destroyed_ = false;
    std::map<std::string, UnitaryMatrix> fixed_;
};

}  // namespace

MeasurementRecord run(const FlatCircuit& circuit, const GateSet& gates, const RunOptions& options) {
    std::mt19937_64 rng(options.seed);
    MeasurementRecord record;
    Executor exec(circuit, gates, options.quantize);
    exec.execute(
        [&](const QuantumState& state) {
            double u = unit_interval(rng());
            std::size_t outcome = sample_index(state.probabilities(), u);
            record.bitstrings.push_back(bitstring(outcome, circuit.qubit_count));
            return outcome;
        },
        options.on_gate);
    return record;
}

std::vector<Distribution> probabilities(const FlatCircuit& circuit, const GateSet& gates, bool quantize) {
    std::vector<Distribution> out;
    Executor exec(circuit, gates, quantize);
    exec.execute(
        [&](const QuantumState& state) {
            Distribution d{circuit.qubit_count, state.probabilities()};
            auto best = static_cast<std::size_t>(
                std::max_element(d.probabilities.begin(), d.probabilities.end()) - d.probabilities.begin());
            out.push_back(std::move(d));
            return best;
        },
        {});
    return out;
}

}  // namespace jaqal
