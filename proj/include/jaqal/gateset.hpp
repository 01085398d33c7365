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

#include <complex>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jaqal {

using Complex = std::complex<double>;

enum class ParamKind { qubit, angle };

enum class UnitaryKind { preparation, measurement, rotation, idle };

/// Generator family of a rotation gate: exp(-i angle/2 G) with G = X, Y, Z,
/// or the Molmer-Sorensen (cos phi X + sin phi Y)^(x2).
enum class RotationFamily { none, x, y, z, ms };

struct GateDefinition {
    std::string name;
    std::vector<ParamKind> params;
    int qubit_arity = 0;
    /// Arbitrary time units.
    double duration = 0.0;
    UnitaryKind kind = UnitaryKind::rotation;
    RotationFamily family = RotationFamily::none;
    /// Angles baked into fixed gates (Px: {pi}; Sxx: {0, pi/2}). Empty when
    /// the angles come from the gate arguments.
    std::vector<double> fixed_angles;
    /// For idle twins, the gate whose duration this one mirrors.
    std::string idle_of;

    int angle_count() const;
    /// prepare_all and measure_all take no arguments and act on every qubit.
    bool acts_on_all_qubits() const {
        return kind == UnitaryKind::preparation || kind == UnitaryKind::measurement;
    }
};

/// Dense row-major square matrix of dimension 2 or 4.
struct UnitaryMatrix {
    int dim = 0;
    std::vector<Complex> entries;

    static UnitaryMatrix identity(int dim);

    Complex& operator()(int row, int col) { return entries[static_cast<std::size_t>(row * dim + col)]; }
    Complex operator()(int row, int col) const { return entries[static_cast<std::size_t>(row * dim + col)]; }

    UnitaryMatrix adjoint() const;
    friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);
};

/// Largest elementwise |a - b|.
double max_abs_diff(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// Largest elementwise |a - e^{i phi} b| after choosing phi from the
/// largest-magnitude entry of b.
double max_diff_up_to_phase(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// Largest elementwise deviation of U^dagger U from the identity.
double unitarity_error(const UnitaryMatrix& u);

/// Name-indexed registry of native gates. Iteration is in name order.
class GateSet {
public:
    using Map = std::map<std::string, GateDefinition, std::less<>>;

    void add(GateDefinition def);
    const GateDefinition* find(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name) != nullptr; }
    std::size_t size() const { return gates_.size(); }

    /// Sets the duration of `name` and of its idle twin.
    void set_duration(std::string_view name, double duration);

    Map::const_iterator begin() const { return gates_.begin(); }
    Map::const_iterator end() const { return gates_.end(); }

private:
    Map gates_;
};

/// Idle twins are named `I_<gate>`.
std::string idle_twin_name(std::string_view gate);

/// The QSCOUT 1.0 native gates plus an idle twin for every single- and
/// two-qubit gate. Default durations: single-qubit gates 1, MS and Sxx 10,
/// prepare_all and measure_all 20.
GateSet builtin_gateset();

/// Unitary of a rotation or idle gate. `angles` are the gate's float
/// arguments (empty for fixed gates). Two-qubit matrices index the basis as
/// 2 * bit(first qubit) + bit(second qubit).
///
/// Throws Error(bad_argument) on a wrong angle count, a non-finite angle or
/// a preparation/measurement definition.
UnitaryMatrix unitary_of(const GateDefinition& def, std::span<const double> angles);

/// Reduces an angle modulo 4 pi into [-2 pi, 2 pi]. Rotations repeat with
/// period 4 pi, so the reduced angle has the same action.
double wrap_angle(double theta);

/// Grid spacing of the hardware angle representation: 4 pi / 2^40.
double angle_quantum();

/// Wraps into [-2 pi, 2 pi] and rounds to the nearest point of the uniform
/// grid k * angle_quantum(), |k| <= 2^39. Both ends of the interval are grid
/// points. Throws Error(bad_argument) for non-finite input.
double quantize_angle(double theta);

/// Parses a duration manifest: one `<gate> <duration>` per line, `#`
/// starts a comment. Names must be non-idle gates of `gates`.
///
/// Throws Error(manifest_syntax | negative_duration | unknown_gate) whose
/// location carries the offending line.
std::map<std::string, double> load_duration_manifest(std::string_view text, const GateSet& gates);

/// Applies manifest overrides; idle twins follow their gate.
void apply_durations(GateSet& gates, const std::map<std::string, double>& overrides);

}  // namespace jaqal
