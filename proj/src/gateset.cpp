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

#include "jaqal/gateset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "jaqal/diagnostic.hpp"

namespace jaqal {

namespace {

constexpr double pi = std::numbers::pi;

GateDefinition make(std::string name, std::vector<ParamKind> params, double duration, UnitaryKind kind,
                    RotationFamily family = RotationFamily::none, std::vector<double> fixed = {}) {
    GateDefinition d;
    d.name = std::move(name);
    d.params = std::move(params);
    for (auto p : d.params)
        if (p == ParamKind::qubit)
            ++d.qubit_arity;
    d.duration = duration;
    d.kind = kind;
    d.family = family;
    d.fixed_angles = std::move(fixed);
    return d;
}

UnitaryMatrix rotation(RotationFamily family, double theta) {
    UnitaryMatrix u = UnitaryMatrix::identity(2);
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    switch (family) {
    case RotationFamily::x:
        u(0, 0) = c;
        u(0, 1) = Complex(0, -s);
        u(1, 0) = Complex(0, -s);
        u(1, 1) = c;
        break;
    case RotationFamily::y:
        u(0, 0) = c;
        u(0, 1) = -s;
        u(1, 0) = s;
        u(1, 1) = c;
        break;
    case RotationFamily::z:
        u(0, 0) = Complex(c, -s);
        u(1, 1) = Complex(c, s);
        break;
    default: break;
    }
    return u;
}

// exp(-i theta/2 P (x) P), P = cos(phi) X + sin(phi) Y. P^2 = I, so this is
// cos(theta/2) I - i sin(theta/2) P (x) P.
UnitaryMatrix molmer_sorensen(double phi, double theta) {
    UnitaryMatrix u = UnitaryMatrix::identity(4);
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    const Complex minus_i_s(0, -s);
    for (int k = 0; k < 4; ++k)
        u(k, k) = c;
    u(0, 3) = minus_i_s * std::polar(1.0, -2 * phi);
    u(1, 2) = minus_i_s;
    u(2, 1) = minus_i_s;
    u(3, 0) = minus_i_s * std::polar(1.0, 2 * phi);
    return u;
}

}  // namespace

int GateDefinition::angle_count() const {
    int n = 0;
    for (auto p : params)
        if (p == ParamKind::angle)
            ++n;
    return n;
}

UnitaryMatrix UnitaryMatrix::identity(int dim) {
    UnitaryMatrix u;
    u.dim = dim;
    u.entries.assign(static_cast<std::size_t>(dim * dim), Complex(0, 0));
    for (int k = 0; k < dim; ++k)
        u(k, k) = 1;
    return u;
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
    UnitaryMatrix out = *this;
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            out(r, c) = std::conj((*this)(c, r));
    return out;
}

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    UnitaryMatrix out = UnitaryMatrix::identity(a.dim);
    for (int r = 0; r < a.dim; ++r)
        for (int c = 0; c < a.dim; ++c) {
            Complex acc = 0;
            for (int k = 0; k < a.dim; ++k)
                acc += a(r, k) * b(k, c);
            out(r, c) = acc;
        }
    return out;
}

double max_abs_diff(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        worst = std::max(worst, std::abs(a.entries[i] - b.entries[i]));
    return worst;
}

double max_diff_up_to_phase(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < b.entries.size(); ++i)
        if (std::abs(b.entries[i]) > std::abs(b.entries[pivot]))
            pivot = i;
    Complex phase = 1;
    if (std::abs(b.entries[pivot]) > 0 && std::abs(a.entries[pivot]) > 0) {
        Complex ratio = a.entries[pivot] / b.entries[pivot];
        phase = ratio / std::abs(ratio);
    }
    double worst = 0;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        worst = std::max(worst, std::abs(a.entries[i] - phase * b.entries[i]));
    return worst;
}

double unitarity_error(const UnitaryMatrix& u) {
    return max_abs_diff(u.adjoint() * u, UnitaryMatrix::identity(u.dim));
}

void GateSet::add(GateDefinition def) {
    std::string key = def.name;
    gates_.insert_or_assign(std::move(key), std::move(def));
}

const GateDefinition* GateSet::find(std::string_view name) const {
    auto it = gates_.find(name);
    return it == gates_.end() ? nullptr : &it->second;
}

void GateSet::set_duration(std::string_view name, double duration) {
    auto it = gates_.find(name);
    if (it == gates_.end())
        throw Error(codes::unknown_gate, "unknown gate '" + std::string(name) + "'");
    it->second.duration = duration;
    auto twin = gates_.find(idle_twin_name(name));
    if (twin != gates_.end())
        twin->second.duration = duration;
}

std::string idle_twin_name(std::string_view gate) { return "I_" + std::string(gate); }

GateSet builtin_gateset() {
    using enum ParamKind;
    GateSet gates;
    gates.add(make("prepare_all", {}, 20, UnitaryKind::preparation));
    gates.add(make("measure_all", {}, 20, UnitaryKind::measurement));

    std::vector<GateDefinition> unitary;
    unitary.push_back(make("Rx", {qubit, angle}, 1, UnitaryKind::rotation, RotationFamily::x));
    unitary.push_back(make("Ry", {qubit, angle}, 1, UnitaryKind::rotation, RotationFamily::y));
    unitary.push_back(make("Rz", {qubit, angle}, 1, UnitaryKind::rotation, RotationFamily::z));
    const std::pair<const char*, RotationFamily> axes[] = {
        {"x", RotationFamily::x}, {"y", RotationFamily::y}, {"z", RotationFamily::z}};
    for (auto [axis, family] : axes) {
        std::string a(axis);
        unitary.push_back(make("P" + a, {qubit}, 1, UnitaryKind::rotation, family, {pi}));
        unitary.push_back(make("S" + a, {qubit}, 1, UnitaryKind::rotation, family, {pi / 2}));
        unitary.push_back(make("S" + a + "d", {qubit}, 1, UnitaryKind::rotation, family, {-pi / 2}));
    }
    unitary.push_back(make("MS", {qubit, qubit, angle, angle}, 10, UnitaryKind::rotation, RotationFamily::ms));
    unitary.push_back(make("Sxx", {qubit, qubit}, 10, UnitaryKind::rotation, RotationFamily::ms, {0.0, pi / 2}));

    for (auto& g : unitary) {
        GateDefinition twin;
        twin.name = idle_twin_name(g.name);
        twin.params.assign(static_cast<std::size_t>(g.qubit_arity), qubit);
        twin.qubit_arity = g.qubit_arity;
        twin.duration = g.duration;
        twin.kind = UnitaryKind::idle;
        twin.idle_of = g.name;
        gates.add(std::move(twin));
        gates.add(std::move(g));
    }
    return gates;
}

UnitaryMatrix unitary_of(const GateDefinition& def, std::span<const double> angles) {
    if (def.kind == UnitaryKind::preparation || def.kind == UnitaryKind::measurement)
        throw Error(codes::bad_argument, "'" + def.name + "' has no unitary");
    if (static_cast<int>(angles.size()) != def.angle_count())
        throw Error(codes::bad_argument, "'" + def.name + "' takes " + std::to_string(def.angle_count()) +
                                             " angle(s), got " + std::to_string(angles.size()));
    for (double a : angles)
        if (!std::isfinite(a))
            throw Error(codes::bad_argument, "non-finite angle passed to '" + def.name + "'");
    if (def.kind == UnitaryKind::idle)
        return UnitaryMatrix::identity(def.qubit_arity == 2 ? 4 : 2);

    std::span<const double> use = def.fixed_angles.empty() ? angles : std::span<const double>(def.fixed_angles);
    if (def.family == RotationFamily::ms)
        return molmer_sorensen(use[0], use[1]);
    return rotation(def.family, use[0]);
}

double wrap_angle(double theta) {
    constexpr double half_range = 2 * pi;
    if (std::abs(theta) <= half_range)
        return theta;
    double r = std::fmod(theta, 2 * half_range);
    if (r > half_range)
        r -= 2 * half_range;
    else if (r < -half_range)
        r += 2 * half_range;
    return r;
}

double angle_quantum() { return std::ldexp(pi, -38); }

double quantize_angle(double theta) {
    if (!std::isfinite(theta))
        throw Error(codes::bad_argument, "cannot quantize a non-finite angle");
    double w = wrap_angle(theta);
    double q = angle_quantum();
    double k = std::round(w / q);
    constexpr double limit = 549755813888.0;  // 2^39
    k = std::clamp(k, -limit, limit);
    return k * q;
}

std::map<std::string, double> load_duration_manifest(std::string_view text, const GateSet& gates) {
    std::map<std::string, double> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        SourceLoc loc{line_no, 1};
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::istringstream fields(line);
        std::string name, value, extra;
        if (!(fields >> name))
            continue;
        if (!(fields >> value) || (fields >> extra))
            throw Error(codes::manifest_syntax, "expected '<gate> <duration>' on line " + std::to_string(line_no),
                        loc);
        double duration = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), duration);
        if (ec != std::errc() || ptr != value.data() + value.size() || !std::isfinite(duration))
            throw Error(codes::manifest_syntax, "invalid duration '" + value + "' on line " + std::to_string(line_no),
                        loc);
        if (duration < 0)
            throw Error(codes::negative_duration, "negative duration for '" + name + "'", loc);
        const GateDefinition* def = gates.find(name);
        if (def == nullptr || def->kind == UnitaryKind::idle)
            throw Error(codes::unknown_gate, "unknown gate '" + name + "' in duration manifest", loc);
        out[name] = duration;
    }
    return out;
}

void apply_durations(GateSet& gates, const std::map<std::string, double>& overrides) {
    for (const auto& [name, duration] : overrides)
        gates.set_duration(name, duration);
}

}  // namespace jaqal
