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
#include <string>
#include <vector>

#include "jaqal/diagnostic.hpp"
#include "jaqal/expander.hpp"
#include "jaqal/gateset.hpp"

namespace jaqal {

/// Where gates of unequal length line up inside a parallel block. Only
/// start alignment is implemented.
enum class Alignment { start };

struct TimelineEntry {
    PrimitiveGate gate;
    double start = 0.0;
    double duration = 0.0;
    /// Every qubit the entry occupies (all of them for prepare_all and
    /// measure_all).
    std::vector<std::size_t> occupied;
};

/// Automatic padding inserted inside a parallel block. Labelled `I_pad`
/// in dumps; its duration is the exact gap.
struct IdleEntry {
    std::size_t qubit = 0;
    double start = 0.0;
    double duration = 0.0;
};

inline constexpr const char* pad_idle_name = "I_pad";

struct Timeline {
    std::vector<TimelineEntry> entries;
    std::vector<IdleEntry> idles;
    double total_duration = 0.0;
    Alignment alignment = Alignment::start;
};

struct ScheduleResult {
    Timeline timeline;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return !has_errors(diagnostics); }
};

/// Times every primitive. A sequential child starts when the previous one
/// ends; every child of a parallel block starts with the block, which lasts
/// as long as its longest child. Inside each parallel block, every qubit the
/// block touches is padded with idles wherever it is not busy, so busy plus
/// idle time equals the block duration. Qubits the block never touches get
/// nothing.
///
/// Durations come from `gates` by name. Two entries occupying one qubit at
/// the same time produce a timing-conflict diagnostic naming both gates.
ScheduleResult schedule(const FlatCircuit& circuit, const GateSet& gates);

struct DurationResult {
    double total = 0.0;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return !has_errors(diagnostics); }
};

/// Total duration by the sum/max rules without building idle entries.
/// Reports the same conflicts as schedule().
DurationResult total_duration(const FlatCircuit& circuit, const GateSet& gates);

/// `start duration name qubits... angles...` per entry and idle, sorted by
/// start then first qubit, followed by `total <duration>`.
std::string dump(const Timeline& timeline);

}  // namespace jaqal
