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

#include <string>
#include <string_view>
#include <vector>

#include "jaqal/diagnostic.hpp"
#include "jaqal/simulator.hpp"

namespace jaqal {

/// Output file bytes: one bitstring per line, LF after every line including
/// the last. Throws Error(invalid_bit) on characters other than 0/1 and
/// Error(ragged_record) when lengths differ.
std::string emit(const MeasurementRecord& record);

/// Inverse of emit(). CR anywhere, non-bit characters and ragged lines
/// throw, with the offending line in the location. A missing final LF is
/// accepted and reported through `warnings` when given.
MeasurementRecord parse_output(std::string_view bytes, std::vector<Diagnostic>* warnings = nullptr);

}  // namespace jaqal
