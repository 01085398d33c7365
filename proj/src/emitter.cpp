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

#include "jaqal/emitter.hpp"

namespace jaqal {

namespace {

void check_line(std::string_view line, std::size_t width, int line_no) {
    SourceLoc loc{line_no, 1};
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (c == '\r')
            throw Error(codes::carriage_return, "carriage return in output data; only LF line endings are allowed",
                        {line_no, static_cast<int>(i) + 1});
        if (c != '0' && c != '1')
            throw Error(codes::invalid_bit, "character '" + std::string(1, c) + "' is not a bit",
                        {line_no, static_cast<int>(i) + 1});
    }
    if (line.size() != width)
        throw Error(codes::ragged_record,
                    "line has " + std::to_string(line.size()) + " bits, expected " + std::to_string(width), loc);
}

}  // namespace

std::string emit(const MeasurementRecord& record) {
    std::string out;
    if (record.bitstrings.empty())
        return out;
    const std::size_t width = record.bitstrings.front().size();
    out.reserve(record.bitstrings.size() * (width + 1));
    int line_no = 0;
    for (const auto& bits : record.bitstrings) {
        check_line(bits, width, ++line_no);
        out += bits;
        out += '\n';
    }
    return out;
}

MeasurementRecord parse_output(std::string_view bytes, std::vector<Diagnostic>* warnings) {
    MeasurementRecord record;
    std::size_t width = 0;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < bytes.size()) {
        std::size_t nl = bytes.find('\n', pos);
        bool terminated = nl != std::string_view::npos;
        std::string_view line = bytes.substr(pos, terminated ? nl - pos : std::string_view::npos);
        ++line_no;
        if (line_no == 1)
            width = line.size();
        check_line(line, width, line_no);
        record.bitstrings.emplace_back(line);
        if (!terminated) {
            if (warnings)
                warnings->push_back({Severity::warning,
                                     {line_no, static_cast<int>(line.size()) + 1},
                                     std::string(codes::missing_final_newline),
                                     "last line is not terminated by LF"});
            break;
        }
        pos = nl + 1;
    }
    return record;
}

}  // namespace jaqal
