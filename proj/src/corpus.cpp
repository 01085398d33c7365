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

#include "jaqal/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <sstream>

#include "jaqal/diagnostic.hpp"
#include "jaqal/emitter.hpp"
#include "jaqal/format.hpp"
#include "jaqal/pipeline.hpp"
#include "jaqal/scheduler.hpp"
#include "jaqal/simulator.hpp"

namespace jaqal {

namespace {

template <class T>
T number(std::string_view word, int line) {
    T value{};
    auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || end != word.data() + word.size())
        throw Error(codes::manifest_syntax, "'" + std::string(word) + "' is not a number", {line, 1});
    return value;
}

}  // namespace

Expectation parse_expectation(std::string_view text) {
    Expectation e;
    bool saw_accept = false;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream words(raw);
        std::string key, value, extra;
        if (!(words >> key))
            continue;
        bool has_value = static_cast<bool>(words >> value);
        if (words >> extra)
            throw Error(codes::manifest_syntax, "too many fields", {line, 1});
        if (key == "ACCEPT") {
            if (has_value)
                throw Error(codes::manifest_syntax, "ACCEPT takes no value", {line, 1});
            saw_accept = true;
            continue;
        }
        if (!has_value)
            throw Error(codes::manifest_syntax, key + " needs a value", {line, 1});
        if (key == "REJECT")
            e.reject_codes.push_back(value);
        else if (key == "OUTPUT")
            e.output_file = value;
        else if (key == "GATES")
            e.gates = number<std::size_t>(value, line);
        else if (key == "TOTAL")
            e.total = number<double>(value, line);
        else if (key == "SEED")
            e.seed = number<std::uint64_t>(value, line);
        else
            throw Error(codes::manifest_syntax, "unknown keyword '" + key + "'", {line, 1});
    }
    if (saw_accept == !e.reject_codes.empty())
        throw Error(codes::manifest_syntax, "exactly one of ACCEPT or REJECT is required");
    e.accept = saw_accept;
    return e;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<CorpusCase> corpus_manifest(const std::filesystem::path& dir) {
    std::vector<CorpusCase> cases;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".jaqal")
            continue;
        auto sidecar = entry.path();
        sidecar.replace_extension(".expect");
        if (!std::filesystem::exists(sidecar))
            continue;
        cases.push_back({entry.path().stem().string(), entry.path(), parse_expectation(read_file(sidecar))});
    }
    std::sort(cases.begin(), cases.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return cases;
}

CaseOutcome check_case(const CorpusCase& c, const GateSet& gates) {
    std::vector<std::string> seen;
    auto fail = [](std::string why) { return CaseOutcome{false, std::move(why)}; };
    auto codes_seen = [&] {
        std::string s;
        for (const auto& code : seen)
            s += (s.empty() ? "" : ", ") + code;
        return s.empty() ? std::string("none") : s;
    };

    std::optional<FlatCircuit> circuit;
    std::optional<double> total;
    std::optional<std::string> output;
    try {
        Compilation comp = compile(read_file(c.source), gates);
        for (const auto& d : comp.diagnostics)
            if (d.is_error())
                seen.push_back(d.code);
        if (comp.ok()) {
            circuit = std::move(comp.circuit);
            ScheduleResult sched = schedule(*circuit, gates);
            for (const auto& d : sched.diagnostics)
                if (d.is_error())
                    seen.push_back(d.code);
            if (sched.ok()) {
                total = sched.timeline.total_duration;
                output = emit(run(*circuit, gates, {c.expect.seed, false, {}}));
            }
        }
    } catch (const Error& e) {
        seen.push_back(e.code());
    }

    if (!c.expect.accept) {
        if (seen.empty())
            return fail("accepted, expected rejection");
        for (const auto& want : c.expect.reject_codes)
            if (std::find(seen.begin(), seen.end(), want) == seen.end())
                return fail("expected " + want + ", got " + codes_seen());
        return {true, {}};
    }
    if (!seen.empty() || !output)
        return fail("rejected with " + codes_seen());
    if (c.expect.gates && count_primitive_gates(*circuit) != *c.expect.gates)
        return fail("expected " + std::to_string(*c.expect.gates) + " gates, got " +
                    std::to_string(count_primitive_gates(*circuit)));
    if (c.expect.total && std::abs(*total - *c.expect.total) > 1e-9)
        return fail("expected total " + format_real(*c.expect.total) + ", got " + format_real(*total));
    if (c.expect.output_file) {
        std::string want = read_file(c.source.parent_path() / *c.expect.output_file);
        if (want != *output)
            return fail("output differs from " + *c.expect.output_file);
    }
    return {true, {}};
}

}  // namespace jaqal
