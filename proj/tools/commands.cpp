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

#include "commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "jaqal/corpus.hpp"
#include "jaqal/emitter.hpp"
#include "jaqal/expander.hpp"
#include "jaqal/gateset.hpp"
#include "jaqal/pipeline.hpp"
#include "jaqal/scheduler.hpp"
#include "jaqal/simulator.hpp"

namespace jaqal::cli {

namespace {

// Thrown for environment failures; carries the message only.
struct EnvironmentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    try {
        return read_file(path);
    } catch (const std::runtime_error& e) {
        throw EnvironmentError(e.what());
    }
}

void write_output(const std::string& path, const std::string& bytes, std::ostream& out) {
    if (path == "-") {
        out << bytes;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << bytes) || !file.flush())
        throw EnvironmentError("cannot write " + path);
}

void report(const std::vector<Diagnostic>& diagnostics, const std::string& file, std::ostream& err) {
    for (const auto& d : diagnostics)
        err << render(d, file) << '\n';
}

GateSet load_gates(const CommandOptions& options) {
    GateSet gates = builtin_gateset();
    if (options.durations)
        apply_durations(gates, load_duration_manifest(read_input(*options.durations), gates));
    return gates;
}

// Shared front half: returns the circuit or nothing after printing
// diagnostics.
std::optional<FlatCircuit> front_end(const CommandOptions& options, const GateSet& gates, std::ostream& err) {
    Compilation c = compile(read_input(options.input), gates);
    report(c.diagnostics, options.input, err);
    return std::move(c.circuit);
}

// Maps exceptions to exit codes around a command body.
template <class Body>
int guarded(const CommandOptions& options, std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const EnvironmentError& e) {
        err << "error: " << e.what() << '\n';
        return exit_environment_error;
    } catch (const Error& e) {
        // Manifest errors point into the manifest, everything else into
        // the program.
        bool manifest = e.code() == codes::manifest_syntax || e.code() == codes::negative_duration ||
                        (e.code() == codes::unknown_gate && options.durations);
        std::string file = manifest && options.durations ? *options.durations : options.input;
        err << render({Severity::error, e.loc(), e.code(), e.what()}, file) << '\n';
        return exit_program_error;
    }
}

// Fifteen significant digits hide last-bit noise such as 0.5000000000000001.
std::string format_probability(double p) {
    char buf[32];
    auto result = std::to_chars(buf, buf + sizeof buf, p, std::chars_format::general, 15);
    return std::string(buf, result.ptr);
}

std::string probability_lines(const std::vector<Distribution>& dists) {
    std::string text;
    for (const auto& d : dists) {
        std::string line;
        for (const auto& [bits, p] : d.support())
            line += (line.empty() ? "" : " ") + bits + " " + format_probability(p);
        text += line + '\n';
    }
    return text;
}

}  // namespace

int cmd_check(const CommandOptions& options, std::ostream& err) {
    return guarded(options, err, [&] {
        GateSet gates = load_gates(options);
        return front_end(options, gates, err) ? exit_ok : exit_program_error;
    });
}

int cmd_expand(const CommandOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(options, err, [&] {
        GateSet gates = load_gates(options);
        auto circuit = front_end(options, gates, err);
        if (!circuit)
            return int{exit_program_error};
        write_output(options.output.value_or("-"), dump(*circuit), out);
        return int{exit_ok};
    });
}

int cmd_schedule(const CommandOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(options, err, [&] {
        GateSet gates = load_gates(options);
        auto circuit = front_end(options, gates, err);
        if (!circuit)
            return int{exit_program_error};
        ScheduleResult result = schedule(*circuit, gates);
        report(result.diagnostics, options.input, err);
        if (!result.ok())
            return int{exit_program_error};
        write_output(options.output.value_or("-"), dump(result.timeline), out);
        return int{exit_ok};
    });
}

int cmd_run(const CommandOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(options, err, [&] {
        GateSet gates = load_gates(options);
        auto circuit = front_end(options, gates, err);
        if (!circuit)
            return int{exit_program_error};
        ScheduleResult sched = schedule(*circuit, gates);
        report(sched.diagnostics, options.input, err);
        if (!sched.ok())
            return int{exit_program_error};
        std::string bytes = options.probabilities
                                ? probability_lines(probabilities(*circuit, gates, options.quantize))
                                : emit(run(*circuit, gates, {options.seed, options.quantize, {}}));
        std::string target = options.output.value_or(
            std::filesystem::path(options.input).replace_extension(".out").string());
        write_output(target, bytes, out);
        return int{exit_ok};
    });
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Jaqal toolchain: check, expand, schedule and simulate Jaqal programs", "jaqal"};
    app.require_subcommand(1);
    CommandOptions options;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("file", options.input, "Jaqal source")->required();
    };
    auto add_durations = [&](CLI::App* sub) {
        sub->add_option("-d,--durations", options.durations, "Duration manifest: '<gate> <duration>' lines");
    };

    auto* check = app.add_subcommand("check", "Parse and analyze; report diagnostics");
    add_input(check);
    add_durations(check);

    auto* expand = app.add_subcommand("expand", "Print the flattened circuit");
    add_input(expand);
    add_durations(expand);
    expand->add_option("-o,--output", options.output, "Output file ('-' for standard output)");

    auto* sched = app.add_subcommand("schedule", "Print the timeline and total duration");
    add_input(sched);
    add_durations(sched);
    sched->add_option("-o,--output", options.output, "Output file ('-' for standard output)");

    auto* run = app.add_subcommand("run", "Simulate and write measurement results");
    add_input(run);
    add_durations(run);
    run->add_option("-o,--output", options.output, "Output file (default: input with .out extension)");
    run->add_option("-s,--seed", options.seed, "Sampler seed")->default_val(0);
    run->add_flag("-q,--quantize", options.quantize, "Round angles to the hardware grid");
    run->add_flag("-p,--probabilities", options.probabilities, "Write exact outcome distributions instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_environment_error;
    }

    if (check->parsed())
        return cmd_check(options, err);
    if (expand->parsed())
        return cmd_expand(options, out, err);
    if (sched->parsed())
        return cmd_schedule(options, out, err);
    return cmd_run(options, out, err);
}

}  // namespace jaqal::cli
