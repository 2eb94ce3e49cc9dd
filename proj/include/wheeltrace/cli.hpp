#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "wheeltrace/wheel_model.hpp"

namespace wheeltrace {

enum class Subcommand {
    trace,
    series,
    phase,
    roughness,
    divergence,
    entropy,
    sweep,
    dimension,
    surface,
};

enum class OutputFormat { csv, svg };
enum class SeriesKind { radius, speed };

/// Fully resolved invocation: every default has been filled in, so rendering
/// it back to flags and re-parsing reproduces the same value.
struct RunConfig {
    Subcommand sub = Subcommand::trace;
    SystemConfig system;
    SystemConfig system_b;  // divergence side B; equals `system` otherwise

    double t0 = 0.0;
    double t1 = 0.0;
    std::int64_t steps = 0;

    SeriesKind series_kind = SeriesKind::radius;

    // roughness ladder
    double dt_max = 0.0;
    double dt_min = 0.0;
    int per_decade = 0;
    int probes = 0;

    // entropy / sweep
    std::int64_t horizon = 0;
    int bins = 0;
    double q_min = 0.0;
    double q_max = 0.0;
    double q_step = 0.0;

    // surface
    int n_min = 0;
    int n_max = 0;

    std::filesystem::path out;
    OutputFormat format = OutputFormat::csv;

    bool operator==(const RunConfig&) const = default;
};

/// Raised when the user asked for --help; carries the help text.
struct HelpRequested {
    std::string text;
};

/// Parses and validates argv (without the program name) into a RunConfig.
/// Throws InvalidArgument with a message naming the offending flag or
/// constraint; throws HelpRequested for help flags.
RunConfig parse_args(const std::vector<std::string>& argv);

/// Inverse of parse_args for a resolved RunConfig.
std::vector<std::string> render_args(const RunConfig& cfg);

/// Executes a resolved invocation, writing its output file(s).
void execute(const RunConfig& cfg);

/// Full CLI entry: 0 on success, 1 on usage errors, 2 on numerical or I/O
/// failure.
int run_cli(const std::vector<std::string>& argv);

}  // namespace wheeltrace
