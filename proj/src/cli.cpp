#include "wheeltrace/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iostream>
#include <numbers>
#include <numeric>
#include <optional>

#include <CLI11.hpp>

#include "wheeltrace/entropy.hpp"
#include "wheeltrace/export.hpp"
#include "wheeltrace/fractal.hpp"
#include "wheeltrace/roughness.hpp"
#include "wheeltrace/sampling.hpp"

namespace wheeltrace {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct RawOptions {
    std::optional<int> n;
    std::optional<double> q;
    std::optional<double> q_r;
    std::optional<double> q_phi;
    std::optional<std::string> q_rational;
    double r0 = 1.0;

    std::optional<double> t0;
    std::optional<double> t1;
    std::optional<std::int64_t> steps;

    std::string kind = "radius";

    std::optional<double> dt_max;
    std::optional<double> dt_min;
    int per_decade = 4;
    int probes = 64;

    std::optional<double> q_r_a, q_phi_a, q_r_b, q_phi_b;
    std::optional<int> n_b;

    std::int64_t horizon = kDefaultEntropyHorizon;
    int bins = kDefaultEntropyBins;
    std::optional<double> q_min, q_max;
    double q_step = 0.05;

    std::optional<int> n_min, n_max;

    std::string out;
    std::string format = "csv";
};

RationalRatio parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    std::int64_t a = 0;
    std::int64_t b = 1;
    const char* begin = text.data();
    auto r1 = std::from_chars(begin, begin + std::min(slash, text.size()), a);
    bool ok = r1.ec == std::errc{} &&
              r1.ptr == begin + std::min(slash, text.size());
    if (ok && slash != std::string::npos) {
        const char* bb = text.data() + slash + 1;
        auto r2 = std::from_chars(bb, text.data() + text.size(), b);
        ok = r2.ec == std::errc{} && r2.ptr == text.data() + text.size();
    }
    if (!ok || a <= 0 || b <= 0) {
        throw InvalidArgument("--q-rational expects a/b with positive integers");
    }
    if (a <= b) throw InvalidArgument("--q-rational a/b must exceed 1 (a > b)");
    const std::int64_t g = std::gcd(a, b);
    return {a / g, b / g};
}

struct SideOverride {
    std::optional<double> q_r;
    std::optional<double> q_phi;
    std::optional<int> n;
};

SystemConfig resolve_system(const RawOptions& raw, const SideOverride& side) {
    if (raw.q && (raw.q_r || raw.q_phi)) {
        throw InvalidArgument("--q conflicts with --q-r/--q-phi; pick one form");
    }
    if (raw.q && raw.q_rational) {
        throw InvalidArgument(
            "--q conflicts with --q-rational; use --q-r for the radius ratio");
    }
    if (raw.q_phi && raw.q_rational) {
        throw InvalidArgument("--q-phi conflicts with --q-rational");
    }
    if (raw.q && !(*raw.q > 1.0)) throw InvalidArgument("q must exceed 1");

    std::optional<RationalRatio> rational;
    std::optional<double> rational_value;
    if (raw.q_rational) {
        rational = parse_rational(*raw.q_rational);
        rational_value = static_cast<double>(rational->num) /
                         static_cast<double>(rational->den);
    }

    std::optional<double> q_phi = side.q_phi;
    if (!q_phi) q_phi = raw.q_phi;
    if (!q_phi) q_phi = raw.q;
    if (!q_phi) q_phi = rational_value;
    if (!q_phi) {
        throw InvalidArgument(
            "q_phi is not determined; provide --q, --q-phi, or --q-rational");
    }

    std::optional<double> q_r = side.q_r;
    if (!q_r) q_r = raw.q_r;
    if (!q_r) q_r = raw.q;
    if (!q_r) q_r = q_phi;

    if (!raw.n) throw InvalidArgument("--n is required");
    SystemConfig cfg;
    cfg.n = side.n.value_or(*raw.n);
    cfg.q_r = *q_r;
    cfg.q_phi = *q_phi;
    cfg.r0 = raw.r0;
    cfg.q_phi_rational = rational;
    cfg.validate();
    return cfg;
}

// One fundamental period when it is known and small, else ten turns of the
// main wheel, capped by the phase budget.
double default_window_end(const SystemConfig& cfg) {
    if (cfg.q_phi_rational) {
        const double period = fundamental_period(cfg);
        if (period <= kTwoPi * 1024.0) return period;
    } else if (cfg.q_phi == std::floor(cfg.q_phi)) {
        return kTwoPi;
    }
    return std::min(kTwoPi * 10.0, 0.9 * phase_budget_horizon(cfg));
}

std::string format_int(std::int64_t v) { return std::to_string(v); }

void add_system_flags(CLI::App* sub, RawOptions& raw) {
    sub->add_option("--n", raw.n, "number of wheels");
    sub->add_option("--q", raw.q, "radius and angle ratio (sets both)");
    sub->add_option("--q-r", raw.q_r, "radius ratio r_k/r_{k+1}");
    sub->add_option("--q-phi", raw.q_phi, "angle ratio phi_{k+1}/phi_k");
    sub->add_option("--q-rational", raw.q_rational,
                    "exact angle ratio a/b (enables exact periods)");
    sub->add_option("--r0", raw.r0, "largest wheel radius (scales exports)");
}

void add_window_flags(CLI::App* sub, RawOptions& raw) {
    sub->add_option("--t0", raw.t0, "window start angle (radians)");
    sub->add_option("--t1", raw.t1, "window end angle (radians)");
    sub->add_option("--steps", raw.steps, "number of uniform steps");
}

void add_output_flags(CLI::App* sub, RawOptions& raw) {
    sub->add_option("--out", raw.out, "output file path")->required();
    sub->add_option("--format", raw.format, "output format: csv or svg")
        ->check(CLI::IsMember({"csv", "svg"}));
}

RunConfig resolve(Subcommand sub, const RawOptions& raw) {
    RunConfig rc;
    rc.sub = sub;
    rc.out = raw.out;
    rc.format = raw.format == "svg" ? OutputFormat::svg : OutputFormat::csv;

    const bool svg_ok = sub == Subcommand::trace || sub == Subcommand::series ||
                        sub == Subcommand::phase;
    if (rc.format == OutputFormat::svg && !svg_ok) {
        throw InvalidArgument("--format svg is only supported for trace, "
                              "series, and phase");
    }

    if (sub == Subcommand::sweep) {
        if (!raw.q_min || !raw.q_max) {
            throw InvalidArgument("sweep requires --q-min and --q-max");
        }
        if (!raw.n) throw InvalidArgument("--n is required");
        rc.q_min = *raw.q_min;
        rc.q_max = *raw.q_max;
        rc.q_step = raw.q_step;
        if (!(rc.q_min > 1.0)) throw InvalidArgument("q-min must exceed 1");
        if (!(rc.q_max > rc.q_min))
            throw InvalidArgument("q-max must exceed q-min");
        if (!(rc.q_step > 0.0)) throw InvalidArgument("q-step must be positive");
        rc.system = SystemConfig::uniform(rc.q_min, *raw.n, raw.r0);
        rc.system_b = rc.system;
        rc.horizon = raw.horizon;
        rc.bins = raw.bins;
        rc.t0 = raw.t0.value_or(0.0);
        rc.t1 = raw.t1.value_or(kDefaultEntropyWindowEnd);
        if (rc.horizon < rc.bins)
            throw InvalidArgument("--horizon must be at least --bins");
        if (rc.bins < 2) throw InvalidArgument("--bins must be at least 2");
        return rc;
    }

    rc.system = resolve_system(raw, {});
    rc.system_b = rc.system;

    switch (sub) {
        case Subcommand::trace:
        case Subcommand::phase:
        case Subcommand::series:
        case Subcommand::dimension: {
            rc.t0 = raw.t0.value_or(0.0);
            rc.t1 = raw.t1.value_or(default_window_end(rc.system));
            rc.steps = raw.steps.value_or(
                sub == Subcommand::dimension ? 1000000 : 200000);
            if (sub == Subcommand::series) {
                if (raw.kind != "radius" && raw.kind != "speed") {
                    throw InvalidArgument("--kind must be radius or speed");
                }
                rc.series_kind = raw.kind == "speed" ? SeriesKind::speed
                                                     : SeriesKind::radius;
            }
            break;
        }
        case Subcommand::roughness: {
            const double threshold = roughness_threshold(rc.system);
            rc.dt_max = raw.dt_max.value_or(threshold * 1e3);
            rc.dt_min = raw.dt_min.value_or(threshold * 1e-3);
            rc.per_decade = raw.per_decade;
            rc.probes = raw.probes;
            if (rc.probes < 1) throw InvalidArgument("--probes must be positive");
            if (!(rc.dt_max > rc.dt_min && rc.dt_min > 0.0)) {
                throw InvalidArgument("--dt-max must exceed --dt-min > 0");
            }
            break;
        }
        case Subcommand::divergence: {
            if (raw.q_rational) {
                throw InvalidArgument(
                    "--q-rational is not supported for divergence; give "
                    "explicit --q-phi-a/--q-phi-b");
            }
            rc.system = resolve_system(raw, {raw.q_r_a, raw.q_phi_a, {}});
            rc.system_b =
                resolve_system(raw, {raw.q_r_b, raw.q_phi_b, raw.n_b});
            rc.t0 = raw.t0.value_or(0.0);
            rc.t1 = raw.t1.value_or(kTwoPi * 100.0);
            rc.steps = raw.steps.value_or(20000);
            break;
        }
        case Subcommand::entropy: {
            rc.horizon = raw.horizon;
            rc.bins = raw.bins;
            rc.t0 = raw.t0.value_or(0.0);
            rc.t1 = raw.t1.value_or(kDefaultEntropyWindowEnd);
            if (rc.horizon < rc.bins)
                throw InvalidArgument("--horizon must be at least --bins");
            if (rc.bins < 2) throw InvalidArgument("--bins must be at least 2");
            break;
        }
        case Subcommand::surface: {
            rc.t0 = raw.t0.value_or(0.0);
            rc.t1 = raw.t1.value_or(kTwoPi);
            rc.steps = raw.steps.value_or(512);
            rc.n_min = raw.n_min.value_or(1);
            rc.n_max = raw.n_max.value_or(rc.system.n);
            break;
        }
        case Subcommand::sweep:
            break;  // handled above
    }
    return rc;
}

const char* subcommand_name(Subcommand sub) {
    switch (sub) {
        case Subcommand::trace: return "trace";
        case Subcommand::series: return "series";
        case Subcommand::phase: return "phase";
        case Subcommand::roughness: return "roughness";
        case Subcommand::divergence: return "divergence";
        case Subcommand::entropy: return "entropy";
        case Subcommand::sweep: return "sweep";
        case Subcommand::dimension: return "dimension";
        case Subcommand::surface: return "surface";
    }
    return "";
}

void render_system(std::vector<std::string>& args, const SystemConfig& cfg,
                   const std::string& suffix) {
    if (cfg.q_phi_rational && suffix.empty()) {
        args.push_back("--q-rational");
        args.push_back(std::to_string(cfg.q_phi_rational->num) + "/" +
                       std::to_string(cfg.q_phi_rational->den));
        args.push_back("--q-r");
        args.push_back(format_double(cfg.q_r));
    } else {
        args.push_back("--q-r" + suffix);
        args.push_back(format_double(cfg.q_r));
        args.push_back("--q-phi" + suffix);
        args.push_back(format_double(cfg.q_phi));
    }
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& argv) {
    CLI::App app{"wheeltrace: nested rotating-wheel trajectory toolkit"};
    app.require_subcommand(1);

    RawOptions raw;
    std::vector<std::pair<Subcommand, CLI::App*>> subs;

    auto* trace = app.add_subcommand("trace", "sample the scriber trajectory");
    auto* series =
        app.add_subcommand("series", "radius or speed series over the angle");
    auto* phase =
        app.add_subcommand("phase", "velocity components on the phase plane");
    auto* roughness = app.add_subcommand(
        "roughness", "velocity-increment scan across delta_t scales");
    auto* divergence = app.add_subcommand(
        "divergence", "pointwise distance between two wheel systems");
    auto* entropy =
        app.add_subcommand("entropy", "radius-distribution entropy for one q");
    auto* sweep =
        app.add_subcommand("sweep", "entropy across a grid of q values");
    auto* dimension = app.add_subcommand(
        "dimension", "box-counting dimension of a dense trajectory");
    auto* surface = app.add_subcommand(
        "surface", "|R(t)| grid across wheel-count truncations");
    subs = {{Subcommand::trace, trace},         {Subcommand::series, series},
            {Subcommand::phase, phase},         {Subcommand::roughness, roughness},
            {Subcommand::divergence, divergence}, {Subcommand::entropy, entropy},
            {Subcommand::sweep, sweep},         {Subcommand::dimension, dimension},
            {Subcommand::surface, surface}};

    for (auto& [id, sub] : subs) {
        add_output_flags(sub, raw);
        if (id != Subcommand::sweep) add_system_flags(sub, raw);
    }
    add_window_flags(trace, raw);
    add_window_flags(series, raw);
    add_window_flags(phase, raw);
    add_window_flags(divergence, raw);
    add_window_flags(dimension, raw);
    add_window_flags(surface, raw);

    series->add_option("--kind", raw.kind, "series kind: radius or speed")
        ->check(CLI::IsMember({"radius", "speed"}));

    roughness->add_option("--dt-max", raw.dt_max, "largest delta_t in the scan");
    roughness->add_option("--dt-min", raw.dt_min, "smallest delta_t in the scan");
    roughness->add_option("--per-decade", raw.per_decade,
                          "scan points per decade of delta_t");
    roughness->add_option("--probes", raw.probes,
                          "number of probe angles in [0, 2pi)");

    divergence->add_option("--q-r-a", raw.q_r_a, "side A radius ratio");
    divergence->add_option("--q-phi-a", raw.q_phi_a, "side A angle ratio");
    divergence->add_option("--q-r-b", raw.q_r_b, "side B radius ratio");
    divergence->add_option("--q-phi-b", raw.q_phi_b, "side B angle ratio");
    divergence->add_option("--n-b", raw.n_b, "side B wheel count");

    for (auto* sub : {entropy, sweep}) {
        sub->add_option("--horizon", raw.horizon, "number of |R| samples");
        sub->add_option("--bins", raw.bins, "histogram bin count");
        sub->add_option("--t0", raw.t0, "window start angle (radians)");
        sub->add_option("--t1", raw.t1, "window end angle (radians)");
    }
    sweep->add_option("--n", raw.n, "number of wheels");
    sweep->add_option("--r0", raw.r0, "largest wheel radius");
    sweep->add_option("--q-min", raw.q_min, "first q of the grid");
    sweep->add_option("--q-max", raw.q_max, "last q of the grid");
    sweep->add_option("--q-step", raw.q_step, "q grid spacing");

    surface->add_option("--n-min", raw.n_min, "smallest wheel-count row");
    surface->add_option("--n-max", raw.n_max, "largest wheel-count row");

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw InvalidArgument(e.what());
    }

    for (auto& [id, sub] : subs) {
        if (sub->parsed()) return resolve(id, raw);
    }
    throw InvalidArgument("a subcommand is required");
}

std::vector<std::string> render_args(const RunConfig& rc) {
    std::vector<std::string> args;
    args.emplace_back(subcommand_name(rc.sub));
    args.push_back("--out");
    args.push_back(rc.out.string());
    args.push_back("--format");
    args.emplace_back(rc.format == OutputFormat::svg ? "svg" : "csv");

    auto push = [&args](const std::string& flag, const std::string& value) {
        args.push_back(flag);
        args.push_back(value);
    };

    if (rc.sub == Subcommand::sweep) {
        push("--n", std::to_string(rc.system.n));
        push("--r0", format_double(rc.system.r0));
        push("--q-min", format_double(rc.q_min));
        push("--q-max", format_double(rc.q_max));
        push("--q-step", format_double(rc.q_step));
        push("--horizon", format_int(rc.horizon));
        push("--bins", std::to_string(rc.bins));
        push("--t0", format_double(rc.t0));
        push("--t1", format_double(rc.t1));
        return args;
    }

    push("--n", std::to_string(rc.system.n));
    push("--r0", format_double(rc.system.r0));
    render_system(args, rc.system,
                  rc.sub == Subcommand::divergence ? "-a" : "");

    switch (rc.sub) {
        case Subcommand::trace:
        case Subcommand::phase:
        case Subcommand::dimension:
        case Subcommand::series:
            push("--t0", format_double(rc.t0));
            push("--t1", format_double(rc.t1));
            push("--steps", format_int(rc.steps));
            if (rc.sub == Subcommand::series) {
                push("--kind", rc.series_kind == SeriesKind::speed ? "speed"
                                                                   : "radius");
            }
            break;
        case Subcommand::roughness:
            push("--dt-max", format_double(rc.dt_max));
            push("--dt-min", format_double(rc.dt_min));
            push("--per-decade", std::to_string(rc.per_decade));
            push("--probes", std::to_string(rc.probes));
            break;
        case Subcommand::divergence:
            render_system(args, rc.system_b, "-b");
            push("--n-b", std::to_string(rc.system_b.n));
            push("--t0", format_double(rc.t0));
            push("--t1", format_double(rc.t1));
            push("--steps", format_int(rc.steps));
            break;
        case Subcommand::entropy:
            push("--horizon", format_int(rc.horizon));
            push("--bins", std::to_string(rc.bins));
            push("--t0", format_double(rc.t0));
            push("--t1", format_double(rc.t1));
            break;
        case Subcommand::surface:
            push("--t0", format_double(rc.t0));
            push("--t1", format_double(rc.t1));
            push("--steps", format_int(rc.steps));
            push("--n-min", std::to_string(rc.n_min));
            push("--n-max", std::to_string(rc.n_max));
            break;
        case Subcommand::sweep:
            break;
    }
    return args;
}

namespace {

std::vector<std::string> double_row(std::initializer_list<double> values) {
    std::vector<std::string> row;
    row.reserve(values.size());
    for (double v : values) row.push_back(format_double(v));
    return row;
}

void execute_trace(const RunConfig& rc) {
    const Trajectory traj =
        sample_trajectory(rc.system, rc.t0, rc.t1, rc.steps);
    const double r0 = rc.system.r0;
    if (rc.format == OutputFormat::svg) {
        std::vector<PlanarPoint> pts;
        pts.reserve(traj.samples.size());
        for (const auto& s : traj.samples) pts.push_back(r0 * s.position);
        export_svg(rc.out, pts);
        return;
    }
    const std::vector<std::string> header{"t", "x", "y", "vx", "vy"};
    std::vector<std::vector<std::string>> rows;
    rows.reserve(traj.samples.size());
    for (const auto& s : traj.samples) {
        rows.push_back(double_row({s.t, r0 * s.position.x, r0 * s.position.y,
                                   r0 * s.velocity.x, r0 * s.velocity.y}));
    }
    export_csv(rc.out, header, rows);
}

void execute_series(const RunConfig& rc) {
    const auto series = rc.series_kind == SeriesKind::speed
                            ? speed_series(rc.system, rc.t0, rc.t1, rc.steps)
                            : radius_series(rc.system, rc.t0, rc.t1, rc.steps);
    const double r0 = rc.system.r0;
    if (rc.format == OutputFormat::svg) {
        std::vector<PlanarPoint> pts;
        pts.reserve(series.size());
        for (const auto& s : series) pts.push_back({s.t, r0 * s.value});
        export_svg(rc.out, pts);
        return;
    }
    const std::vector<std::string> header{"t", "value"};
    std::vector<std::vector<std::string>> rows;
    rows.reserve(series.size());
    for (const auto& s : series) rows.push_back(double_row({s.t, r0 * s.value}));
    export_csv(rc.out, header, rows);
}

void execute_phase(const RunConfig& rc) {
    const Trajectory traj =
        sample_trajectory(rc.system, rc.t0, rc.t1, rc.steps);
    const double r0 = rc.system.r0;
    if (rc.format == OutputFormat::svg) {
        std::vector<PlanarPoint> pts;
        pts.reserve(traj.samples.size());
        for (const auto& s : traj.samples) pts.push_back(r0 * s.velocity);
        export_svg(rc.out, pts);
        return;
    }
    const std::vector<std::string> header{"t", "vx", "vy"};
    std::vector<std::vector<std::string>> rows;
    rows.reserve(traj.samples.size());
    for (const auto& s : traj.samples) {
        rows.push_back(
            double_row({s.t, r0 * s.velocity.x, r0 * s.velocity.y}));
    }
    export_csv(rc.out, header, rows);
}

void execute_roughness(const RunConfig& rc) {
    std::vector<double> probes(static_cast<std::size_t>(rc.probes));
    for (std::size_t i = 0; i < probes.size(); ++i) {
        probes[i] = kTwoPi * static_cast<double>(i) /
                    static_cast<double>(probes.size());
    }
    const auto scales = decade_scales(rc.dt_max, rc.dt_min, rc.per_decade);
    const RoughnessScan scan = roughness_scan(rc.system, probes, scales);
    const std::vector<std::string> header{"delta_t", "mean_increment",
                                          "max_increment"};
    std::vector<std::vector<std::string>> rows;
    rows.reserve(scan.rows.size());
    for (const auto& r : scan.rows) {
        rows.push_back(double_row({r.delta_t, r.mean_increment, r.max_increment}));
    }
    export_csv(rc.out, header, rows);
    std::cout << "roughness_threshold="
              << format_double(roughness_threshold(rc.system)) << "\n";
    try {
        std::cout << "crossover_scale=" << format_double(crossover_scale(scan))
                  << "\n";
    } catch (const std::exception& e) {
        std::cout << "crossover_scale unavailable: " << e.what() << "\n";
    }
}

void execute_divergence(const RunConfig& rc) {
    const DivergenceCurve curve =
        divergence(rc.system, rc.system_b, rc.t0, rc.t1, rc.steps);
    const std::vector<std::string> header{"t", "distance"};
    std::vector<std::vector<std::string>> rows;
    rows.reserve(curve.rows.size());
    for (const auto& r : curve.rows) {
        rows.push_back(double_row({r.t, r.distance}));
    }
    export_csv(rc.out, header, rows);
}

void execute_entropy(const RunConfig& rc) {
    const EntropyEstimate est =
        entropy_estimate(rc.system, rc.horizon, rc.bins, rc.t0, rc.t1);
    const std::vector<std::string> header{"q", "n", "bins", "horizon",
                                          "entropy_bits"};
    std::vector<std::vector<std::string>> rows{{
        format_double(est.q),
        std::to_string(est.n),
        std::to_string(est.bins),
        format_int(est.horizon),
        format_double(est.entropy_bits),
    }};
    export_csv(rc.out, header, rows);
    std::cout << "entropy_bits=" << format_double(est.entropy_bits) << "\n";
}

void execute_sweep(const RunConfig& rc) {
    const EntropySweepResult result =
        entropy_sweep(rc.q_min, rc.q_max, rc.q_step, rc.system.n, rc.horizon,
                      rc.bins, rc.t0, rc.t1);
    const std::vector<std::string> header{"q", "n", "bins", "horizon",
                                          "entropy_bits"};
    std::vector<std::vector<std::string>> rows;
    rows.reserve(result.entries.size());
    for (const auto& entry : result.entries) {
        rows.push_back({
            format_double(entry.q),
            std::to_string(rc.system.n),
            std::to_string(rc.bins),
            format_int(rc.horizon),
            entry.estimate ? format_double(entry.estimate->entropy_bits)
                           : "nan",
        });
    }
    export_csv(rc.out, header, rows);
    std::cout << "argmax_q=" << format_double(result.argmax_q) << "\n";
}

void execute_dimension(const RunConfig& rc) {
    const Trajectory traj =
        sample_trajectory(rc.system, rc.t0, rc.t1, rc.steps);
    const std::vector<PlanarPoint> pts = positions(traj);
    const auto scales = default_box_scales(pts);
    const BoxCountEstimate est = box_dimension(pts, scales);

    const std::vector<std::string> header{"scale", "count"};
    std::vector<std::vector<std::string>> rows;
    rows.reserve(est.scales.size());
    for (std::size_t i = 0; i < est.scales.size(); ++i) {
        rows.push_back(
            {format_double(est.scales[i]), std::to_string(est.counts[i])});
    }
    export_csv(rc.out, header, rows);

    const std::filesystem::path summary =
        rc.out.parent_path() / "dimension_summary.csv";
    export_csv(summary, std::vector<std::string>{"dimension", "fit_r2"},
               {{format_double(est.dimension), format_double(est.fit_r2)}});
    std::cout << "dimension=" << format_double(est.dimension)
              << " fit_r2=" << format_double(est.fit_r2) << "\n";
}

void execute_surface(const RunConfig& rc) {
    const SurfaceGrid grid = surface_grid(rc.system, rc.t0, rc.t1, rc.steps,
                                          rc.n_min, rc.n_max);
    const double r0 = rc.system.r0;
    // First row holds the t grid, first column the wheel counts.
    std::vector<std::string> header;
    header.reserve(grid.t_values.size() + 1);
    header.emplace_back("");
    for (double t : grid.t_values) header.push_back(format_double(t));
    std::vector<std::vector<std::string>> rows;
    rows.reserve(grid.n_values.size());
    for (std::size_t j = 0; j < grid.n_values.size(); ++j) {
        std::vector<std::string> row;
        row.reserve(grid.t_values.size() + 1);
        row.push_back(std::to_string(grid.n_values[j]));
        for (std::size_t i = 0; i < grid.t_values.size(); ++i) {
            row.push_back(format_double(r0 * grid.magnitudes[i][j]));
        }
        rows.push_back(std::move(row));
    }
    export_csv(rc.out, header, rows);
}

}  // namespace

void execute(const RunConfig& rc) {
    switch (rc.sub) {
        case Subcommand::trace: execute_trace(rc); return;
        case Subcommand::series: execute_series(rc); return;
        case Subcommand::phase: execute_phase(rc); return;
        case Subcommand::roughness: execute_roughness(rc); return;
        case Subcommand::divergence: execute_divergence(rc); return;
        case Subcommand::entropy: execute_entropy(rc); return;
        case Subcommand::sweep: execute_sweep(rc); return;
        case Subcommand::dimension: execute_dimension(rc); return;
        case Subcommand::surface: execute_surface(rc); return;
    }
}

int run_cli(const std::vector<std::string>& argv) {
    RunConfig rc;
    try {
        rc = parse_args(argv);
    } catch (const HelpRequested& help) {
        std::cout << help.text;
        return 0;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    try {
        execute(rc);
        return 0;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "io failure: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace wheeltrace
