#include "wheeltrace/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wheeltrace {

namespace {

void validate_window(double t0, double t1, std::int64_t steps) {
    if (!std::isfinite(t0) || !std::isfinite(t1) || t1 <= t0) {
        throw InvalidArgument("sampling window requires finite t1 > t0");
    }
    if (steps < 2) {
        throw InvalidArgument("steps must be at least 2");
    }
}

double grid_point(double t0, double span, std::int64_t i, std::int64_t steps) {
    return t0 + span * (static_cast<double>(i) / static_cast<double>(steps));
}

struct SimpsonState {
    const SystemConfig& cfg;
    int max_depth;
    double error_sum = 0.0;

    double speed(double t) const { return norm(velocity(cfg, t)); }

    // Classic adaptive Simpson with Richardson acceptance at |err| <= tol.
    double refine(double a, double fa, double c, double fc, double b, double fb,
                  double whole, double tol, int depth) {
        const double lm = 0.5 * (a + c);
        const double rm = 0.5 * (c + b);
        const double flm = speed(lm);
        const double frm = speed(rm);
        const double h = b - a;
        const double left = (fa + 4.0 * flm + fc) * (h / 12.0);
        const double right = (fc + 4.0 * frm + fb) * (h / 12.0);
        const double err = (left + right - whole) / 15.0;
        if (std::abs(err) <= tol) {
            error_sum += std::abs(err);
            return left + right + err;
        }
        if (depth >= max_depth) {
            throw NumericalError(
                "arc_length quadrature failed to converge within " +
                std::to_string(max_depth) + " subdivisions");
        }
        return refine(a, fa, lm, flm, c, fc, left, 0.5 * tol, depth + 1) +
               refine(c, fc, rm, frm, b, fb, right, 0.5 * tol, depth + 1);
    }
};

}  // namespace

Trajectory sample_trajectory(const SystemConfig& cfg, double t0, double t1,
                             std::int64_t steps) {
    cfg.validate();
    validate_window(t0, t1, steps);
    check_phase_budget(cfg, std::abs(t0) > std::abs(t1) ? t0 : t1);

    Trajectory traj{cfg, {}};
    traj.samples.reserve(static_cast<std::size_t>(steps) + 1);
    const double span = t1 - t0;
    for (std::int64_t i = 0; i <= steps; ++i) {
        const double t = grid_point(t0, span, i, steps);
        traj.samples.push_back({t, position(cfg, t), velocity(cfg, t)});
    }
    return traj;
}

std::vector<PlanarPoint> positions(const Trajectory& traj) {
    std::vector<PlanarPoint> pts;
    pts.reserve(traj.samples.size());
    for (const auto& s : traj.samples) pts.push_back(s.position);
    return pts;
}

ArcLengthResult arc_length(const SystemConfig& cfg, double t0, double t1,
                           double tol, int max_depth) {
    cfg.validate();
    if (!std::isfinite(t0) || !std::isfinite(t1) || t1 <= t0) {
        throw InvalidArgument("arc_length requires finite t1 > t0");
    }
    if (!(std::isfinite(tol) && tol > 0.0)) {
        throw InvalidArgument("arc_length tolerance must be positive");
    }
    if (max_depth < 1) {
        throw InvalidArgument("arc_length max_depth must be positive");
    }
    check_phase_budget(cfg, std::abs(t0) > std::abs(t1) ? t0 : t1);

    SimpsonState state{cfg, max_depth};
    const double c = 0.5 * (t0 + t1);
    const double fa = state.speed(t0);
    const double fc = state.speed(c);
    const double fb = state.speed(t1);
    const double whole = (fa + 4.0 * fc + fb) * ((t1 - t0) / 6.0);
    const double length = state.refine(t0, fa, c, fc, t1, fb, whole, tol, 0);
    return {length, state.error_sum};
}

std::vector<SeriesPoint> radius_series(const SystemConfig& cfg, double t0,
                                       double t1, std::int64_t steps) {
    const Trajectory traj = sample_trajectory(cfg, t0, t1, steps);
    std::vector<SeriesPoint> out;
    out.reserve(traj.samples.size());
    for (const auto& s : traj.samples) out.push_back({s.t, norm(s.position)});
    return out;
}

std::vector<SeriesPoint> speed_series(const SystemConfig& cfg, double t0,
                                      double t1, std::int64_t steps) {
    const Trajectory traj = sample_trajectory(cfg, t0, t1, steps);
    std::vector<SeriesPoint> out;
    out.reserve(traj.samples.size());
    for (const auto& s : traj.samples) out.push_back({s.t, norm(s.velocity)});
    return out;
}

std::vector<PlanarPoint> velocity_phase(const SystemConfig& cfg, double t0,
                                        double t1, std::int64_t steps) {
    const Trajectory traj = sample_trajectory(cfg, t0, t1, steps);
    std::vector<PlanarPoint> out;
    out.reserve(traj.samples.size());
    for (const auto& s : traj.samples) out.push_back(s.velocity);
    return out;
}

SurfaceGrid surface_grid(const SystemConfig& cfg, double t0, double t1,
                         std::int64_t t_steps, int n_min, int n_max) {
    cfg.validate();
    validate_window(t0, t1, t_steps);
    if (n_min < 1 || n_min > n_max || n_max > cfg.n) {
        throw InvalidArgument("surface grid requires 1 <= n_min <= n_max <= n");
    }
    check_phase_budget(cfg, std::abs(t0) > std::abs(t1) ? t0 : t1);

    SurfaceGrid grid;
    grid.t_values.reserve(static_cast<std::size_t>(t_steps) + 1);
    const double span = t1 - t0;
    for (std::int64_t i = 0; i <= t_steps; ++i) {
        grid.t_values.push_back(grid_point(t0, span, i, t_steps));
    }
    for (int n = n_min; n <= n_max; ++n) grid.n_values.push_back(n);

    grid.magnitudes.resize(grid.t_values.size());
    for (std::size_t i = 0; i < grid.t_values.size(); ++i) {
        auto& row = grid.magnitudes[i];
        row.reserve(grid.n_values.size());
        for (int n : grid.n_values) {
            row.push_back(norm(position(cfg.truncated(n), grid.t_values[i])));
        }
    }
    return grid;
}

}  // namespace wheeltrace
