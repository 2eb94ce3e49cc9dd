#pragma once

#include <cstdint>
#include <vector>

#include "wheeltrace/wheel_model.hpp"

namespace wheeltrace {

struct TrajectorySample {
    double t = 0.0;
    PlanarPoint position;
    PlanarPoint velocity;
};

/// Ordered trajectory samples over an angle interval, strictly increasing t.
struct Trajectory {
    SystemConfig cfg;
    std::vector<TrajectorySample> samples;
};

/// One (t, value) entry of a scalar series.
struct SeriesPoint {
    double t = 0.0;
    double value = 0.0;
};

/// |R_{n_j}(t_i)| on a (t, wheel-count) grid, for external 3-D plotting.
/// magnitudes[i][j] corresponds to t_values[i] and n_values[j].
struct SurfaceGrid {
    std::vector<double> t_values;
    std::vector<int> n_values;
    std::vector<std::vector<double>> magnitudes;
};

struct ArcLengthResult {
    double length = 0.0;
    double error_estimate = 0.0;
};

/// steps+1 uniform samples over [t0, t1], endpoints included.
Trajectory sample_trajectory(const SystemConfig& cfg, double t0, double t1,
                             std::int64_t steps);

/// Positions of a trajectory, in sample order.
std::vector<PlanarPoint> positions(const Trajectory& traj);

/// Arc length of the scriber path over [t0, t1] by adaptive Simpson
/// quadrature of |velocity|; error_estimate is the accumulated Richardson
/// estimate and is kept below tol. Throws NumericalError if the recursion
/// needs more than max_depth halvings anywhere.
ArcLengthResult arc_length(const SystemConfig& cfg, double t0, double t1,
                           double tol, int max_depth = 40);

std::vector<SeriesPoint> radius_series(const SystemConfig& cfg, double t0,
                                       double t1, std::int64_t steps);

std::vector<SeriesPoint> speed_series(const SystemConfig& cfg, double t0,
                                      double t1, std::int64_t steps);

/// Velocity samples projected onto the (dx/dt, dy/dt) plane.
std::vector<PlanarPoint> velocity_phase(const SystemConfig& cfg, double t0,
                                        double t1, std::int64_t steps);

/// Grid of |R(t)| for every wheel-count truncation n_min..n_max of cfg.
SurfaceGrid surface_grid(const SystemConfig& cfg, double t0, double t1,
                         std::int64_t t_steps, int n_min, int n_max);

}  // namespace wheeltrace
