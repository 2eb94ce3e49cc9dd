#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wheeltrace/wheel_model.hpp"

namespace wheeltrace {

struct RoughnessRow {
    double delta_t = 0.0;
    double mean_increment = 0.0;
    double max_increment = 0.0;
};

/// Velocity-increment statistics over a probe set, one row per delta_t,
/// rows ordered by strictly decreasing delta_t.
struct RoughnessScan {
    SystemConfig cfg;
    std::vector<RoughnessRow> rows;
};

struct DivergenceRow {
    double t = 0.0;
    double distance = 0.0;
};

/// Pointwise |R_A(t) - R_B(t)| between two wheel systems.
struct DivergenceCurve {
    SystemConfig cfg_a;
    SystemConfig cfg_b;
    std::vector<DivergenceRow> rows;
};

/// |velocity(t + delta_t) - velocity(t)|, evaluated in the factored form
/// sum_k w_k e^{i phi_k} (e^{i q_phi^k delta_t} - 1) so the delta_t phase
/// products never pass through a lossy t + delta_t addition. Rejects
/// delta_t <= 0.
double velocity_increment(const SystemConfig& cfg, double t, double delta_t);

/// q_phi^(1-n): the delta_t scale separating rough from smooth behaviour of
/// the finite-n velocity.
double roughness_threshold(const SystemConfig& cfg);

/// 64 probe angles, uniform over [0, 2*pi).
std::vector<double> default_probe_times();

/// Geometric delta_t ladder from dt_max down to dt_min, per_decade points per
/// factor of 10, strictly decreasing, endpoints included.
std::vector<double> decade_scales(double dt_max, double dt_min, int per_decade);

/// Mean and max velocity_increment over the probe set for each delta_t scale.
/// Scales must be positive and strictly decreasing.
RoughnessScan roughness_scan(const SystemConfig& cfg,
                             std::span<const double> probe_times,
                             std::span<const double> delta_t_scales);

/// delta_t at which the log-log slope of mean_increment transitions from ~1
/// (smooth regime) to ~0 (rough plateau), located as the intersection of a
/// two-segment least-squares fit. Requires the scan to span >= 3 decades and
/// bracket roughness_threshold; rejects scans without a slope change.
double crossover_scale(const RoughnessScan& scan);

/// |R_A - R_B| on a uniform grid of steps+1 points over [t0, t1].
DivergenceCurve divergence(const SystemConfig& cfg_a, const SystemConfig& cfg_b,
                           double t0, double t1, std::int64_t steps);

}  // namespace wheeltrace
