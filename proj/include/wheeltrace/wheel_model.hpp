#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include "wheeltrace/errors.hpp"

namespace wheeltrace {

/// Largest per-term angle |q_phi^k * t| the evaluators accept. Above this a
/// double no longer resolves the angle modulo 2*pi to a useful accuracy, so
/// operations throw PhaseBudgetError instead of returning degraded values.
inline constexpr double kPhaseBudget = 1099511627776.0;  // 2^40

/// A point (or vector) in the normalized plane, lengths in units of r0.
struct PlanarPoint {
    double x = 0.0;
    double y = 0.0;

    friend constexpr PlanarPoint operator+(PlanarPoint a, PlanarPoint b) {
        return {a.x + b.x, a.y + b.y};
    }
    friend constexpr PlanarPoint operator-(PlanarPoint a, PlanarPoint b) {
        return {a.x - b.x, a.y - b.y};
    }
    friend constexpr PlanarPoint operator*(double s, PlanarPoint p) {
        return {s * p.x, s * p.y};
    }
    bool operator==(const PlanarPoint&) const = default;
};

inline double norm(PlanarPoint p) { return std::hypot(p.x, p.y); }
inline double distance(PlanarPoint a, PlanarPoint b) { return norm(a - b); }

/// Exact rational value a/b in lowest terms, a > b >= 1.
struct RationalRatio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    bool operator==(const RationalRatio&) const = default;
};

/// Full parameterization of the nested wheel system: n wheels, consecutive
/// radii shrinking by q_r, consecutive rotation angles growing by q_phi,
/// largest radius r0. All trajectory math is done in normalized units
/// (r0 = 1); r0 only scales exported data.
///
/// When q_phi_rational is set it is authoritative: q_phi is derived from it
/// and exact period computation becomes available.
struct SystemConfig {
    int n = 1;
    double q_r = 2.0;
    double q_phi = 2.0;
    double r0 = 1.0;
    std::optional<RationalRatio> q_phi_rational;

    static SystemConfig uniform(double q, int n, double r0 = 1.0);
    static SystemConfig split(double q_r, double q_phi, int n, double r0 = 1.0);
    /// q_phi fixed to a/b exactly; q_r defaults to the same value.
    static SystemConfig with_rational(std::int64_t a, std::int64_t b, int n,
                                      double r0 = 1.0);

    /// Same ratios and r0, truncated to `wheels` wheels (wheels <= n).
    SystemConfig truncated(int wheels) const;

    /// Throws InvalidArgument if any field violates its constraint.
    void validate() const;

    bool operator==(const SystemConfig&) const = default;
};

/// Normalized scriber position R(t) = sum_{k<n} q_r^-k (cos(q_phi^k t),
/// sin(q_phi^k t)). Rejects non-finite t; throws PhaseBudgetError when any
/// per-term angle exceeds kPhaseBudget.
PlanarPoint position(const SystemConfig& cfg, double t);

/// dR/dt = sum_{k<n} (q_phi/q_r)^k (-sin(q_phi^k t), cos(q_phi^k t)).
PlanarPoint velocity(const SystemConfig& cfg, double t);

/// sum_{k<n} q_r^-k, the radius of the disc the trajectory lives in.
double max_radius(const SystemConfig& cfg);

/// sum_{k<n} (q_phi/q_r)^k, the speed bound; equals n when q_r == q_phi.
double max_speed(const SystemConfig& cfg);

/// |R_n(q_phi t) - q_r (R_{n+1}(t) - e^{it})|. The index-shift identity makes
/// this zero in exact arithmetic for any ratios; the returned value is the
/// floating-point residual.
double self_similarity_residual(const SystemConfig& cfg, double t);

/// Smallest T > 0 with q_phi^k T = 0 (mod 2*pi) for all k < n, which is
/// 2*pi * b^(n-1) for q_phi = a/b in lowest terms. Rejects a <= b.
double fundamental_period(RationalRatio q_phi_rational, int n);

/// Convenience overload; requires cfg.q_phi_rational to be set.
double fundamental_period(const SystemConfig& cfg);

/// Throws PhaseBudgetError if evaluating the system at angle t would exceed
/// kPhaseBudget on any term. Since per-term angles grow monotonically in |t|,
/// checking an interval's endpoint of larger magnitude covers the interval.
void check_phase_budget(const SystemConfig& cfg, double t);

/// Largest |t| that passes check_phase_budget for this config.
double phase_budget_horizon(const SystemConfig& cfg);

}  // namespace wheeltrace
