#pragma once

#include <cmath>
#include <quadmath.h>
#include <random>

#include "wheeltrace/wheel_model.hpp"

namespace testhelp {

// Deterministic draw of a valid config + angle whose per-term phases stay
// inside the budget (rejection on the budget, redraw otherwise).
struct ConfigDraw {
    wheeltrace::SystemConfig cfg;
    double t = 0.0;
};

inline ConfigDraw draw_config(std::mt19937_64& rng, int n_max, double q_max,
                              bool split_ratios = false) {
    std::uniform_real_distribution<double> uq(1.02, q_max);
    std::uniform_real_distribution<double> ut(0.0, 2.0 * M_PI);
    std::uniform_int_distribution<int> un(1, n_max);
    for (;;) {
        const double q_phi = uq(rng);
        const double q_r = split_ratios ? uq(rng) : q_phi;
        const int n = un(rng);
        const double t = ut(rng);
        // Reject draws outside the phase budget, with headroom for the n+1
        // wheel and the q*t argument used by the self-similarity identity.
        double phase = std::abs(t);
        bool ok = true;
        for (int k = 0; k <= n + 1; ++k) {
            phase *= q_phi;
            if (!(phase < wheeltrace::kPhaseBudget)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        return {wheeltrace::SystemConfig::split(q_r, q_phi, n), t};
    }
}

// Quad-precision position evaluation: the independent oracle for central
// finite differences. Double-precision differencing at h = 1e-6 has a noise
// floor near 5e-10, far above the truncation bound for small n; quad keeps
// the oracle's own error negligible.
struct QuadPoint {
    __float128 x;
    __float128 y;
};

inline QuadPoint position_quad(const wheeltrace::SystemConfig& cfg,
                               __float128 t) {
    __float128 x = 0, y = 0;
    __float128 amp = 1, phase = t;
    for (int k = 0; k < cfg.n; ++k) {
        x += amp * cosq(phase);
        y += amp * sinq(phase);
        amp /= static_cast<__float128>(cfg.q_r);
        phase *= static_cast<__float128>(cfg.q_phi);
    }
    return {x, y};
}

// (R(t+h) - R(t-h)) / 2h in quad precision, returned as doubles.
inline wheeltrace::PlanarPoint central_difference_quad(
    const wheeltrace::SystemConfig& cfg, double t, double h) {
    const QuadPoint hi = position_quad(cfg, static_cast<__float128>(t) + h);
    const QuadPoint lo = position_quad(cfg, static_cast<__float128>(t) - h);
    const __float128 inv = 1.0q / (2.0q * static_cast<__float128>(h));
    return {static_cast<double>((hi.x - lo.x) * inv),
            static_cast<double>((hi.y - lo.y) * inv)};
}

// Third-derivative scale sum_k (q_phi^3 / q_r)^k, the constant behind the
// O(h^2) truncation bound.
inline double third_derivative_scale(const wheeltrace::SystemConfig& cfg) {
    double sum = 0.0;
    double w = 1.0;
    const double ratio = cfg.q_phi * cfg.q_phi * cfg.q_phi / cfg.q_r;
    for (int k = 0; k < cfg.n; ++k) {
        sum += w;
        w *= ratio;
    }
    return sum;
}

}  // namespace testhelp
