#include "wheeltrace/roughness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace wheeltrace {

namespace {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double ssr = 0.0;
};

LineFit fit_line(std::span<const double> xs, std::span<const double> ys,
                 std::size_t begin, std::size_t end) {
    const auto n = static_cast<double>(end - begin);
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    LineFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    for (std::size_t i = begin; i < end; ++i) {
        const double r = ys[i] - (fit.slope * xs[i] + fit.intercept);
        fit.ssr += r * r;
    }
    return fit;
}

}  // namespace

double velocity_increment(const SystemConfig& cfg, double t, double delta_t) {
    cfg.validate();
    if (!std::isfinite(t)) throw InvalidArgument("t must be finite");
    if (!(std::isfinite(delta_t) && delta_t > 0.0)) {
        throw InvalidArgument("delta_t must be positive");
    }

    const double ratio = cfg.q_phi / cfg.q_r;
    const auto n = static_cast<std::size_t>(cfg.n);
    std::vector<double> phase(n), delta(n), weight(n);
    double ph = t, dl = delta_t, w = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (!(std::abs(ph) + dl < kPhaseBudget)) {
            throw PhaseBudgetError(
                "phase q_phi^" + std::to_string(k) +
                " * (t + delta_t) exceeds the phase budget 2^40");
        }
        phase[k] = ph;
        delta[k] = dl;
        weight[k] = w;
        ph *= cfg.q_phi;
        dl *= cfg.q_phi;
        w *= ratio;
    }

    double x = 0.0;
    double y = 0.0;
    for (std::size_t k = n; k-- > 0;) {
        const double c = std::cos(phase[k]);
        const double s = std::sin(phase[k]);
        const double half = std::sin(0.5 * delta[k]);
        const double dc = -2.0 * half * half;  // cos(delta) - 1, no cancellation
        const double ds = std::sin(delta[k]);
        x += weight[k] * (c * dc - s * ds);
        y += weight[k] * (c * ds + s * dc);
    }
    return std::hypot(x, y);
}

double roughness_threshold(const SystemConfig& cfg) {
    cfg.validate();
    return std::pow(cfg.q_phi, 1.0 - cfg.n);
}

std::vector<double> default_probe_times() {
    std::vector<double> probes(64);
    for (std::size_t i = 0; i < probes.size(); ++i) {
        probes[i] = 2.0 * std::numbers::pi * static_cast<double>(i) / 64.0;
    }
    return probes;
}

std::vector<double> decade_scales(double dt_max, double dt_min,
                                  int per_decade) {
    if (!(std::isfinite(dt_max) && std::isfinite(dt_min) && dt_min > 0.0 &&
          dt_max > dt_min)) {
        throw InvalidArgument("scale ladder requires dt_max > dt_min > 0");
    }
    if (per_decade < 1) throw InvalidArgument("per_decade must be positive");
    const double decades = std::log10(dt_max / dt_min);
    const auto count =
        static_cast<std::size_t>(std::ceil(decades * per_decade)) + 1;
    std::vector<double> scales(count);
    const double lmax = std::log10(dt_max);
    const double lmin = std::log10(dt_min);
    for (std::size_t i = 0; i < count; ++i) {
        const double f = static_cast<double>(i) / static_cast<double>(count - 1);
        scales[i] = std::pow(10.0, lmax + f * (lmin - lmax));
    }
    scales.back() = dt_min;
    return scales;
}

RoughnessScan roughness_scan(const SystemConfig& cfg,
                             std::span<const double> probe_times,
                             std::span<const double> delta_t_scales) {
    cfg.validate();
    if (probe_times.empty()) throw InvalidArgument("probe set must be non-empty");
    for (double t : probe_times) {
        if (!std::isfinite(t)) throw InvalidArgument("probe times must be finite");
    }
    if (delta_t_scales.empty()) {
        throw InvalidArgument("delta_t scale list must be non-empty");
    }
    for (std::size_t i = 0; i < delta_t_scales.size(); ++i) {
        if (!(std::isfinite(delta_t_scales[i]) && delta_t_scales[i] > 0.0)) {
            throw InvalidArgument("delta_t scales must be positive");
        }
        if (i > 0 && !(delta_t_scales[i] < delta_t_scales[i - 1])) {
            throw InvalidArgument("delta_t scales must be strictly decreasing");
        }
    }

    RoughnessScan scan{cfg, {}};
    scan.rows.reserve(delta_t_scales.size());
    for (double dt : delta_t_scales) {
        double sum = 0.0;
        double peak = 0.0;
        for (double t : probe_times) {
            const double inc = velocity_increment(cfg, t, dt);
            sum += inc;
            peak = std::max(peak, inc);
        }
        scan.rows.push_back(
            {dt, sum / static_cast<double>(probe_times.size()), peak});
    }
    return scan;
}

double crossover_scale(const RoughnessScan& scan) {
    constexpr std::size_t kMinPerSegment = 3;
    const auto& rows = scan.rows;
    if (rows.size() < 2 * kMinPerSegment) {
        throw InvalidArgument("crossover fit needs at least 6 scan rows");
    }
    const double dt_max = rows.front().delta_t;
    const double dt_min = rows.back().delta_t;
    if (!(dt_max / dt_min >= 1e3)) {
        throw InvalidArgument("scan must span at least 3 decades of delta_t");
    }
    const double threshold = roughness_threshold(scan.cfg);
    if (!(dt_min < threshold && threshold < dt_max)) {
        throw InvalidArgument("scan does not bracket q_phi^(1-n)");
    }

    // Ascending log(delta_t).
    std::vector<double> xs(rows.size()), ys(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[rows.size() - 1 - i];
        if (!(row.mean_increment > 0.0)) {
            throw NumericalError("scan has a zero mean increment row");
        }
        xs[i] = std::log(row.delta_t);
        ys[i] = std::log(row.mean_increment);
    }

    double best_ssr = std::numeric_limits<double>::infinity();
    LineFit best_left, best_right;
    for (std::size_t split = kMinPerSegment; split + kMinPerSegment <= xs.size();
         ++split) {
        const LineFit left = fit_line(xs, ys, 0, split);
        const LineFit right = fit_line(xs, ys, split, xs.size());
        if (left.ssr + right.ssr < best_ssr) {
            best_ssr = left.ssr + right.ssr;
            best_left = left;
            best_right = right;
        }
    }

    // Small-delta_t side must rise ~linearly, plateau side must flatten.
    if (!(best_left.slope - best_right.slope >= 0.5)) {
        throw InvalidArgument("scan does not bracket a slope change");
    }
    const double x_star = (best_right.intercept - best_left.intercept) /
                          (best_left.slope - best_right.slope);
    if (!(x_star >= xs.front() && x_star <= xs.back())) {
        throw InvalidArgument("fitted slope change lies outside the scan range");
    }
    return std::exp(x_star);
}

DivergenceCurve divergence(const SystemConfig& cfg_a, const SystemConfig& cfg_b,
                           double t0, double t1, std::int64_t steps) {
    cfg_a.validate();
    cfg_b.validate();
    if (!std::isfinite(t0) || !std::isfinite(t1) || t1 <= t0) {
        throw InvalidArgument("divergence window requires finite t1 > t0");
    }
    if (steps < 2) throw InvalidArgument("steps must be at least 2");
    const double t_extreme = std::abs(t0) > std::abs(t1) ? t0 : t1;
    check_phase_budget(cfg_a, t_extreme);
    check_phase_budget(cfg_b, t_extreme);

    DivergenceCurve curve{cfg_a, cfg_b, {}};
    curve.rows.reserve(static_cast<std::size_t>(steps) + 1);
    const double span = t1 - t0;
    for (std::int64_t i = 0; i <= steps; ++i) {
        const double t =
            t0 + span * (static_cast<double>(i) / static_cast<double>(steps));
        curve.rows.push_back(
            {t, distance(position(cfg_a, t), position(cfg_b, t))});
    }
    return curve;
}

}  // namespace wheeltrace
