#include "wheeltrace/wheel_model.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace wheeltrace {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw InvalidArgument(std::string(name) + " must be finite");
    }
}

// Per-term angles and weights for one evaluation. Reused across calls on a
// thread to keep dense sampling loops allocation-free.
struct TermBuffers {
    std::vector<double> phase;
    std::vector<double> weight;
};
thread_local TermBuffers tl_terms;

// Fills phase[k] = q_phi^k * t via the ascending product recurrence and
// weight[k] = ratio^k. The recurrence form is a contract, not a convenience:
// self_similarity_residual and roughness::velocity_increment rely on
// successive phases being the exact rounded products of their predecessors.
TermBuffers& fill_terms(const SystemConfig& cfg, double t, double ratio) {
    TermBuffers& b = tl_terms;
    const auto n = static_cast<std::size_t>(cfg.n);
    b.phase.resize(n);
    b.weight.resize(n);
    double phase = t;
    double weight = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (!(std::abs(phase) < kPhaseBudget)) {
            throw PhaseBudgetError(
                "phase q_phi^" + std::to_string(k) + " * t = " +
                std::to_string(phase) + " exceeds the phase budget 2^40");
        }
        b.phase[k] = phase;
        b.weight[k] = weight;
        phase *= cfg.q_phi;
        weight *= ratio;
    }
    return b;
}

}  // namespace

SystemConfig SystemConfig::uniform(double q, int n, double r0) {
    SystemConfig cfg{n, q, q, r0, std::nullopt};
    cfg.validate();
    return cfg;
}

SystemConfig SystemConfig::split(double q_r, double q_phi, int n, double r0) {
    SystemConfig cfg{n, q_r, q_phi, r0, std::nullopt};
    cfg.validate();
    return cfg;
}

SystemConfig SystemConfig::with_rational(std::int64_t a, std::int64_t b, int n,
                                         double r0) {
    if (b < 1 || a <= b) {
        throw InvalidArgument("q rational a/b requires a > b >= 1");
    }
    const std::int64_t g = std::gcd(a, b);
    a /= g;
    b /= g;
    const double q = static_cast<double>(a) / static_cast<double>(b);
    SystemConfig cfg{n, q, q, r0, RationalRatio{a, b}};
    cfg.validate();
    return cfg;
}

SystemConfig SystemConfig::truncated(int wheels) const {
    if (wheels < 1 || wheels > n) {
        throw InvalidArgument("truncated wheel count must be in [1, n]");
    }
    SystemConfig cfg = *this;
    cfg.n = wheels;
    return cfg;
}

void SystemConfig::validate() const {
    if (n < 1) throw InvalidArgument("n must be a positive wheel count");
    if (!(std::isfinite(q_r) && q_r > 1.0))
        throw InvalidArgument("q_r must exceed 1");
    if (!(std::isfinite(q_phi) && q_phi > 1.0))
        throw InvalidArgument("q_phi must exceed 1");
    if (!(std::isfinite(r0) && r0 > 0.0))
        throw InvalidArgument("r0 must be positive");
    if (q_phi_rational) {
        const auto [a, b] = *q_phi_rational;
        if (b < 1 || a <= b)
            throw InvalidArgument("q_phi rational a/b requires a > b >= 1");
        if (std::gcd(a, b) != 1)
            throw InvalidArgument("q_phi rational a/b must be in lowest terms");
        if (q_phi != static_cast<double>(a) / static_cast<double>(b))
            throw InvalidArgument("q_phi does not match its rational value a/b");
    }
}

PlanarPoint position(const SystemConfig& cfg, double t) {
    cfg.validate();
    require_finite(t, "t");
    const TermBuffers& b = fill_terms(cfg, t, 1.0 / cfg.q_r);
    // Smallest terms first.
    double x = 0.0;
    double y = 0.0;
    for (int k = cfg.n - 1; k >= 0; --k) {
        const auto i = static_cast<std::size_t>(k);
        x += b.weight[i] * std::cos(b.phase[i]);
        y += b.weight[i] * std::sin(b.phase[i]);
    }
    return {x, y};
}

PlanarPoint velocity(const SystemConfig& cfg, double t) {
    cfg.validate();
    require_finite(t, "t");
    const TermBuffers& b = fill_terms(cfg, t, cfg.q_phi / cfg.q_r);
    double x = 0.0;
    double y = 0.0;
    for (int k = cfg.n - 1; k >= 0; --k) {
        const auto i = static_cast<std::size_t>(k);
        x -= b.weight[i] * std::sin(b.phase[i]);
        y += b.weight[i] * std::cos(b.phase[i]);
    }
    return {x, y};
}

double max_radius(const SystemConfig& cfg) {
    cfg.validate();
    std::vector<double> w(static_cast<std::size_t>(cfg.n));
    double weight = 1.0;
    for (auto& v : w) {
        v = weight;
        weight /= cfg.q_r;
    }
    double sum = 0.0;
    for (int k = cfg.n - 1; k >= 0; --k) sum += w[static_cast<std::size_t>(k)];
    return sum;
}

double max_speed(const SystemConfig& cfg) {
    cfg.validate();
    const double ratio = cfg.q_phi / cfg.q_r;
    std::vector<double> w(static_cast<std::size_t>(cfg.n));
    double weight = 1.0;
    for (auto& v : w) {
        v = weight;
        weight *= ratio;
    }
    double sum = 0.0;
    for (int k = cfg.n - 1; k >= 0; --k) sum += w[static_cast<std::size_t>(k)];
    return sum;
}

double self_similarity_residual(const SystemConfig& cfg, double t) {
    cfg.validate();
    require_finite(t, "t");
    SystemConfig wider = cfg;
    wider.n = cfg.n + 1;
    // q_phi * t here rounds exactly like the first recurrence step inside
    // position(wider, t), so both routes see bit-identical angles.
    const PlanarPoint lhs = position(cfg, cfg.q_phi * t);
    const PlanarPoint sum = position(wider, t);
    const PlanarPoint circle{std::cos(t), std::sin(t)};
    const PlanarPoint rhs = cfg.q_r * (sum - circle);
    return distance(lhs, rhs);
}

double fundamental_period(RationalRatio q_phi_rational, int n) {
    const auto [a, b] = q_phi_rational;
    if (n < 1) throw InvalidArgument("n must be a positive wheel count");
    if (b < 1 || a <= b)
        throw InvalidArgument("q_phi rational a/b requires a > b >= 1");
    if (std::gcd(a, b) != 1)
        throw InvalidArgument("q_phi rational a/b must be in lowest terms");
    const double period =
        2.0 * M_PI * std::pow(static_cast<double>(b), n - 1);
    if (!std::isfinite(period)) {
        throw NumericalError("fundamental period overflows double precision");
    }
    return period;
}

double fundamental_period(const SystemConfig& cfg) {
    cfg.validate();
    if (!cfg.q_phi_rational) {
        throw InvalidArgument(
            "fundamental period requires a rational q_phi (set q_phi_rational)");
    }
    return fundamental_period(*cfg.q_phi_rational, cfg.n);
}

void check_phase_budget(const SystemConfig& cfg, double t) {
    cfg.validate();
    require_finite(t, "t");
    double phase = std::abs(t);
    for (int k = 0; k < cfg.n; ++k) {
        if (!(phase < kPhaseBudget)) {
            throw PhaseBudgetError(
                "phase q_phi^" + std::to_string(k) + " * t = " +
                std::to_string(phase) + " exceeds the phase budget 2^40");
        }
        phase *= cfg.q_phi;
    }
}

double phase_budget_horizon(const SystemConfig& cfg) {
    cfg.validate();
    return kPhaseBudget / std::pow(cfg.q_phi, cfg.n - 1);
}

}  // namespace wheeltrace
