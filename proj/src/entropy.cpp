#include "wheeltrace/entropy.hpp"

#include <algorithm>
#include <cmath>

namespace wheeltrace {

RadiusHistogram radius_histogram(const SystemConfig& cfg, std::int64_t horizon,
                                 int bins, double t0, double t1) {
    cfg.validate();
    if (bins < 2) throw InvalidArgument("bins must be at least 2");
    if (horizon < bins) throw InvalidArgument("horizon must be at least bins");
    if (!std::isfinite(t0) || !std::isfinite(t1) || t1 <= t0) {
        throw InvalidArgument("histogram window requires finite t1 > t0");
    }
    check_phase_budget(cfg, std::abs(t0) > std::abs(t1) ? t0 : t1);

    const double top = max_radius(cfg);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(bins), 0);
    const double span = t1 - t0;
    for (std::int64_t i = 0; i < horizon; ++i) {
        const double t =
            t0 + span * (static_cast<double>(i) / static_cast<double>(horizon));
        const double r = norm(position(cfg, t));
        auto bin = static_cast<std::int64_t>(r / top * bins);
        bin = std::clamp<std::int64_t>(bin, 0, bins - 1);
        ++counts[static_cast<std::size_t>(bin)];
    }

    RadiusHistogram hist;
    hist.sample_count = horizon;
    hist.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
    for (int b = 0; b <= bins; ++b) {
        hist.bin_edges[static_cast<std::size_t>(b)] =
            top * static_cast<double>(b) / static_cast<double>(bins);
    }
    hist.probabilities.resize(static_cast<std::size_t>(bins));
    for (int b = 0; b < bins; ++b) {
        hist.probabilities[static_cast<std::size_t>(b)] =
            static_cast<double>(counts[static_cast<std::size_t>(b)]) /
            static_cast<double>(horizon);
    }
    return hist;
}

double entropy_bits(const RadiusHistogram& hist) {
    if (hist.probabilities.empty() ||
        hist.bin_edges.size() != hist.probabilities.size() + 1) {
        throw InvalidArgument("histogram shape is inconsistent");
    }
    double total = 0.0;
    for (double p : hist.probabilities) {
        if (!(p >= 0.0)) throw InvalidArgument("probabilities must be >= 0");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw InvalidArgument("probabilities must sum to 1");
    }
    double entropy = 0.0;
    for (double p : hist.probabilities) {
        if (p > 0.0) entropy -= p * std::log2(p);
    }
    return std::max(entropy, 0.0);
}

EntropyEstimate entropy_estimate(const SystemConfig& cfg, std::int64_t horizon,
                                 int bins, double t0, double t1) {
    const RadiusHistogram hist = radius_histogram(cfg, horizon, bins, t0, t1);
    return {cfg.q_phi, cfg.n, bins, horizon, entropy_bits(hist)};
}

EntropySweepResult entropy_sweep(double q_min, double q_max, double q_step,
                                 int n, std::int64_t horizon, int bins,
                                 double t0, double t1) {
    if (!(std::isfinite(q_min) && q_min > 1.0)) {
        throw InvalidArgument("q_min must exceed 1");
    }
    if (!(std::isfinite(q_max) && q_max > q_min)) {
        throw InvalidArgument("q_max must exceed q_min");
    }
    if (!(std::isfinite(q_step) && q_step > 0.0)) {
        throw InvalidArgument("q_step must be positive");
    }

    EntropySweepResult result;
    double best = -1.0;
    for (std::int64_t i = 0;; ++i) {
        const double q = q_min + q_step * static_cast<double>(i);
        if (q > q_max + q_step * 1e-9) break;  // upper edge inclusive
        EntropySweepEntry entry;
        entry.q = q;
        try {
            entry.estimate = entropy_estimate(SystemConfig::uniform(q, n),
                                              horizon, bins, t0, t1);
            if (entry.estimate->entropy_bits > best) {
                best = entry.estimate->entropy_bits;
                result.argmax_q = q;
            }
        } catch (const NumericalError& e) {
            entry.error = e.what();
        }
        result.entries.push_back(std::move(entry));
    }
    if (best < 0.0) {
        throw NumericalError("entropy sweep produced no successful entries");
    }
    return result;
}

}  // namespace wheeltrace
