#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wheeltrace/wheel_model.hpp"

namespace wheeltrace {

/// Empirical distribution of |R(t)|, binned uniformly over [0, max_radius].
struct RadiusHistogram {
    std::vector<double> bin_edges;     // bins+1 edges
    std::vector<double> probabilities; // bins entries, sums to 1
    std::int64_t sample_count = 0;
};

struct EntropyEstimate {
    double q = 0.0;
    int n = 0;
    int bins = 0;
    std::int64_t horizon = 0;
    double entropy_bits = 0.0;

    bool operator==(const EntropyEstimate&) const = default;
};

/// One grid point of an entropy sweep; `estimate` is empty when evaluation
/// failed (e.g. the phase budget), with the reason in `error`.
struct EntropySweepEntry {
    double q = 0.0;
    std::optional<EntropyEstimate> estimate;
    std::string error;
};

struct EntropySweepResult {
    std::vector<EntropySweepEntry> entries;
    double argmax_q = 0.0;
};

// Sampling protocol defaults. The bin range is always [0, max_radius(cfg)]
// so estimates stay comparable across q.
inline constexpr std::int64_t kDefaultEntropyHorizon = 1 << 16;
inline constexpr int kDefaultEntropyBins = 64;
inline constexpr double kDefaultEntropyWindowEnd =
    100.0 * 3.14159265358979323846;

/// |R(t)| sampled at `horizon` uniform angles in [t0, t1) (left-closed grid),
/// binned uniformly over [0, max_radius(cfg)]. Requires horizon >= bins >= 2.
RadiusHistogram radius_histogram(const SystemConfig& cfg, std::int64_t horizon,
                                 int bins, double t0, double t1);

/// Shannon entropy -sum p_i log2 p_i in bits; zero-probability bins
/// contribute nothing. Result lies in [0, log2(bins)].
double entropy_bits(const RadiusHistogram& hist);

/// Histogram + entropy for one configuration.
EntropyEstimate entropy_estimate(const SystemConfig& cfg, std::int64_t horizon,
                                 int bins, double t0, double t1);

/// One estimate per q on the grid q_min, q_min+q_step, ..., <= q_max, with
/// q_r = q_phi = q. Per-q evaluation failures become marked gaps; argmax_q is
/// the grid q with the largest entropy among successful entries.
EntropySweepResult entropy_sweep(double q_min, double q_max, double q_step,
                                 int n,
                                 std::int64_t horizon = kDefaultEntropyHorizon,
                                 int bins = kDefaultEntropyBins, double t0 = 0.0,
                                 double t1 = kDefaultEntropyWindowEnd);

}  // namespace wheeltrace
