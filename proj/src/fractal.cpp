#include "wheeltrace/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_set>

namespace wheeltrace {

namespace {

struct Bounds {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();

    void absorb(PlanarPoint p) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
};

Bounds bounds_of(std::span<const PlanarPoint> points) {
    Bounds b;
    for (const auto& p : points) b.absorb(p);
    return b;
}

struct CellHash {
    std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& c) const {
        auto h = static_cast<std::uint64_t>(c.first) * 0x9e3779b97f4a7c15ULL;
        h ^= static_cast<std::uint64_t>(c.second) + 0x9e3779b97f4a7c15ULL +
             (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace

std::size_t box_count(std::span<const PlanarPoint> points, double scale) {
    if (points.empty()) throw InvalidArgument("box_count requires points");
    if (!(std::isfinite(scale) && scale > 0.0)) {
        throw InvalidArgument("box scale must be positive");
    }
    const Bounds b = bounds_of(points);
    std::unordered_set<std::pair<std::int64_t, std::int64_t>, CellHash> cells;
    cells.reserve(points.size());
    for (const auto& p : points) {
        const auto ix = static_cast<std::int64_t>(
            std::floor((p.x - b.min_x) / scale));
        const auto iy = static_cast<std::int64_t>(
            std::floor((p.y - b.min_y) / scale));
        cells.emplace(ix, iy);
    }
    return cells.size();
}

std::vector<double> default_box_scales(std::span<const PlanarPoint> points) {
    if (points.empty()) throw InvalidArgument("box scales require points");
    const Bounds b = bounds_of(points);
    const double extent = std::max(b.max_x - b.min_x, b.max_y - b.min_y);
    if (!(extent > 0.0)) {
        throw InvalidArgument("point set is degenerate (zero extent)");
    }
    constexpr int kCount = 12;
    std::vector<double> scales(kCount);
    const double hi = std::log(extent / 4.0);
    const double lo = std::log(extent / 4096.0);
    for (int i = 0; i < kCount; ++i) {
        const double f = static_cast<double>(i) / (kCount - 1);
        scales[static_cast<std::size_t>(i)] = std::exp(hi + f * (lo - hi));
    }
    return scales;
}

BoxCountEstimate box_dimension(std::span<const PlanarPoint> points,
                               std::span<const double> scales) {
    if (points.empty()) throw InvalidArgument("box_dimension requires points");
    if (scales.size() < 4) {
        throw InvalidArgument("box_dimension requires at least 4 scales");
    }
    BoxCountEstimate est;
    est.scales.assign(scales.begin(), scales.end());
    for (double s : est.scales) {
        if (!(std::isfinite(s) && s > 0.0)) {
            throw InvalidArgument("box scales must be positive");
        }
    }
    std::sort(est.scales.begin(), est.scales.end(), std::greater<>());
    if (!(est.scales.front() / est.scales.back() >= 100.0)) {
        throw InvalidArgument("box scales must span at least two decades");
    }

    est.counts.reserve(est.scales.size());
    for (double s : est.scales) est.counts.push_back(box_count(points, s));
    for (std::size_t i = 1; i < est.counts.size(); ++i) {
        if (est.counts[i] < est.counts[i - 1]) {
            throw NumericalError("box counts are not monotone across scales");
        }
    }

    // Slope of log(count) vs log(1/scale).
    const auto m = static_cast<double>(est.scales.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < est.scales.size(); ++i) {
        const double x = std::log(1.0 / est.scales[i]);
        const double y = std::log(static_cast<double>(est.counts[i]));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    const double denom = m * sxx - sx * sx;
    est.dimension = (m * sxy - sx * sy) / denom;
    const double intercept = (sy - est.dimension * sx) / m;
    double ss_res = 0.0;
    const double mean_y = sy / m;
    double ss_tot = 0.0;
    for (std::size_t i = 0; i < est.scales.size(); ++i) {
        const double x = std::log(1.0 / est.scales[i]);
        const double y = std::log(static_cast<double>(est.counts[i]));
        const double r = y - (est.dimension * x + intercept);
        ss_res += r * r;
        ss_tot += (y - mean_y) * (y - mean_y);
    }
    est.fit_r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 0.0;
    return est;
}

ZoomWindow zoom_window(std::span<const PlanarPoint> points, PlanarPoint center,
                       double width, std::size_t resample) {
    if (!(std::isfinite(width) && width > 0.0)) {
        throw InvalidArgument("zoom width must be positive");
    }
    if (!std::isfinite(center.x) || !std::isfinite(center.y)) {
        throw InvalidArgument("zoom center must be finite");
    }
    if (resample < 1) throw InvalidArgument("resample must be positive");

    const double half = 0.5 * width;
    std::vector<PlanarPoint> inside;
    for (const auto& p : points) {
        if (std::abs(p.x - center.x) <= half &&
            std::abs(p.y - center.y) <= half) {
            inside.push_back(p);
        }
    }
    if (inside.empty()) {
        throw InvalidArgument("zoom window does not intersect the trajectory");
    }

    const Bounds b = bounds_of(inside);
    const double ex = b.max_x - b.min_x;
    const double ey = b.max_y - b.min_y;
    for (auto& p : inside) {
        p.x = ex > 0.0 ? (p.x - b.min_x) / ex : 0.5;
        p.y = ey > 0.0 ? (p.y - b.min_y) / ey : 0.5;
    }

    ZoomWindow window{center, width, {}};
    if (inside.size() <= resample) {
        window.points = std::move(inside);
    } else {
        window.points.reserve(resample);
        const auto last = inside.size() - 1;
        for (std::size_t i = 0; i < resample; ++i) {
            const std::size_t idx =
                resample == 1
                    ? 0
                    : static_cast<std::size_t>(std::llround(
                          static_cast<double>(i) * static_cast<double>(last) /
                          static_cast<double>(resample - 1)));
            window.points.push_back(inside[idx]);
        }
    }
    return window;
}

ZoomWindow zoom_window(const Trajectory& traj, PlanarPoint center, double width,
                       std::size_t resample) {
    const std::vector<PlanarPoint> pts = positions(traj);
    return zoom_window(pts, center, width, resample);
}

double similarity_score(const ZoomWindow& a, const ZoomWindow& b) {
    if (a.points.empty() || b.points.empty()) {
        throw InvalidArgument("similarity requires non-empty windows");
    }
    auto directed = [](const std::vector<PlanarPoint>& from,
                       const std::vector<PlanarPoint>& to) {
        double worst = 0.0;
        for (const auto& p : from) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& q : to) {
                const double dx = p.x - q.x;
                const double dy = p.y - q.y;
                best = std::min(best, dx * dx + dy * dy);
                if (best == 0.0) break;
            }
            worst = std::max(worst, best);
        }
        return std::sqrt(worst);
    };
    const double d_h =
        std::max(directed(a.points, b.points), directed(b.points, a.points));
    return 1.0 - d_h / std::sqrt(2.0);
}

}  // namespace wheeltrace
