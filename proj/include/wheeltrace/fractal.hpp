#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wheeltrace/sampling.hpp"
#include "wheeltrace/wheel_model.hpp"

namespace wheeltrace {

/// Box-counting result: occupied-cell counts per scale (scales decreasing)
/// and the fitted log-log slope.
struct BoxCountEstimate {
    std::vector<double> scales;
    std::vector<std::size_t> counts;
    double dimension = 0.0;
    double fit_r2 = 0.0;
};

/// A square window of a trajectory with its points mapped to [0, 1]^2.
struct ZoomWindow {
    PlanarPoint center;
    double width = 0.0;
    std::vector<PlanarPoint> points;
};

/// Number of distinct grid cells of side `scale` containing at least one
/// point; the grid is anchored at the bounding-box min corner.
std::size_t box_count(std::span<const PlanarPoint> points, double scale);

/// Default scale ladder: 12 geometric steps from extent/4 down to
/// extent/4096, where extent is the larger bounding-box side.
std::vector<double> default_box_scales(std::span<const PlanarPoint> points);

/// Least-squares fit of log(count) against log(1/scale). Requires >= 4
/// scales spanning at least two decades.
BoxCountEstimate box_dimension(std::span<const PlanarPoint> points,
                               std::span<const double> scales);

/// Points inside the square window (center, width), normalized per axis so
/// their bounding box maps onto [0, 1]^2, then uniformly decimated to at most
/// `resample` points. Rejects windows that miss the point set entirely.
ZoomWindow zoom_window(std::span<const PlanarPoint> points, PlanarPoint center,
                       double width, std::size_t resample);

ZoomWindow zoom_window(const Trajectory& traj, PlanarPoint center, double width,
                       std::size_t resample);

/// 1 - d_H/sqrt(2) with d_H the symmetric discrete Hausdorff distance between
/// the normalized point sets; 1 means the sets coincide.
double similarity_score(const ZoomWindow& a, const ZoomWindow& b);

}  // namespace wheeltrace
