#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "wheeltrace/wheel_model.hpp"

namespace wheeltrace {

/// Shortest decimal form that round-trips the exact double (std::to_chars).
std::string format_double(double value);

/// Header line followed by pre-formatted rows, LF endings, written atomically
/// (temp file + rename). Byte-identical across runs for identical input.
void export_csv(const std::filesystem::path& path,
                std::span<const std::string> header,
                const std::vector<std::vector<std::string>>& rows);

struct SvgStyle {
    std::string stroke = "black";
    /// Stroke width as a fraction of the larger viewBox dimension.
    double stroke_width_frac = 0.001;
};

/// Single-polyline SVG of the point sequence; the y axis is flipped so the
/// rendered figure keeps mathematical orientation. viewBox is the data
/// bounding box expanded by 5% per side. Requires >= 2 points.
void export_svg(const std::filesystem::path& path,
                std::span<const PlanarPoint> points, SvgStyle style = {});

}  // namespace wheeltrace
