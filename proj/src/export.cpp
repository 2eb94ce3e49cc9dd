#include "wheeltrace/export.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <system_error>

#include "wheeltrace/errors.hpp"

namespace wheeltrace {

namespace {

void write_atomically(const std::filesystem::path& path,
                      const std::string& contents) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open " + tmp.string() + " for writing");
        }
        out.write(contents.data(),
                  static_cast<std::streamsize>(contents.size()));
        if (!out) throw IoError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        throw IoError("cannot rename " + tmp.string() + " to " + path.string() +
                      ": " + ec.message());
    }
}

}  // namespace

std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

void export_csv(const std::filesystem::path& path,
                std::span<const std::string> header,
                const std::vector<std::vector<std::string>>& rows) {
    if (header.empty()) throw InvalidArgument("CSV header must be non-empty");
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i > 0) out += ',';
        out += header[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += ',';
            out += row[i];
        }
        out += '\n';
    }
    write_atomically(path, out);
}

void export_svg(const std::filesystem::path& path,
                std::span<const PlanarPoint> points, SvgStyle style) {
    if (points.size() < 2) {
        throw InvalidArgument("SVG export requires at least 2 points");
    }
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_x = -min_x;
    double max_y = -min_y;
    for (const auto& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw InvalidArgument("SVG export requires finite points");
        }
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, -p.y);  // y flipped for screen orientation
        max_y = std::max(max_y, -p.y);
    }
    const double ex = max_x - min_x;
    const double ey = max_y - min_y;
    const double fallback = std::max({ex, ey, 1e-9});
    const double pad_x = 0.05 * (ex > 0.0 ? ex : fallback);
    const double pad_y = 0.05 * (ey > 0.0 ? ey : fallback);
    const double vb_x = min_x - pad_x;
    const double vb_y = min_y - pad_y;
    const double vb_w = ex + 2.0 * pad_x;
    const double vb_h = ey + 2.0 * pad_y;
    const double stroke = style.stroke_width_frac * std::max(vb_w, vb_h);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    out += format_double(vb_x) + " " + format_double(vb_y) + " " +
           format_double(vb_w) + " " + format_double(vb_h) + "\">\n";
    out += "<polyline fill=\"none\" stroke=\"" + style.stroke +
           "\" stroke-width=\"" + format_double(stroke) + "\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i > 0) out += ' ';
        out += format_double(points[i].x) + "," + format_double(-points[i].y);
    }
    out += "\"/>\n</svg>\n";
    write_atomically(path, out);
}

}  // namespace wheeltrace
