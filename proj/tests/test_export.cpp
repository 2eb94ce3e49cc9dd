#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include <doctest.h>

#include "wheeltrace/export.hpp"
#include "wheeltrace/sampling.hpp"

using namespace wheeltrace;

namespace {

namespace fs = std::filesystem;

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("wheeltrace_test_" + name);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("export") {

TEST_CASE("doubles are printed in shortest round-trip form") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-2.5) == "-2.5");
    const double third = 1.0 / 3.0;
    CHECK(std::stod(format_double(third)) == third);
    const double pi = std::numbers::pi;
    CHECK(std::stod(format_double(pi)) == pi);
}

TEST_CASE("csv writer emits header then rows with LF endings") {
    const fs::path path = temp_file("rows.csv");
    const std::vector<std::string> header{"t", "x", "y", "vx", "vy"};
    export_csv(path, header,
               {{"0", "1.5", "0", "0", "2"}, {"1", "0.25", "-1", "0.5", "0"}});
    CHECK(slurp(path) == "t,x,y,vx,vy\n0,1.5,0,0,2\n1,0.25,-1,0.5,0\n");
    fs::remove(path);
}

TEST_CASE("csv writer with no rows leaves a header-only file") {
    const fs::path path = temp_file("empty.csv");
    const std::vector<std::string> header{"q", "n", "bins", "horizon",
                                          "entropy_bits"};
    export_csv(path, header, {});
    CHECK(slurp(path) == "q,n,bins,horizon,entropy_bits\n");
    fs::remove(path);
}

TEST_CASE("csv output is byte-identical across runs") {
    const fs::path a = temp_file("det_a.csv");
    const fs::path b = temp_file("det_b.csv");
    const std::vector<std::string> header{"t", "value"};
    std::vector<std::vector<std::string>> rows;
    const auto series =
        radius_series(SystemConfig::uniform(2.5, 8), 0.0, 10.0, 200);
    for (const auto& s : series) {
        rows.push_back({format_double(s.t), format_double(s.value)});
    }
    export_csv(a, header, rows);
    export_csv(b, header, rows);
    CHECK(slurp(a) == slurp(b));
    fs::remove(a);
    fs::remove(b);
}

TEST_CASE("svg viewBox expands the unit circle bounds by 5 percent") {
    const fs::path path = temp_file("circle.svg");
    const Trajectory traj =
        sample_trajectory(SystemConfig::uniform(2.0, 1), 0.0,
                          2 * std::numbers::pi, 256);
    export_svg(path, positions(traj));
    const std::string svg = slurp(path);
    const auto vb_pos = svg.find("viewBox=\"");
    REQUIRE(vb_pos != std::string::npos);
    const auto vb_end = svg.find('"', vb_pos + 9);
    std::istringstream vb(svg.substr(vb_pos + 9, vb_end - vb_pos - 9));
    double x = 0, y = 0, w = 0, h = 0;
    vb >> x >> y >> w >> h;
    CHECK(x == doctest::Approx(-1.1).epsilon(1e-3));
    CHECK(y == doctest::Approx(-1.1).epsilon(1e-3));
    CHECK(w == doctest::Approx(2.2).epsilon(1e-3));
    CHECK(h == doctest::Approx(2.2).epsilon(1e-3));

    // Exactly one polyline, no external references.
    CHECK(svg.find("<polyline") == svg.rfind("<polyline"));
    CHECK(svg.find("href") == std::string::npos);

    // Stroke width is 0.1% of the larger viewBox side.
    const auto sw_pos = svg.find("stroke-width=\"");
    REQUIRE(sw_pos != std::string::npos);
    const double sw = std::stod(svg.substr(sw_pos + 14));
    CHECK(sw == doctest::Approx(0.001 * std::max(w, h)).epsilon(1e-6));
    fs::remove(path);
}

TEST_CASE("svg export needs at least two points") {
    const fs::path path = temp_file("tiny.svg");
    const std::vector<PlanarPoint> one{{0.0, 0.0}};
    CHECK_THROWS_AS(export_svg(path, one), InvalidArgument);

    const std::vector<PlanarPoint> two{{0.0, 0.0}, {1.0, 1.0}};
    export_svg(path, two);
    const std::string svg = slurp(path);
    CHECK(svg.find("points=\"0,0 1,-1\"") != std::string::npos);
    fs::remove(path);
}

}  // TEST_SUITE
