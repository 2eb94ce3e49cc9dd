#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "wheeltrace/cli.hpp"

using namespace wheeltrace;

namespace {

namespace fs = std::filesystem;

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("wheeltrace_cli_" + name);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("trace flags map onto the run configuration") {
    const RunConfig rc = parse_args({"trace", "--q", "2.5", "--n", "20",
                                     "--t1", "62.8", "--steps", "100000",
                                     "--out", "fig2.csv"});
    CHECK(rc.sub == Subcommand::trace);
    CHECK(rc.system.q_r == 2.5);
    CHECK(rc.system.q_phi == 2.5);
    CHECK(rc.system.n == 20);
    CHECK(rc.t0 == 0.0);
    CHECK(rc.t1 == 62.8);
    CHECK(rc.steps == 100000);
    CHECK(rc.out == fs::path("fig2.csv"));
    CHECK(rc.format == OutputFormat::csv);
}

TEST_CASE("constraint violations name the offending flag") {
    CHECK_THROWS_WITH_AS(
        parse_args({"trace", "--q", "0.5", "--n", "2", "--out", "x.csv"}),
        "q must exceed 1", InvalidArgument);
    CHECK_THROWS_AS(parse_args({"trace", "--n", "2", "--out", "x.csv"}),
                    InvalidArgument);  // no ratio given
    CHECK_THROWS_AS(parse_args({"trace", "--q", "2", "--out", "x.csv"}),
                    InvalidArgument);  // missing --n
    CHECK_THROWS_AS(parse_args({"trace", "--q", "2", "--n", "2"}),
                    InvalidArgument);  // missing --out
    CHECK_THROWS_AS(
        parse_args({"trace", "--q", "2", "--n", "2", "--out", "x.csv",
                    "--bogus", "1"}),
        InvalidArgument);  // unknown flag
    CHECK_THROWS_AS(
        parse_args({"surface", "--q", "2", "--n", "3", "--out", "x.csv",
                    "--format", "svg"}),
        InvalidArgument);  // svg only for line plots
}

TEST_CASE("divergence accepts per-side angle ratios") {
    const RunConfig rc = parse_args({"divergence", "--q-phi-a", "2.5",
                                     "--q-phi-b", "2.499", "--n", "2", "--out",
                                     "fig8.csv"});
    CHECK(rc.sub == Subcommand::divergence);
    CHECK(rc.system.q_phi == 2.5);
    CHECK(rc.system_b.q_phi == 2.499);
    CHECK(rc.system.n == 2);
    CHECK(rc.system_b.n == 2);
}

TEST_CASE("base q with a side override keeps the radius ratio fixed") {
    const RunConfig rc = parse_args({"divergence", "--q", "2.5", "--q-phi-b",
                                     "2.499", "--n", "2", "--out", "d.csv"});
    CHECK(rc.system.q_r == 2.5);
    CHECK(rc.system.q_phi == 2.5);
    CHECK(rc.system_b.q_r == 2.5);
    CHECK(rc.system_b.q_phi == 2.499);
}

TEST_CASE("rational ratios parse and enable exact periods") {
    const RunConfig rc = parse_args({"trace", "--q-rational", "5/2", "--n",
                                     "3", "--out", "t.csv"});
    REQUIRE(rc.system.q_phi_rational.has_value());
    CHECK(rc.system.q_phi_rational->num == 5);
    CHECK(rc.system.q_phi_rational->den == 2);
    CHECK(rc.system.q_phi == 2.5);
    // Default window is one fundamental period: 2 pi b^(n-1) = 8 pi.
    CHECK(rc.t1 == doctest::Approx(8.0 * 3.14159265358979323846));

    CHECK_THROWS_AS(parse_args({"trace", "--q-rational", "2/4", "--n", "2",
                                "--out", "t.csv"}),
                    InvalidArgument);
    CHECK_THROWS_AS(parse_args({"trace", "--q-rational", "nonsense", "--n",
                                "2", "--out", "t.csv"}),
                    InvalidArgument);
}

TEST_CASE("parse round-trips through render_args") {
    const std::vector<std::vector<std::string>> cases = {
        {"trace", "--q", "2.5", "--n", "20", "--t1", "62.8", "--steps",
         "100000", "--out", "fig2.csv"},
        {"series", "--kind", "speed", "--q", "2.5", "--n", "20", "--out",
         "fig6.csv"},
        {"phase", "--q", "2.5", "--n", "20", "--out", "fig7.csv"},
        {"roughness", "--q", "2.5", "--n", "12", "--out", "rough.csv"},
        {"divergence", "--q", "2.5", "--q-phi-b", "2.499", "--n", "2", "--out",
         "fig8.csv"},
        {"entropy", "--q", "1.8", "--n", "20", "--out", "e.csv"},
        {"sweep", "--q-min", "1.1", "--q-max", "5", "--q-step", "0.05", "--n",
         "20", "--out", "fig12.csv"},
        {"dimension", "--q", "2.5", "--n", "20", "--out", "dim.csv"},
        {"surface", "--q", "2.5", "--n", "20", "--out", "fig13.csv"},
        {"trace", "--q-rational", "3/2", "--n", "4", "--out", "p.csv"},
    };
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& args = cases[i];
        CAPTURE(i);
        const RunConfig once = parse_args(args);
        const RunConfig twice = parse_args(render_args(once));
        CHECK(once == twice);
    }
}

TEST_CASE("exit codes distinguish usage from numerical failures") {
    CHECK(run_cli({"trace", "--q", "0.5", "--n", "2", "--out",
                   temp_file("never.csv").string()}) == 1);
    CHECK(run_cli({"nonsense"}) == 1);
    CHECK(run_cli({}) == 1);
    // q = 6, n = 20 at t1 = 2 pi blows the phase budget: numerical failure.
    CHECK(run_cli({"trace", "--q", "6", "--n", "20", "--t1", "6.28", "--out",
                   temp_file("never.csv").string()}) == 2);
    CHECK(run_cli({"--help"}) == 0);
}

TEST_CASE("trace command writes the documented schema deterministically") {
    const fs::path out_a = temp_file("trace_a.csv");
    const fs::path out_b = temp_file("trace_b.csv");
    const std::vector<std::string> base{"trace", "--q",    "2.5", "--n",
                                        "6",     "--t1",   "6.28", "--steps",
                                        "50"};
    auto with_out = [&base](const fs::path& p) {
        auto args = base;
        args.push_back("--out");
        args.push_back(p.string());
        return args;
    };
    REQUIRE(run_cli(with_out(out_a)) == 0);
    REQUIRE(run_cli(with_out(out_b)) == 0);
    const std::string text_a = slurp(out_a);
    CHECK(text_a == slurp(out_b));
    CHECK(text_a.substr(0, text_a.find('\n')) == "t,x,y,vx,vy");
    fs::remove(out_a);
    fs::remove(out_b);
}

TEST_CASE("dimension command writes scale counts plus a summary file") {
    const fs::path out = temp_file("dim.csv");
    REQUIRE(run_cli({"dimension", "--q", "2.5", "--n", "4", "--t1", "6.28",
                     "--steps", "20000", "--out", out.string()}) == 0);
    const std::string text = slurp(out);
    CHECK(text.substr(0, text.find('\n')) == "scale,count");
    const fs::path summary = out.parent_path() / "dimension_summary.csv";
    const std::string summary_text = slurp(summary);
    CHECK(summary_text.substr(0, summary_text.find('\n')) == "dimension,fit_r2");
    fs::remove(out);
    fs::remove(summary);
}

TEST_CASE("sweep command reports gaps as nan rows") {
    const fs::path out = temp_file("sweep.csv");
    REQUIRE(run_cli({"sweep", "--q-min", "1.5", "--q-max", "5", "--q-step",
                     "3.5", "--n", "20", "--horizon", "2048", "--bins", "16",
                     "--out", out.string()}) == 0);
    const std::string text = slurp(out);
    CHECK(text.find("q,n,bins,horizon,entropy_bits") == 0);
    CHECK(text.find(",nan") != std::string::npos);
    fs::remove(out);
}

TEST_CASE("series and surface schemas") {
    const fs::path series_out = temp_file("series.csv");
    REQUIRE(run_cli({"series", "--kind", "radius", "--q", "2", "--n", "2",
                     "--steps", "16", "--out", series_out.string()}) == 0);
    const std::string series_text = slurp(series_out);
    CHECK(series_text.substr(0, series_text.find('\n')) == "t,value");
    fs::remove(series_out);

    const fs::path surf_out = temp_file("surface.csv");
    REQUIRE(run_cli({"surface", "--q", "2", "--n", "3", "--steps", "4",
                     "--out", surf_out.string()}) == 0);
    const std::string surf_text = slurp(surf_out);
    // Corner cell empty, then the t grid; rows start with the wheel count.
    CHECK(surf_text.substr(0, 3) == ",0,");
    CHECK(surf_text.find("\n1,") != std::string::npos);
    CHECK(surf_text.find("\n3,") != std::string::npos);
    fs::remove(surf_out);
}

}  // TEST_SUITE
