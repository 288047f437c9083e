#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fractoda/integrator.hpp"
#include "fractoda/output.hpp"
#include "fractoda/run_config.hpp"
#include "helpers.hpp"

using namespace fractoda;
namespace fs = std::filesystem;

namespace {

RunConfig sample_config() {
    RunConfig cfg;
    cfg.params = {-0.45, 1.0, -0.2, -0.15, 1.01, 0.8};
    cfg.target = {1.0, 0.6};
    cfg.integ = {0.01, 100, 0.01};
    cfg.controlled = true;
    cfg.out = "ex41.csv";
    return cfg;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("fractoda_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

}  // namespace

TEST_CASE("config round-trips losslessly") {
    const RunConfig cfg = sample_config();
    const std::string text = serialize_run_config(cfg);
    const ParsedConfig parsed = parse_run_config_text(text);
    CHECK(parsed.config == cfg);
    CHECK(serialize_run_config(parsed.config) == text);
    CHECK(parsed.has("a"));
    CHECK(parsed.has("out"));
}

TEST_CASE("serialization is idempotent on random values") {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 300; ++i) {
        const double v = testutil::draw_uniform(rng, -1e6, 1e6) *
                         std::pow(10.0, int(rng() % 13) - 6);
        const std::string s = format_g12(v);
        const double reparsed = std::stod(s);
        CHECK(format_g12(reparsed) == s);
    }
    // canonical short decimals survive untouched
    for (const char* text : {"0.8", "-0.03", "1.05", "0.01", "-1", "2", "1e-06"}) {
        CHECK(format_g12(std::stod(text)) == text);
    }
}

TEST_CASE("config parser diagnostics") {
    CHECK_THROWS_AS(parse_run_config_text("bogus=1\n"), ConfigError);
    CHECK_THROWS_AS(parse_run_config_text("a=0.1\na=0.2\n"), ConfigError);
    CHECK_THROWS_AS(parse_run_config_text("a\n"), ConfigError);
    CHECK_THROWS_AS(parse_run_config_text("a=notanumber\n"), ConfigError);
    CHECK_THROWS_AS(parse_run_config_text("N=ten\n"), ConfigError);
    CHECK_THROWS_AS(parse_run_config_text("controlled=maybe\n"), ConfigError);
    CHECK_THROWS_AS(load_run_config("/nonexistent/path.conf"), ConfigError);

    const ParsedConfig parsed = parse_run_config_text(
        "# comment line\n"
        "\n"
        "  a = -0.8  \n"
        "controlled=false\n");
    CHECK(parsed.config.params.a == -0.8);
    CHECK_FALSE(parsed.config.controlled);
    CHECK(parsed.keys.size() == 2);
}

TEST_CASE("17-digit formatting") {
    CHECK(format_g17(0.0) == "0");
    CHECK(format_g17(0.01) == "0.01");
    CHECK(format_g17(0.1) == "0.10000000000000001");
    CHECK(format_g17(0.61) == "0.60999999999999999");
    CHECK(format_g17(1.01) == "1.01");
    // a value needing all 17 digits survives a text round-trip
    const double v = 0.1 + 0.2;
    CHECK(std::stod(format_g17(v)) == v);
}

TEST_CASE("trajectory CSV layout and byte stability") {
    Trajectory tr;
    tr.target = {1.0, 0.6};
    tr.times = {0.0, 0.01};
    tr.states = {State5{0.01, 1.01, 0.61, 0.01, 0.01}, State5{0.5, 1.0, 0.5, 0.25, 0.125}};

    std::ostringstream first;
    write_trajectory_csv(first, tr);
    std::ostringstream second;
    write_trajectory_csv(second, tr);
    CHECK(first.str() == second.str());

    std::istringstream lines(first.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header == "j,t,x1,x2,x3,x4,x5,dist");
    std::string row0;
    std::getline(lines, row0);
    CHECK(row0.substr(0, 4) == "0,0,");
    CHECK(row0.find("0.01,1.01,0.60999999999999999,0.01,0.01,") != std::string::npos);
    std::string row1;
    std::getline(lines, row1);
    CHECK(row1.substr(0, 7) == "1,0.01,");
    CHECK(first.str().back() == '\n');
    CHECK(first.str().find("\r") == std::string::npos);
}

TEST_CASE("series SVG structure") {
    std::ostringstream out;
    write_series_svg(out, "x1", {0.0, 0.5, 1.0, 0.5, 0.0});
    const std::string svg = out.str();
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") !=
          std::string::npos);
    CHECK(svg.find("width=\"800\"") != std::string::npos);
    CHECK(svg.find("height=\"500\"") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find(">x1</text>") != std::string::npos);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);

    // constant series must not divide by a zero range
    std::ostringstream flat;
    write_series_svg(flat, "flat", {2.0, 2.0, 2.0});
    CHECK(flat.str().find("<polyline") != std::string::npos);

    std::ostringstream empty;
    CHECK_THROWS_AS(write_series_svg(empty, "none", {}), std::invalid_argument);
}

TEST_CASE("orbit SVG files") {
    TempDir dir;
    Trajectory tr;
    tr.target = {0.0, 0.0};
    tr.times = {0.0, 0.01, 0.02};
    tr.states = {State5{0, 0, 0, 0, 0}, State5{1, 2, 3, 4, 5}, State5{2, 1, 0, -1, -2}};

    const auto paths = write_orbit_svgs(tr, (dir.path / "orbit").string());
    REQUIRE(paths.size() == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(paths[i] ==
              (dir.path / ("orbit_x" + std::to_string(i + 1) + ".svg")).string());
        CHECK(fs::file_size(paths[i]) > 100);
    }
}

TEST_CASE("sweep CSV layout") {
    std::ostringstream out;
    std::vector<SweepRow> rows;
    rows.push_back({-1.0, 0.5, 0, 2.0});
    rows.push_back({0.0, 0.5, kSkippedCellCode, std::nullopt});
    write_sweep_csv(out, "k", "m", rows);
    CHECK(out.str() ==
          "k,m,verdict,q_tilde\n"
          "-1,0.5,0,2\n"
          "0,0.5,5,\n");
}
