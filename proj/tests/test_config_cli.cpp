#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "mdphase/config.hpp"
#include "mdphase/driver.hpp"
#include "mdphase/errors.hpp"
#include "mdphase/report_io.hpp"

using namespace mdphase;

namespace {

const char* minimal_sg = R"({
  "scenario": "stern_gerlach",
  "grid": {"n_points": 1024, "q_min": -60.0, "q_max": 60.0},
  "branches": [
    {"c_re": 0.7071067811865476, "c_im": 0.0, "eigenvalue": 0.5},
    {"c_re": 0.7071067811865476, "c_im": 0.0, "eigenvalue": -0.5}
  ],
  "coupling_length": 20.0
})";

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "mdphase_test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = temp_dir() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

} // namespace

TEST_CASE("minimal config gets defaults") {
    const auto cfg = parse_config_text(minimal_sg);
    CHECK(cfg.scenario == ScenarioKind::stern_gerlach);
    CHECK(cfg.potential.kind == PotentialKind::none);
    CHECK(cfg.mass == 1.0);
    CHECK(cfg.packet.width == 1.0);
    CHECK(cfg.times == std::vector<double>{0.0});
    CHECK(cfg.resolved_pair() == std::pair<int, int>{2, 1});
    CHECK(cfg.seed == 0);
    CHECK_FALSE(cfg.falsifier_mode);

    // echo round-trips through the parser
    const auto echo = config_to_json(cfg);
    const auto again = parse_config_text(echo.dump());
    CHECK(config_to_json(again) == echo);
}

TEST_CASE("config rejections name the offending field") {
    SUBCASE("unnormalized without falsifier_mode") {
        std::string text = minimal_sg;
        text.replace(text.find("0.7071067811865476"), 18, "0.9000000000000000");
        try {
            parse_config_text(text);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("falsifier_mode") != std::string::npos);
        }
    }
    SUBCASE("unknown key is named") {
        std::string text = minimal_sg;
        text.insert(text.size() - 2, ",\n  \"foo\": 1");
        try {
            parse_config_text(text);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("foo") != std::string::npos);
        }
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(parse_config("/nonexistent/config.json"), ConfigError);
    }
    SUBCASE("margin violation carries the branch")
    {
        std::string text = minimal_sg;
        const auto pos = text.find("\"coupling_length\": 20.0");
        text.replace(pos, std::string("\"coupling_length\": 20.0").size(),
                     "\"coupling_length\": 58.0");
        CHECK_THROWS_AS(parse_config_text(text), ConfigError);
    }
    SUBCASE("bad grid") {
        std::string text = minimal_sg;
        const auto pos = text.find("1024");
        text.replace(pos, 4, "1000");
        CHECK_THROWS_AS(parse_config_text(text), ConfigError);
    }
}

TEST_CASE("cmd_run writes the documented artifacts") {
    const auto dir = temp_dir() / "run_out";
    std::filesystem::remove_all(dir);

    std::string text = minimal_sg;
    text.insert(text.size() - 2, ",\n  \"times\": [0.0, 0.5, 1.0]");
    const auto config_path = write_temp("run_cfg.json", text);

    const auto result = cmd_run(config_path, dir.string());
    CHECK(result.exit_code == exit_ok);
    for (const auto& output : result.manifest.outputs) {
        INFO(output);
        CHECK(std::filesystem::exists(output));
    }
    CHECK(std::filesystem::exists(dir / "timeseries.csv"));
    CHECK(std::filesystem::exists(dir / "bounds.json"));
    CHECK(std::filesystem::exists(dir / "manifest.json"));

    std::ifstream csv(dir / "timeseries.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header.rfind("t,re_z,im_z,abs_z,theta,phi_rel,a1,a2,var1,var2,comm,d12,d23,d13,sz",
                       0) == 0);
    int rows = 0;
    std::string line;
    while (std::getline(csv, line)) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == 3);
}

TEST_CASE("cmd_run exit code 2 for the definite-state regime") {
    std::string text = minimal_sg;
    const auto pos = text.find("0.7071067811865476");
    text.replace(pos, 18, "1.0000000000000000");
    const auto pos2 = text.find("0.7071067811865476");
    text.replace(pos2, 18, "0.0000000000000000");
    const auto config_path = write_temp("definite_cfg.json", text);

    const auto dir = temp_dir() / "definite_out";
    std::filesystem::remove_all(dir);
    const auto result = cmd_run(config_path, dir.string());
    CHECK(result.exit_code == exit_violated);
}

TEST_CASE("cmd_sweep aggregates rows keyed by the swept value") {
    std::string text = minimal_sg;
    text.insert(text.size() - 2, ",\n  \"times\": [0.0, 0.4]");
    const auto config_path = write_temp("sweep_cfg.json", text);

    const auto dir = temp_dir() / "sweep_out";
    std::filesystem::remove_all(dir);
    const auto result =
        cmd_sweep(config_path, "coupling_length:5:25:5", dir.string(), 2);
    CHECK(result.exit_code == exit_ok);

    std::ifstream csv(dir / "sweep.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header.rfind("coupling_length,t,", 0) == 0);
    int rows = 0;
    std::string line;
    while (std::getline(csv, line)) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == 5 * 2); // five sweep points, two time rows each
}

TEST_CASE("cmd_sweep validates the axis") {
    const auto config_path = write_temp("axis_cfg.json", minimal_sg);
    const auto out = (temp_dir() / "axis_out").string();
    CHECK_THROWS_AS(cmd_sweep(config_path, "scenario:0:1:4", out, 1), ConfigError);
    CHECK_THROWS_AS(cmd_sweep(config_path, "coupling_length:5:25:1", out, 1), ConfigError);
    CHECK_THROWS_AS(cmd_sweep(config_path, "coupling_length:5:25", out, 1), ConfigError);
    CHECK_THROWS_AS(cmd_sweep(config_path, "nope:0:1:3", out, 1), ConfigError);
}

TEST_CASE("alpha_sq sweep rescales the first branch") {
    std::string text = minimal_sg;
    const auto config_path = write_temp("alpha_cfg.json", text);
    const auto dir = temp_dir() / "alpha_out";
    std::filesystem::remove_all(dir);
    const auto result = cmd_sweep(config_path, "alpha_sq:0.1:0.9:5", dir.string(), 1);
    CHECK(result.exit_code == exit_ok);
    std::ifstream csv(dir / "sweep.csv");
    std::string header, first;
    std::getline(csv, header);
    std::getline(csv, first);
    CHECK(header.rfind("alpha_sq,", 0) == 0);
    CHECK(std::stod(first.substr(0, first.find(','))) == doctest::Approx(0.1));
}

TEST_CASE("cmd_falsify writes a deterministic report") {
    const auto dir1 = temp_dir() / "fals_a";
    const auto dir2 = temp_dir() / "fals_b";
    std::filesystem::remove_all(dir1);
    std::filesystem::remove_all(dir2);

    const auto r1 = cmd_falsify(200, 31, dir1.string());
    const auto r2 = cmd_falsify(200, 31, dir2.string());
    CHECK(r1.exit_code == exit_ok);
    CHECK(r2.exit_code == exit_ok);

    std::ifstream a(dir1 / "falsifier_report.json"), b(dir2 / "falsifier_report.json");
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK_THROWS_AS(cmd_falsify(0, 1, (temp_dir() / "fals_c").string()), ConfigError);
}
