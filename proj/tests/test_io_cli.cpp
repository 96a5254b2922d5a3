#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "holdercover/app.hpp"
#include "holdercover/errors.hpp"
#include "holdercover/io.hpp"
#include "helpers.hpp"

using namespace holdercover;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("holdercover-test-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_config(const RunConfig& cfg) {
    std::ostringstream out, err;
    const int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

int shell(const std::string& command) {
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("reals survive a text round trip") {
    for (const auto& p : testing_helpers::random_points(300, 12, -1e6L, 1e6L)) {
        CHECK(io::parse_real(io::format_real(p.x)) == p.x);
        CHECK(io::parse_real(io::format_real(p.y * 1e-30L)) == p.y * 1e-30L);
    }
    CHECK_THROWS_AS(io::parse_real("nope"), ValidationError);
}

TEST_CASE("point clouds round trip") {
    const auto pts = testing_helpers::random_points(50, 4);
    CHECK(io::points_from_json(io::Json::parse(io::dump(io::points_to_json(pts)))) == pts);
    CHECK_THROWS_AS(io::points_from_json(io::Json::parse("{\"x\": 1}")), ValidationError);
    const DyadicSquare q{3, -2, 5};
    CHECK(io::square_from_json(io::square_to_json(q)) == q);
}

TEST_CASE("schedule JSON round trips without loss") {
    for (auto variant : {ScheduleVariant::corrected, ScheduleVariant::printed}) {
        const auto s = schedule(Rational(3, 4), 3, variant);
        const auto e = side_exponents(s, Rational(5, 8));
        const auto text = io::dump(io::schedule_to_json(s, e));
        CHECK(io::schedule_from_json(io::Json::parse(text)) == s);
        CHECK(text.find(std::to_string(s.ks.back())) != std::string::npos);
    }
}

TEST_CASE("empty curves give a valid SVG") {
    const auto svg = io::curve_svg(HolderCurve{}, 0.002L);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("points=\"\"") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("check tables") {
    RunConfig cfg;
    cfg.command = Command::check;
    cfg.check = "eq5";
    cfg.stages = 3;
    const auto r = run_config(cfg);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("n,k,x,value,window") != std::string::npos);
    cfg.check = "all";
    CHECK(run_config(cfg).code == kExitOk);
    cfg.check = "nonsense";
    CHECK(run_config(cfg).code == kExitValidation);
}

TEST_CASE("curve pipeline artifacts are deterministic") {
    TempDir tmp;
    const auto pts = testing_helpers::standard_cantor_corners(2);
    io::write_atomic(tmp.file("pts.json"), io::dump(io::points_to_json(pts)));

    RunConfig cfg;
    cfg.command = Command::curve;
    cfg.input = tmp.file("pts.json");
    cfg.eps0 = "2";
    cfg.chain_levels = 6;
    cfg.d = "1.5";
    std::string first_svg, first_json;
    for (int rep = 0; rep < 2; ++rep) {
        cfg.svg = tmp.file("out" + std::to_string(rep) + ".svg");
        cfg.output = tmp.file("curve" + std::to_string(rep) + ".json");
        const auto r = run_config(cfg);
        REQUIRE(r.code == kExitOk);
        const auto svg = io::read_file(cfg.svg);
        const auto json = io::read_file(cfg.output);
        CHECK(json.find("constant_bound") != std::string::npos);
        CHECK(svg.find("<polyline") != std::string::npos);
        if (rep == 0) {
            first_svg = svg;
            first_json = json;
        } else {
            CHECK(svg == first_svg);
            CHECK(json == first_json);
        }
    }
}

TEST_CASE("error paths map to exit codes") {
    RunConfig cfg;
    cfg.command = Command::curve;
    cfg.input = "/nonexistent/definitely/missing.json";
    auto r = run_config(cfg);
    CHECK(r.code == kExitValidation);
    CHECK(!r.err.empty());
    CHECK(r.err.find('\n') == r.err.size() - 1);

    RunConfig out;
    out.command = Command::schedule;
    out.output = "/nonexistent/definitely/out.json";
    CHECK(run_config(out).code == kExitBudget);

    RunConfig budget;
    budget.command = Command::corners;
    budget.depth = 8;
    budget.budget = 1000;
    CHECK(run_config(budget).code == kExitBudget);

    RunConfig bad;
    bad.command = Command::schedule;
    bad.gamma = "2/1";
    CHECK(run_config(bad).code == kExitValidation);
}

TEST_CASE("command-line tool") {
    const std::string cli = HOLDERCOVER_CLI;
    CHECK(shell(cli + " check eq5 --stages 3 > /dev/null") == 0);
    CHECK(shell(cli + " cantor schedule --gamma 3/4 --stages 3 > /dev/null") == 0);
    CHECK(shell(cli + " frobnicate > /dev/null 2>&1") == 2);
    CHECK(shell(cli + " schedule --gamma banana > /dev/null 2>&1") == 2);
    CHECK(shell("HOLDERCOVER_BUDGET=10 " + cli + " corners --depth 3 > /dev/null 2>&1") == 3);
    CHECK(shell(cli + " dini --counts 1,1,1,1 --d 1 > /dev/null") == 0);
}
