// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The nocplan authors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace nocplan;
using testing::fixture_path;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "nocplan");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "nocplan_test_cli";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("validate") {
    const auto ok = run({"validate", fixture_path("d695_leon_analog.json")});
    CHECK(ok.code == 0);
    CHECK(ok.out == "valid: 16 modules (10 cores, 6 processors), 2 io ports, grid 4x4\n");

    const auto missing = run({"validate", fixture_path("no_such_file.json")});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("cannot open") != std::string::npos);

    auto text = testing::read_text(fixture_path("single_core.json"));
    const auto at = text.find("\"position\": [\n        1,");
    REQUIRE(at != std::string::npos);
    text.replace(at, 24, "\"position\": [\n        7,");
    const auto bad = scratch("off_grid.json");
    std::ofstream(bad) << text;
    const auto r = run({"validate", bad.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("cores[0].position") != std::string::npos);
    CHECK(r.err.find("line") != std::string::npos);
}

TEST_CASE("plan") {
    CHECK(run({"plan", fixture_path("single_core.json")}).out == "makespan=52 peak_power=30\n");
    CHECK(run({"plan", fixture_path("two_core.json")}).out == "makespan=58 peak_power=30\n");

    const auto zero = run({"plan", fixture_path("single_core.json"), "--power-fraction", "0"});
    CHECK(zero.code == 3);
    CHECK(zero.err.find("module 1") != std::string::npos);

    CHECK(run({"plan", fixture_path("single_core.json"), "--power-fraction", "abc"}).code == 2);
    CHECK(run({"plan", fixture_path("single_core.json"), "--processors", "3"}).code == 2);
    CHECK(run({"plan", fixture_path("single_core.json"), "--dynamic-priority"}).code == 2);
    CHECK(run({"plan"}).code == 2);
    CHECK(run({}).code == 2);

    const auto csv = run({"plan", fixture_path("two_core.json"), "--out", "-"});
    CHECK(csv.code == 0);
    CHECK(csv.out.find("# makespan=58 peak_power=30\nmakespan=58 peak_power=30\n") != std::string::npos);
}

TEST_CASE("plan --processors 0 equals stripping the processors") {
    const auto path = fixture_path("d695_leon_analog.json");
    auto sys = testing::load_fixture("d695_leon_analog.json");
    PlanOptions opts;
    opts.processors_reused = 0;
    const auto expected = plan(sys, opts);
    const auto r = run({"plan", path, "--processors", "0", "--out", "-"});
    CHECK(r.code == 0);
    CHECK(r.out.starts_with(to_csv(expected)));
}

TEST_CASE("sweep") {
    const auto r = run({"sweep", fixture_path("single_core_processor.json"), "--processors", "0..1"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "processors,power_fraction,makespan,peak_power,feasible\n"
          "0,none,52,30,true\n"
          "1,none,52,30,true\n");
    CHECK(run({"sweep", fixture_path("single_core.json"), "--processors", ""}).code == 2);
    CHECK(run({"sweep", fixture_path("single_core.json"), "--processors", ","}).code == 2);
    CHECK(run({"sweep", fixture_path("single_core.json"), "--processors", "0", "--power-fractions", ""}).code == 2);

    const auto d = run({"sweep", fixture_path("d695_leon_analog.json"), "--processors", "0,2,4,6", "--power-fractions",
                        "none,0.5"});
    CHECK(d.code == 0);
    CHECK(std::count(d.out.begin(), d.out.end(), '\n') == 9);
}

TEST_CASE("gen") {
    const std::vector<std::string> args{"gen", "--seed", "1", "--grid", "4x4", "--cores", "10", "--processors", "6"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    const auto file = scratch("gen.json");
    auto with_out = args;
    with_out.insert(with_out.end(), {"--out", file.string()});
    CHECK(run(with_out).code == 0);
    CHECK(testing::read_text(file.string()) == a.out);
    CHECK(run({"validate", file.string()}).code == 0);

    const auto full = run({"gen", "--grid", "2x2", "--cores", "3", "--processors", "2"});
    CHECK(full.code == 1);
    CHECK(run({"gen", "--grid", "4by4"}).code == 2);
}

TEST_CASE("compare") {
    const auto r = run({"compare", fixture_path("anomaly.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "greedy=720 optimal=540 gap=1.333333 exact=true\n");
    CHECK(run({"compare", fixture_path("d695_leon_analog.json")}).code == 1);
}

TEST_CASE("the 4x4 fixture is reproducible from gen") {
    const auto r = run({"gen", "--seed", "3", "--grid", "4x4", "--cores", "10", "--processors", "6", "--self-test-max", "40"});
    CHECK(r.code == 0);
    CHECK(r.out == testing::read_text(fixture_path("d695_leon_analog.json")));
}
