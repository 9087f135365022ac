#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bautin/blowup.hpp"
#include "bautin/kapteyn.hpp"

#include "json.hpp"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using nlohmann::ordered_json;

namespace {

std::string binary_path() {
    const char* env = std::getenv("BAUTIN_ARCS_BIN");
    return env ? env : "./bautin_arcs";
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = binary_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_file(const std::string& tag, const std::string& content) {
    std::string path = std::string("cli_input_") + tag + ".json";
    std::ofstream os(path);
    REQUIRE(os.good());
    os << content;
    return path;
}

std::string temp_json(const std::string& tag, const ordered_json& j) {
    return temp_file(tag, j.dump(2));
}

}  // namespace

TEST_CASE("order subcommand reports order, leading vector, and point") {
    using namespace bautin;
    std::string ideal_path = temp_json(
        "ideal_xy2",
        ideal_to_json(Ideal::make({"x", "y"}, {Poly::parse("x"), Poly::parse("y^2")})));
    Arc arc(8);
    arc.set("x", Jet::monomial(Rat(1), 3, 8));
    arc.set("y", Jet::monomial(Rat(2), 1, 8));
    std::string arc_path = temp_json("arc_xy", arc_to_json(arc));

    RunResult r = run_cli("order --ideal " + ideal_path + " --arc " + arc_path);
    REQUIRE(r.exit_code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["command"] == "order");
    CHECK(j["outputs"]["order"] == 2);
    CHECK(j["outputs"]["leading"] == ordered_json::array({"0", "4"}));
    CHECK(j["outputs"]["point"] == ordered_json::array({"0", "1"}));
    CHECK(j["outputs"]["truncation"] == 8);
    CHECK(j["tool_version"] == "0.1.0");
    CHECK_FALSE(j.contains("elapsed_ms"));
}

TEST_CASE("order subcommand accepts family-spec arc files") {
    using namespace bautin;
    std::string ideal_path = temp_json("ideal_center", ideal_to_json(bautin_ideal()));
    ordered_json spec = {
        {"family", "I13_A"},
        {"symbols",
         {{"l1_3", "1"}, {"l5_2", "1"}, {"l4_1", "1"}, {"l3_1", "1"}, {"l6_1", "0"}}},
    };
    std::string arc_path = temp_json("fam_i13a", spec);
    RunResult r = run_cli("order --ideal " + ideal_path + " --arc " + arc_path);
    REQUIRE(r.exit_code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["outputs"]["order"] == 3);
    CHECK(j["outputs"]["point"] == ordered_json::array({"1", "1", "6", "-2"}));
}

TEST_CASE("arcs inside the zero set exit with the undetermined code") {
    using namespace bautin;
    std::string ideal_path = temp_json(
        "ideal_und",
        ideal_to_json(Ideal::make({"x", "y"}, {Poly::parse("x"), Poly::parse("y^2")})));
    std::string arc_path = temp_file(
        "arc_und", R"({"truncation": 8, "vars": {"x": ["0"], "y": ["0"]}})");
    RunResult r = run_cli("order --ideal " + ideal_path + " --arc " + arc_path);
    CHECK(r.exit_code == 2);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["outputs"]["order"].is_null());
    CHECK(j["outputs"]["truncation"] == 8);
}

TEST_CASE("input errors exit 1 with a machine-readable error object") {
    std::string good_ideal = temp_file(
        "ideal_ok", R"({"vars": ["x"], "generators": ["x"]})");

    SUBCASE("malformed rational coefficient") {
        std::string bad_arc = temp_file(
            "arc_badrat", R"({"truncation": 4, "vars": {"x": ["1/z"]}})");
        RunResult r = run_cli("order --ideal " + good_ideal + " --arc " + bad_arc);
        CHECK(r.exit_code == 1);
        ordered_json j = ordered_json::parse(r.out);
        REQUIRE(j.contains("error"));
        CHECK(j["error"].get<std::string>().find("parse error at position") !=
              std::string::npos);
    }

    SUBCASE("empty generator list") {
        std::string bad_ideal = temp_file(
            "ideal_empty", R"({"vars": ["x"], "generators": []})");
        std::string arc = temp_file(
            "arc_x", R"({"truncation": 4, "vars": {"x": ["0", "1"]}})");
        RunResult r = run_cli("order --ideal " + bad_ideal + " --arc " + arc);
        CHECK(r.exit_code == 1);
        CHECK(ordered_json::parse(r.out).contains("error"));
    }

    SUBCASE("missing file") {
        RunResult r = run_cli("order --ideal no_such_file.json --arc no_such_file.json");
        CHECK(r.exit_code == 1);
        CHECK(ordered_json::parse(r.out).contains("error"));
    }

    SUBCASE("invalid JSON") {
        std::string bad = temp_file("ideal_broken", "{not json");
        std::string arc = temp_file(
            "arc_x2", R"({"truncation": 4, "vars": {"x": ["0", "1"]}})");
        RunResult r = run_cli("order --ideal " + bad + " --arc " + arc);
        CHECK(r.exit_code == 1);
        CHECK(ordered_json::parse(r.out).contains("error"));
    }

    SUBCASE("missing required seed option") {
        RunResult r = run_cli("tables --trials 4");
        CHECK(r.exit_code == 1);
        ordered_json j = ordered_json::parse(r.out);
        REQUIRE(j.contains("error"));
        CHECK(j["error"].get<std::string>().find("--seed") != std::string::npos);
    }

    SUBCASE("unknown subcommand") {
        RunResult r = run_cli("frobnicate");
        CHECK(r.exit_code == 1);
        CHECK(ordered_json::parse(r.out).contains("error"));
    }
}

TEST_CASE("repeated runs with the same seed are byte-identical") {
    RunResult a = run_cli("tables --seed 11 --trials 6");
    RunResult b = run_cli("tables --seed 11 --trials 6");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.out == b.out);
    ordered_json j = ordered_json::parse(a.out);
    CHECK(j["seed"] == 11);
    REQUIRE(j["outputs"]["table"].is_array());
    CHECK(j["outputs"]["table"].size() == 10);
    RunResult c = run_cli("tables --seed 12 --trials 6");
    REQUIRE(c.exit_code == 0);
    CHECK(a.out != c.out);
}

TEST_CASE("ak subcommand classifies a frozen sample") {
    std::string arc_path = temp_file(
        "arc_ak", R"({"truncation": 12, "vars": {"x": ["0", "0", "0", "1", "-2"], "y": ["0", "1"]}})");
    RunResult r = run_cli("ak --k 1 --arc " + arc_path);
    REQUIRE(r.exit_code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["outputs"]["component"] == 2);
    CHECK(j["outputs"]["order"] == 2);
    CHECK(j["outputs"]["point"] == "[0:1]");

    std::string undet = temp_file(
        "arc_ak_und", R"({"truncation": 12, "vars": {"x": ["0"], "y": ["0", "0", "0", "1"]}})");
    RunResult u = run_cli("ak --k 5 --arc " + undet);
    CHECK(u.exit_code == 2);
    ordered_json uj = ordered_json::parse(u.out);
    CHECK(uj.contains("error"));
    CHECK(uj["truncation"] == 12);
}

TEST_CASE("dulac subcommand passes all frozen checks") {
    RunResult r = run_cli("dulac");
    REQUIRE(r.exit_code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["outputs"]["all_pass"] == true);
    CHECK(j["outputs"]["q4"]["degree_xy"] == 2);
    CHECK(j["outputs"]["limit_case_d"] == true);
    CHECK(j["outputs"]["limit_case_e"] == true);
}

TEST_CASE("zoladek subcommand writes reports and CSV dumps") {
    std::string arc_path = temp_file(
        "arc_e1", R"({"truncation": 12, "vars": {"l1": ["0", "1"], "l2": ["0"], "l3": ["0"], "l4": ["0"], "l5": ["0"], "l6": ["0"]}})");
    RunResult r = run_cli("zoladek --arc " + arc_path +
                          " --eps 1e-6 --csv cli_zoladek.csv --json cli_zoladek.json");
    REQUIRE(r.exit_code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["outputs"]["order_used"] == 1);
    double c1 = j["outputs"]["c1"].get<double>();
    CHECK(std::abs(c1 - 6.283185307) < 1e-3);

    std::ifstream csv("cli_zoladek.csv");
    REQUIRE(csv.good());
    std::string header;
    std::getline(csv, header);
    CHECK(header == "h,epsilon,displacement,integrator_error_estimate");

    std::ifstream js("cli_zoladek.json");
    REQUIRE(js.good());
    ordered_json file_copy = ordered_json::parse(js);
    CHECK(file_copy == j);
}

TEST_CASE("melnikov subcommand measures the trace arc order") {
    std::string arc_path = temp_file(
        "arc_e1b", R"({"truncation": 12, "vars": {"l1": ["0", "1"], "l2": ["0"], "l3": ["0"], "l4": ["0"], "l5": ["0"], "l6": ["0"]}})");
    RunResult r = run_cli("melnikov --arc " + arc_path +
                          " --eps-list 0.01 --eps-list 0.005 --eps-list 0.0025");
    REQUIRE(r.exit_code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["outputs"]["algebraic_order"] == 1);
    CHECK(j["outputs"]["fit"]["status"] == "ok");
    CHECK(j["outputs"]["fit"]["measured_order"] == 1);

    // identically zero deformation: below noise, exit code 2
    std::string zero_path = temp_file(
        "arc_zero", R"({"truncation": 12, "vars": {"l1": ["0"], "l2": ["0"], "l3": ["0"], "l4": ["0"], "l5": ["0"], "l6": ["0"]}})");
    RunResult z = run_cli("melnikov --arc " + zero_path +
                          " --eps-list 0.01 --eps-list 0.005 --eps-list 0.0025");
    CHECK(z.exit_code == 2);
}

TEST_CASE("closures subcommand passes with a failing negative control") {
    RunResult r = run_cli("closures");
    REQUIRE(r.exit_code == 0);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["outputs"]["all_pass"] == true);
    REQUIRE(j["outputs"]["checks"].is_array());
    CHECK(j["outputs"]["checks"].size() == 6);
    CHECK(j["outputs"]["negative_control"]["expected_fail"] == true);
    CHECK(j["outputs"]["negative_control"]["failed_as_expected"] == true);
}
