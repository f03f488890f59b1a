#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cli.hpp"
#include "tridecomp/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tridecomp;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto dir = std::filesystem::temp_directory_path() / "tridecomp_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / name).string();
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("octahedron end to end") {
    const auto gen = call({"gen", "--family", "octahedron"});
    REQUIRE(gen.code == 0);
    const auto in = temp_file("oct.json", gen.out);
    const auto dec = call({"decompose", "--mode", "4c", in});
    REQUIRE(dec.code == 0);
    CHECK(Json::parse(dec.out)["T0"].size() == 5);
    const auto claims = temp_file("oct_dec.json", dec.out);
    CHECK(call({"verify", "--claims", claims, in}).code == 0);

    auto broken = Json::parse(dec.out);
    broken["T1"].push_back(broken["T0"].back());
    broken["T0"].erase(broken["T0"].size() - 1);
    const auto bad = temp_file("oct_bad.json", dump_json(broken));
    CHECK(call({"verify", "--claims", bad, in}).code == 1);

    const auto dot = call({"draw", "--format", "dot", "--decomposition", claims, in});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("color=black") != std::string::npos);
    const auto svg = call({"draw", "--format", "svg", in});
    CHECK(svg.code == 0);
    CHECK(svg.out.rfind("<svg", 0) == 0);
}

TEST_CASE("brute exit codes") {
    const auto ico = temp_file("ico.json", call({"gen", "--family", "icosahedron"}).out);
    CHECK(call({"brute", "--d", "1", "--third", "any", ico}).code == 1);
    const auto oct = temp_file("oct2.json", call({"gen", "--family", "octahedron"}).out);
    const auto sat = call({"brute", "--d", "1", oct});
    CHECK(sat.code == 0);
    CHECK(Json::parse(sat.out)["status"] == "SAT");
    CHECK(call({"brute", "--d", "1", "--third", "tree", "--budget", "3", ico}).code == 1);
    const auto dw = temp_file("dw.json", call({"gen", "--family", "doublewheel:9"}).out);
    CHECK(call({"brute", "--d", "2", "--third", "tree", "--budget", "5", dw}).code == 2);
}

TEST_CASE("usage and data errors") {
    const auto oct = temp_file("oct3.json", call({"gen", "--family", "octahedron"}).out);
    CHECK(call({"decompose", "--mode", "ham", oct}).code == cli::kExitUsage);
    CHECK(call({}).code == cli::kExitUsage);
    CHECK(call({"decompose", "--mode", "sideways", oct}).code == cli::kExitUsage);
    CHECK(call({"tight", oct}).code == cli::kExitUsage);
    const auto junk = temp_file("junk.json", "{not json");
    CHECK(call({"decompose", "--mode", "any", junk}).code == cli::kExitData);
    const auto two = temp_file("two.json", R"({"rot":[[1],[0]],"outer":[0,1]})");
    CHECK(call({"validate", two}).code == cli::kExitData);
    CHECK(call({"validate", oct}).code == 0);
    const auto ap = temp_file("ap.json", call({"gen", "--family", "apollonian:3:1"}).out);
    CHECK(call({"decompose", "--mode", "4c", ap}).code == cli::kExitData);
    CHECK(call({"gen", "--family", "doublewheel:2"}).code == cli::kExitData);
    CHECK(call({"decompose", "--mode", "any", "/nonexistent/x.json"}).code == cli::kExitData);
}

TEST_CASE("remaining subcommands") {
    const auto ph = call({"gen", "--family", "polygon_ham", "--param", "14", "--seed", "5"});
    REQUIRE(ph.code == 0);
    const auto in = temp_file("ph.json", ph.out);
    const auto ham = call({"decompose", "--mode", "ham", "--cycle", in, in});
    REQUIRE(ham.code == 0);
    CHECK(Json::parse(ham.out)["claims"]["degree_bound"] == 3);
    CHECK(call({"assign", "--k", "2", in}).code == 0);
    const auto a = call({"assign", "--k", "2", in});
    const auto af = temp_file("ph_assign.json", a.out);
    CHECK(call({"verify", "--claims", af, in}).code == 0);

    const auto tri = temp_file("tri.json", R"({"rot":[[1,2],[2,0],[0,1]],"outer":[0,1,2]})");
    const auto wc = call({"whitney", "--x", "0", "--y", "1", "--z", "2", tri});
    CHECK(wc.code == 0);
    CHECK(Json::parse(wc.out).size() == 3);

    const auto g2 = call({"tight", "--g2", "--cycle", in, in});
    REQUIRE(g2.code == 0);
    CHECK(Json::parse(g2.out)["k"] == 7);
    const auto pair = temp_file("pair.json", g2.out);
    const auto check = call({"tight", "--check", pair});
    CHECK(check.code == 0);
    CHECK(Json::parse(check.out)["k"] == 7);

    const auto seeded = call({"gen", "--family", "flipwalk:10:40:2"});
    CHECK(seeded.out == call({"gen", "--family", "flipwalk", "--param", "10", "--param", "40",
                              "--seed", "2"})
                            .out);
}
