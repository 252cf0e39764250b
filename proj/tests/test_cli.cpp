#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gridresolve/cli.hpp"
#include "gridresolve/io.hpp"
#include "gridresolve/resolve.hpp"

using namespace gridresolve;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "--no-timing");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("check command") {
    auto r = run({"check", "3x3", "(0,0);(2,0)", "--minimal"});
    CHECK(r.code == 0);
    CHECK(r.json()["result"]["value"] == true);

    r = run({"check", "3x3", "(0,0);(2,2)"});
    CHECK(r.code == 1);
    CHECK(r.json()["result"]["witness"] == Json::array({"(0,1)", "(1,0)"}));

    r = run({"check", "3x3", "(9,9)"});
    CHECK(r.code == 3);
    CHECK(r.out.empty());
    CHECK(r.err.find("outside") != std::string::npos);

    CHECK(run({"check", "3x3", "(0,0);(0,0)"}).code == 3);
    CHECK(run({"check", "3x3"}).code == 2);
    CHECK(run({"check", "3x3", "(0,0)", "--minimal", "--local"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("check witnesses") {
    auto r = run({"check", "3x3", "(0,0);(2,2)", "--witness"});
    const auto pairs = r.json()["result"]["unresolved_pairs"];
    CHECK(pairs.size() == unresolved_pairs(Grid(3, 3), {{0, 0}, {2, 2}}).size());

    r = run({"check", "3x3", "(0,0);(2,0);(1,1)", "--minimal", "--witness"});
    CHECK(r.code == 1);
    CHECK(r.json()["result"]["removable"] == Json::array({"(1,1)"}));

    r = run({"check", "3x3", "(0,0);(2,2)", "--local", "--witness"});
    CHECK(r.code == 1);
    CHECK(!r.json()["result"]["failing_vertices"].empty());
    CHECK(run({"check", "3x3", "(0,0);(2,0)", "--local"}).code == 0);
}

TEST_CASE("enumerate command") {
    auto r = run({"enumerate", "3x3", "--kmax", "4"});
    CHECK(r.code == 0);
    const auto hist = r.json()["result"]["histogram"];
    CHECK(hist.size() == 3);
    CHECK(hist["2"] == 4);
    CHECK(hist.contains("3"));
    CHECK(hist.contains("4"));

    r = run({"enumerate", "3x3", "--kmax", "6"});
    for (const auto& [k, c] : r.json()["result"]["histogram"].items()) CHECK(std::stoi(k) <= 4);

    r = run({"enumerate", "9x9", "--mode", "pure"});
    CHECK(r.code == 3);
    CHECK(r.err.find("subset checks") != std::string::npos);

    CHECK(run({"enumerate", "3x3", "--mode", "fast"}).code == 2);
    CHECK(run({"enumerate", "3x3", "--kmax", "1"}).code == 3);
    CHECK(run({"enumerate", "4x4", "--certify"}).code == 0);
}

TEST_CASE("enumerate writes the catalog to a file") {
    const auto path = temp_file("gridresolve_test_catalog.json");
    const auto r = run({"enumerate", "3x4", "--mode", "pruned", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK_FALSE(r.json()["result"].contains("minimals"));
    std::ifstream in(path);
    const auto doc = Json::parse(in);
    CHECK(doc["schema"] == kSchema);
    const auto& sets = doc["result"]["minimals"];
    CHECK(sets.size() == doc["result"]["count"].get<std::size_t>());
    std::vector<VertexSet> parsed;
    for (const auto& s : sets) {
        const auto vs = parse_set_spec(s.get<std::string>());
        CHECK(format_set(vs) == s.get<std::string>());
        parsed.push_back(vs);
    }
    CHECK(std::is_sorted(parsed.begin(), parsed.end()));
    std::filesystem::remove(path);
}

TEST_CASE("solve command") {
    auto r = run({"solve", "3x3", "--weights", "unit", "--algo", "bb"});
    CHECK(r.code == 0);
    CHECK(r.json()["result"]["objective"] == 2);
    CHECK(r.json()["result"]["proof"] == "optimal");

    const auto path = temp_file("gridresolve_test_corners100.json");
    {
        Json table = Json::object();
        for (int x = 0; x < 3; ++x) {
            for (int y = 0; y < 3; ++y) {
                const bool corner = (x != 1) && (y != 1);
                table[std::to_string(x) + "," + std::to_string(y)] = corner ? 100 : 1;
            }
        }
        std::ofstream out(path);
        out << Json{{"schema", kSchema}, {"weights", table}}.dump();
    }
    r = run({"solve", "3x3", "--weights", path.string(), "--algo", "bb"});
    CHECK(r.code == 0);
    CHECK(r.json()["result"]["objective"] == 3);
    CHECK(run({"solve", "3x4", "--weights", path.string()}).code == 3);
    std::filesystem::remove(path);

    r = run({"solve", "3x3", "--weights", "unit", "--algo", "greedy"});
    CHECK(r.json()["result"]["objective"] >= 2);
    CHECK(is_resolving(Grid(3, 3), parse_set_spec(r.json()["result"]["chosen"].get<std::string>())));

    CHECK(run({"solve", "3x3", "--minimality-of", "(0,0);(2,0)"}).code == 0);
    r = run({"solve", "3x3", "--minimality-of", "(0,0);(2,2)"});
    CHECK(r.code == 1);
    CHECK(r.json()["result"]["verdict"] == "not-resolving");
    CHECK(run({"solve", "3x3", "--weights", "/no/such/file.json"}).code == 3);
}

TEST_CASE("construct command") {
    auto r = run({"construct", "5x5", "--k", "8"});
    CHECK(r.code == 0);
    const auto S = parse_set_spec(r.json()["result"]["set"].get<std::string>());
    CHECK(S.size() == 8);
    CHECK(is_minimal(Grid(5, 5), S));

    r = run({"construct", "3x3", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.json()["result"]["set"] == "(0,0);(0,2)");

    CHECK(run({"construct", "3x3", "--k", "5"}).code == 3);
    CHECK(run({"construct", "5x5", "--k", "5"}).code == 4);
    CHECK(run({"construct", "4x4", "--staircase"}).code == 0);
    CHECK(run({"construct", "4x4"}).code == 2);
}

TEST_CASE("output is byte-stable without timing") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"check", "4x4", "(0,0);(1,3)", "--witness"},
             {"enumerate", "4x4", "--kmax", "6"},
             {"solve", "4x5", "--algo", "exhaustive"},
             {"construct", "6x6", "--k", "10"}}) {
        const auto a = run(args);
        const auto b = run(args);
        CHECK(a.out == b.out);
        CHECK(a.out.back() == '\n');
        CHECK(a.json()["schema"] == kSchema);
        CHECK_FALSE(a.json().contains("elapsed_ms"));
    }
    std::ostringstream out;
    std::ostringstream err;
    cli::run({"check", "3x3", "(0,0);(2,0)"}, out, err);
    CHECK(Json::parse(out.str()).contains("elapsed_ms"));
}
