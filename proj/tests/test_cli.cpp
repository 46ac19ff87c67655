#include <doctest.h>

#include "plabic/cli.hpp"
#include "plabic/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace plabic;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    args.insert(args.begin(), "plabic");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (l == line)
            return true;
    return false;
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "plabic_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("verify all passes for (4,7)") {
    const auto path = scratch("cert47.json");
    const auto o = call({"verify", "--suite", "all", "--k", "4", "--n", "7", "--out", path.string()});
    CHECK(o.code == 0);
    CHECK(o.out.find("[FAIL]") == std::string::npos);
    CHECK(has_line(o.out, "[ok]   figures/primal_trip_permutation: 4 5 6 7 1 2 3"));
    CHECK(has_line(o.out, "[ok]   figures/rec47_labels: 13 of 13 labels matched"));
    CHECK(has_line(o.out, "[ok]   figures/dual_empty_face: 4567"));
    std::ifstream f(path);
    REQUIRE(f);
    const auto cert = Json::parse(f);
    CHECK(cert["status"] == "certified");
    CHECK(cert["bijection"].size() == 35);
}

TEST_CASE("every suite passes on small cases") {
    for (const auto& kn : {std::pair<std::string, std::string>{"2", "4"}, {"2", "5"}, {"3", "6"}}) {
        const auto path = scratch("cert_" + kn.first + kn.second + ".json");
        const auto o = call({"verify", "--suite", "all", "--k", kn.first, "--n", kn.second, "--out", path.string()});
        CAPTURE(o.out);
        CHECK(o.code == 0);
    }
}

TEST_CASE("output is deterministic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"rec", "--k", "3", "--n", "6", "--emit", "json"},
             {"rec", "--k", "3", "--n", "6", "--emit", "svg", "--dual"},
             {"no-body", "--k", "4", "--n", "7", "--dual", "--level", "2"},
             {"verify", "--suite", "plucker", "--k", "4", "--n", "7", "--seed", "5"}}) {
        const auto a = call(args), b = call(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("emitted JSON reads back") {
    for (bool dual : {false, true}) {
        std::vector<std::string> args{"rec", "--k", "4", "--n", "7"};
        if (dual)
            args.push_back("--dual");
        const auto o = call(args);
        REQUIRE(o.code == 0);
        const auto r = rec_graph_from_json(Json::parse(o.out));
        const auto want = dual ? dualize(build_rec(4, 7)) : build_rec(4, 7);
        CHECK(r.labels == want.labels);
        CHECK(r.orientation.sources == want.orientation.sources);
    }
}

TEST_CASE("single commands") {
    auto o = call({"plucker", "--k", "4", "--n", "7", "--dual", "--J", "1,2,3,4"});
    CHECK(o.code == 0);
    CHECK(o.out == "1\n");

    o = call({"trips", "--k", "4", "--n", "7"});
    CHECK(has_line(o.out, "permutation: 4 5 6 7 1 2 3"));

    o = call({"faces", "--k", "4", "--n", "7"});
    CHECK(o.out.find("label 167 centroid (5, 2)") != std::string::npos);
    CHECK(has_line(o.out, "13 faces"));

    o = call({"no-body", "--k", "2", "--n", "4"});
    CHECK(o.code == 0);
    CHECK(o.out.rfind("J,", 0) == 0);

    o = call({"poset", "--k", "2", "--n", "4", "--type", "chain", "--points"});
    CHECK(o.code == 0);
    CHECK(std::count(o.out.begin(), o.out.end(), '\n') == 7);

    o = call({"poset", "--k", "2", "--n", "4", "--type", "order", "--r", "2"});
    CHECK(o.code == 0);
    CHECK(hrep_from_json(Json::parse(o.out)).ineqs.size() == 6);
}

TEST_CASE("exit codes") {
    CHECK(call({"rec", "--k", "1", "--n", "7"}).code == 2);
    CHECK(call({"rec", "--k", "4", "--n", "7", "--bogus"}).code == 2);
    CHECK(call({"rec", "--k", "3", "--n", "13"}).code == 2);
    CHECK(call({"plucker", "--k", "4", "--n", "7", "--J", "1,2"}).code == 2);
    CHECK(call({"plucker", "--k", "4", "--n", "7", "--J", "x"}).code == 2);
    CHECK(call({"verify", "--suite", "nope", "--k", "4", "--n", "7"}).code == 2);
    CHECK(call({}).code == 2);
    const auto o = call({"rec", "--k", "2", "--n", "4", "--out", "/nonexistent-dir/x.json"});
    CHECK(o.code == 1);
    CHECK(o.err.find("cannot write") != std::string::npos);
}

TEST_CASE("the relabelled suite reports without failing") {
    const auto o = call({"verify", "--suite", "w0", "--k", "2", "--n", "4"});
    CHECK(o.code == 0);
    CHECK(o.out.find("not certified") != std::string::npos);
    CHECK(has_line(o.out, "[ok]   w0/point_counts: 6 valuation points, 6 antichains"));
}
