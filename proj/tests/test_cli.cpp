#include "dsrg/canon.hpp"
#include "dsrg/cli.hpp"
#include "dsrg/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace dsrg;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("construct then verify through a file") {
    const auto dir = std::filesystem::temp_directory_path() / "dsrg_cli_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "c2.d01").string();

    const auto built = call({"construct", "c2", "--n", "5", "--s", "2", "--l", "2", "--d", "1", "--format", "json"});
    REQUIRE(built.code == kExitOk);
    const auto report = json::parse(built.out);
    CHECK(report["matches_expected"] == true);
    const auto graph = digraph_from_json(report["graph"]);
    CHECK(report["certificate"] == to_hex(canonical_form(graph).certificate));

    REQUIRE(call({"construct", "c2", "--n", "5", "--s", "2", "--l", "2", "--d", "1", "--out", path}).code == kExitOk);
    const auto from_file = read_digraph_file(path);
    CHECK(from_file.same_matrix(graph));

    const auto verified = call({"verify", path, "--format", "json", "--aut"});
    REQUIRE(verified.code == kExitOk);
    const auto v = json::parse(verified.out);
    CHECK(v[0]["params"] == report["expected"]);
    std::filesystem::remove_all(dir);
}

TEST_CASE("verify reads stdin and reports failures") {
    const auto ok = call({"verify", "-"}, "3\n010\n001\n100\n");
    CHECK(ok.code == kExitOk);
    CHECK(ok.out.find("DSRG (3,1,0,0,1)") != std::string::npos);
    const auto bad = call({"verify", "-"}, "3\n000\n000\n000\n");
    CHECK(bad.code == kExitVerification);
    const auto malformed = call({"verify", "-"}, "3\n010\n01\n100\n");
    CHECK(malformed.code == kExitUsage);
    CHECK(malformed.err.find("line 3") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(call({}).code == kExitUsage);
    CHECK(call({"construct", "c2", "--n", "6"}).code == kExitUsage);
    CHECK(call({"construct", "c2", "--n", "5", "--s", "2", "--l", "3", "--d", "1"}).code == kExitUsage);
    CHECK(call({"frobnicate"}).code == kExitUsage);
    CHECK(call({"construct", "c1", "--mode", "general", "--r", "2", "--q", "4", "--a", "2", "--b", "2"}).code == kExitUsage);
}

TEST_CASE("classify a stream of constructions") {
    const auto built = call({"construct", "c1", "--mode", "b1", "--r", "3", "--q", "2", "--pairing", "relaxed", "--enumerate"});
    REQUIRE(built.code == kExitOk);
    const auto classes = call({"classify", "-", "--no-aut"}, built.out);
    REQUIRE(classes.code == kExitOk);
}

TEST_CASE("scheme and orbits commands") {
    const auto s = call({"scheme", "T4"});
    CHECK(s.code == kExitOk);
    CHECK(call({"scheme", "N1"}).code == kExitVerification);
    const auto o = call({"orbits", "--n", "5", "--s", "2", "--l", "2"});
    CHECK(o.code == kExitOk);
    const auto f = call({"fixture", "T4"});
    CHECK(f.code == kExitOk);
    CHECK(parse_digraph01(f.out).size() == 10);
}
