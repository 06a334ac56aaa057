#include "dsrg/construct1.hpp"
#include "dsrg/construct2.hpp"
#include "dsrg/error.hpp"
#include "dsrg/fixtures.hpp"
#include "dsrg/io.hpp"

#include <doctest.h>

#include <sstream>

using namespace dsrg;

TEST_CASE("digraph01 round trip") {
    for (const auto& name : fixture_names()) {
        const auto g = load_fixture(name);
        const auto back = parse_digraph01(format_digraph01(g));
        CHECK(back.same_matrix(g));
    }
    CHECK(format_digraph01(parse_digraph01("3\n010\n001\n100\n")) == "3\n010\n001\n100\n");
}

TEST_CASE("digraph01 errors name the line") {
    auto message = [](const std::string& text) {
        try {
            parse_digraph01(text);
        } catch (const FormatError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("3\n010\n01\n100\n").find("line 3") != std::string::npos);
    CHECK(message("3\n010\n0a1\n100\n").find("line 3") != std::string::npos);
    CHECK(message("3\n010\n001\n").find("ended after 2") != std::string::npos);
    CHECK(message("x\n") != "no error");
    CHECK(message("2\n01\n10\n\n") == "no error");
    CHECK(message("2\n01\n10\n01\n") != "no error");
}

TEST_CASE("digraph01 streams") {
    std::istringstream in("2\n01\n10\n\n\n3\n011\n101\n110\n2\n00\n00\n");
    const auto graphs = read_digraph01_stream(in);
    REQUIRE(graphs.size() == 3);
    CHECK(graphs[1].size() == 3);
    CHECK(graphs[2].arc_count() == 0);
    std::istringstream empty("");
    CHECK(read_digraph01_stream(empty).empty());
    std::istringstream bad("2\n01\n10\n3\n01\n");
    CHECK_THROWS_AS(read_digraph01_stream(bad), FormatError);
}

TEST_CASE("JSON round trips") {
    const auto g = build_d1(chunked_pointwise_family(5, 2, 2, 1));
    const auto back = digraph_from_json(digraph_to_json(g));
    CHECK(back.same_matrix(g));
    CHECK(back.labels() == g.labels());
    CHECK(labels_from_json(labels_to_json(g.labels())) == g.labels());

    const auto fam = chunked_pointwise_family(7, 3, 4, 2);
    const auto f2 = family_from_json(family_to_json(fam));
    CHECK(f2.n_points == 7);
    CHECK(f2.owner_blocks == fam.owner_blocks);

    const auto design = default_grouped_design(3, 3, 1, 2);
    const auto d2 = grouped_design_from_json(grouped_design_to_json(design));
    CHECK(d2.groups == design.groups);
    CHECK(d2.group_blocks == design.group_blocks);
    CHECK(d2.spanning_blocks == design.spanning_blocks);
    CHECK(d2.x_partitions == design.x_partitions);

    const auto p = params_to_json(DsrgParams{10, 4, 2, 1, 2});
    CHECK(p["v"] == 10);
    CHECK(p["lambda"] == 1);

    CHECK_THROWS(digraph_from_json(json::parse(R"({"n": 2, "rows": ["01"]})")));
    CHECK_THROWS(family_from_json(json::parse(R"({"n_points": 3})")));
}

TEST_CASE("relation matrix text") {
    const auto [n, rel] = parse_relation_matrix("2\n0 1\n1 0\n");
    CHECK(n == 2);
    CHECK(rel == std::vector<int>{0, 1, 1, 0});
    CHECK_THROWS(parse_relation_matrix("2\n0 1\n1\n"));
}
