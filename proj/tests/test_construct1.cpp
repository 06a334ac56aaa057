#include "dsrg/canon.hpp"
#include "dsrg/classify.hpp"
#include "dsrg/construct1.hpp"
#include "dsrg/construct2.hpp"
#include "dsrg/error.hpp"
#include "dsrg/fixtures.hpp"
#include "dsrg/io.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <set>

using namespace dsrg;

TEST_CASE("general mode") {
    const auto res = build_c1_general(2, 5, 2, 2);
    CHECK(verify_dsrg(res.graph).params == DsrgParams{100, 40, 18, 13, 18});
    CHECK(res.warnings.empty());

    const auto design = grouped_design_from_json(json::parse(fixture_file("grouped100.json")));
    CHECK(grouped_design_violations(design).empty());
    const auto transcribed = build_c1_general(design);
    CHECK(verify_dsrg(transcribed.graph).params == DsrgParams{100, 40, 18, 13, 18});
    const auto blocks = family_from_json(json::parse(fixture_file("grouped100_blocks.json")));
    CHECK(family_key(transcribed.family) == family_key(blocks));
}

TEST_CASE("closed forms match the verifier across small general inputs") {
    for (int r = 2; r <= 3; ++r)
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 3; ++b) {
                const int q = 1 + a * b;
                const auto g = build_c1_general(r, q, a, b).graph;
                const auto got = verify_dsrg(g).params;
                CAPTURE(r);
                CAPTURE(a);
                CAPTURE(b);
                CHECK(got == expected_params_c1(C1Mode::general, r, q, a, b));
                CHECK(got == test_support::naive_dsrg(g));
            }
}

TEST_CASE("a broken grouped design is refused") {
    auto design = default_grouped_design(2, 3, 1, 2);
    design.spanning_blocks[0] = design.spanning_blocks[1];
    CHECK_THROWS_AS(build_c1_general(design), ConstructionError);
    CHECK_THROWS_AS(build_c1_general(2, 4, 2, 2), ParameterError);
}

TEST_CASE("b = 1 strict pairing") {
    const auto res = build_c1_b1(2, 3);
    CHECK(verify_dsrg(res.graph).params == DsrgParams{18, 12, 10, 7, 10});
    const auto table = family_from_json(json::parse(fixture_file("b1_r2_q3.json")));
    CHECK(family_key(res.family) == family_key(table));
    CHECK_FALSE(are_isomorphic(res.graph, transpose(res.graph)));
    for (int r = 2; r <= 4; ++r)
        for (int q = 2; q <= 4; ++q) CHECK(verify_dsrg(build_c1_b1(r, q).graph).params == expected_params_c1(C1Mode::b1, r, q));
}

TEST_CASE("b = 1 relaxed pairing") {
    CHECK(relaxed_choice_count(3, 2) == 64);
    CHECK(relaxed_choice_count(2, 5) == 1);
    std::set<std::vector<int>> vectors;
    std::set<std::vector<std::vector<Block>>> families;
    for (std::uint64_t i = 0; i < 64; ++i) {
        const auto c = relaxed_choice_vector(3, 2, i);
        vectors.insert(c);
        const auto res = build_c1_b1(3, 2, Pairing::relaxed, c);
        families.insert(family_key(res.family));
        CHECK(verify_dsrg(res.graph).params == DsrgParams{12, 6, 4, 2, 4});
    }
    CHECK(vectors.size() == 64);
    CHECK(families.size() == 64);
    const auto table = family_from_json(json::parse(fixture_file("b1_r3_q2.json")));
    CHECK(families.count(family_key(table)) == 1);
    CHECK_THROWS_AS(relaxed_choice_vector(3, 2, 64), ParameterError);
    CHECK_THROWS_AS(build_c1_b1(3, 2, Pairing::strict, std::vector<int>{0}), ParameterError);
    // q = 3, r = 4: a random relaxed choice still verifies.
    std::mt19937_64 rng(3);
    const auto c = relaxed_choice_vector(4, 3, uniform_below(rng, relaxed_choice_count(4, 3)));
    CHECK(verify_dsrg(build_c1_b1(4, 3, Pairing::relaxed, c).graph).params == expected_params_c1(C1Mode::b1, 4, 3));
}

TEST_CASE("a = 1 mode") {
    CHECK(verify_dsrg(build_c1_a1(3, 2).graph).params == DsrgParams{12, 6, 4, 2, 4});
    CHECK(verify_dsrg(build_c1_a1(5, 2).graph).params == DsrgParams{20, 10, 6, 4, 6});
    CHECK(verify_dsrg(build_c1_a1(5, 3).graph).params == DsrgParams{90, 30, 11, 8, 11});
    CHECK(verify_dsrg(build_c1_a1(6, 3).graph).params == DsrgParams{108, 36, 13, 10, 13});
    for (int r = 2; r <= 5; ++r)
        for (int q = 2; q <= 3; ++q) CHECK(verify_dsrg(build_c1_a1(r, q).graph).params == expected_params_c1(C1Mode::a1, r, q));

    // r = 4, q = 2 gives (16,8,5,3,5); the m = 2 blow-up of r = q = 2 gives (16,8,6,2,6).
    CHECK(verify_dsrg(build_c1_a1(4, 2).graph).params == DsrgParams{16, 8, 5, 3, 5});
    const auto small = build_c1_a1(2, 2).graph;
    CHECK(verify_dsrg(small).params == DsrgParams{8, 4, 3, 1, 3});
    CHECK(verify_dsrg(blow_up(small, Variant::d1, 2)).params == DsrgParams{16, 8, 6, 2, 6});
}

TEST_CASE("a = 1 parts are pencils through the point") {
    // Blocks through point i sharing a part meet only in i: their coordinates
    // differ everywhere else exactly when their diagonal offsets agree.
    const int q = 3;
    std::map<int, std::vector<std::vector<int>>> parts;
    for (int y1 = 0; y1 < q; ++y1)
        for (int y2 = 0; y2 < q; ++y2)
            for (int y3 = 0; y3 < q; ++y3) {
                const std::vector<int> coords{y1, y2, y3};
                parts[a1_part_index(q, coords)].push_back(coords);
            }
    CHECK(parts.size() == 9);
    for (const auto& [idx, blocks] : parts) {
        CHECK(blocks.size() == 3);
        for (std::size_t x = 0; x < blocks.size(); ++x)
            for (std::size_t y = x + 1; y < blocks.size(); ++y)
                for (int k = 0; k < 3; ++k) CHECK(blocks[x][static_cast<std::size_t>(k)] != blocks[y][static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("a = 1 with a non-injective part map") {
    const std::vector<int> zeros(6, 0);
    const auto res = build_c1_a1(3, 2, zeros);
    CHECK_FALSE(res.warnings.empty());
    CHECK(verify_dsrg(res.graph).params == DsrgParams{12, 6, 4, 2, 4});
    CHECK_THROWS_AS(build_c1_a1(3, 2, std::vector<int>{0, 1}), ParameterError);
    CHECK_THROWS_AS(build_c1_a1(3, 2, std::vector<int>{0, 0, 0, 0, 0, 2}), ParameterError);
}

TEST_CASE("closed-form parameter ranges") {
    CHECK_THROWS_AS(expected_params_c1(C1Mode::b1, 1, 3), ParameterError);
    CHECK_THROWS_AS(expected_params_c1(C1Mode::a1, 3, 1), ParameterError);
    CHECK(expected_params_c1(C1Mode::b1, 3, 6) == DsrgParams{108, 90, 80, 74, 80});
}
