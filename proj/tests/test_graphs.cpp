#include "dsrg/canon.hpp"
#include "dsrg/error.hpp"
#include "dsrg/fixtures.hpp"
#include "dsrg/graphs.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace dsrg;

namespace {

Digraph complete(std::size_t n) {
    Digraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) g.set_arc(i, j);
    return g;
}

}  // namespace

TEST_CASE("J - I on 4 vertices") {
    const auto v = verify_dsrg(complete(4));
    REQUIRE(v.params);
    CHECK(*v.params == DsrgParams{4, 3, 3, 2, 2});
    CHECK_FALSE(v.advisories.empty());
}

TEST_CASE("transcribed matrices verify") {
    CHECK(verify_dsrg(load_fixture("N1")).params == DsrgParams{12, 6, 4, 2, 4});
    CHECK(verify_dsrg(load_fixture("T1")).params == DsrgParams{10, 4, 2, 1, 2});
    for (const auto& name : fixture_names()) {
        const Digraph g = load_fixture(name);
        const auto v = verify_dsrg(g);
        REQUIRE_MESSAGE(v.params, name);
        CHECK(v.params == test_support::naive_dsrg(g));
    }
}

TEST_CASE("rejections carry a witness") {
    SUBCASE("empty graph is degenerate") {
        const auto v = verify_dsrg(Digraph(5));
        CHECK_FALSE(v.params);
        REQUIRE(v.witness);
        CHECK(v.witness->reason.find("degenerate") != std::string::npos);
    }
    SUBCASE("complement of J - I is rejected") {
        CHECK_FALSE(verify_dsrg(complement(complete(6))));
    }
    SUBCASE("unequal out-degrees") {
        const Digraph g = test_support::from_rows({"011", "000", "100"});
        const auto v = verify_dsrg(g);
        REQUIRE(v.witness);
        CHECK(v.witness->reason.find("k not constant") != std::string::npos);
    }
    SUBCASE("A^2 entry mismatch names the entry") {
        // Directed 6-cycle: regular, but A^2 is not of the required form.
        const auto v = verify_dsrg(test_support::directed_cycle(6));
        REQUIRE(v.witness);
        CHECK(v.witness->row < 6);
        CHECK(v.witness->col < 6);
    }
    SUBCASE("loops are structural errors") {
        Digraph g(3);
        g.set_arc(1, 1);
        CHECK_THROWS_AS(verify_dsrg(g), StructuralError);
    }
}

TEST_CASE("verify_dsrg agrees with a naive A^2 on random digraphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 3 + rng() % 6;
        Digraph g(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && rng() % 2) g.set_arc(i, j);
        CHECK(verify_dsrg(g).params == test_support::naive_dsrg(g));
    }
    // Directed cycles C3 (tournament, t = 0) pass; the verdicts still agree.
    CHECK(verify_dsrg(test_support::directed_cycle(3)).params == test_support::naive_dsrg(test_support::directed_cycle(3)));
}

TEST_CASE("parameters are invariant under relabeling and transpose") {
    std::mt19937_64 rng(5);
    for (const auto& name : fixture_names()) {
        const Digraph g = load_fixture(name);
        const auto p = verify_dsrg(g).params;
        CHECK(verify_dsrg(transpose(g)).params == p);
        for (int i = 0; i < 100; ++i) CHECK(verify_dsrg(g.permuted(test_support::random_permutation(g.size(), rng))).params == p);
    }
}

TEST_CASE("transpose, complement and symmetrize") {
    const Digraph n1 = load_fixture("N1");
    CHECK(transpose(transpose(n1)).same_matrix(n1));
    CHECK(complement(complement(n1)).same_matrix(n1));

    const auto c = verify_dsrg(complement(n1));
    REQUIRE(c.params);
    CHECK(c.params->k == 5);
    CHECK(c.params == test_support::naive_dsrg(complement(n1)));

    const Digraph sym = symmetrize(load_fixture("T4"));
    CHECK(sym.is_symmetric());
    CHECK(symmetrize(sym).same_matrix(sym));
    for (std::size_t i = 0; i < sym.size(); ++i) CHECK(sym.out_degree(i) == 6);
    CHECK(verify_srg(sym).params == SrgParams{10, 6, 3, 4});
    // J9 symmetrizes to a 6-regular graph that is not strongly regular.
    CHECK_FALSE(verify_srg(symmetrize(load_fixture("J9"))));
    CHECK_FALSE(are_isomorphic(symmetrize(load_fixture("J9")), sym));

    // Labels travel with their vertices.
    const Digraph t1 = load_fixture("T1");
    REQUIRE(t1.labeled());
    CHECK(transpose(t1).labels() == t1.labels());
    const auto perm = std::vector<int>{9, 8, 7, 6, 5, 4, 3, 2, 1, 0};
    CHECK(t1.permuted(perm).labels().front() == t1.labels().back());
}

TEST_CASE("verify_srg") {
    const Digraph c5 = symmetrize(test_support::directed_cycle(5));
    CHECK(verify_srg(c5).params == SrgParams{5, 2, 0, 1});
    CHECK(verify_srg(test_support::kneser_5_2()).params == SrgParams{10, 3, 0, 1});
    CHECK_THROWS_AS(verify_srg(test_support::directed_cycle(5)), StructuralError);
    CHECK_FALSE(verify_srg(symmetrize(test_support::directed_cycle(6))).params.has_value());
}
