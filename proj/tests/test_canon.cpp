#include "dsrg/canon.hpp"
#include "dsrg/fixtures.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace dsrg;
using test_support::random_permutation;

namespace {

Digraph random_digraph(std::size_t n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution arc(density);
    Digraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && arc(rng)) g.set_arc(i, j);
    return g;
}

// Brute force over all n! relabelings: number of automorphisms and number of
// distinct relabeled matrices.
std::pair<std::size_t, std::size_t> brute_force(const Digraph& g) {
    std::vector<int> p(g.size());
    std::iota(p.begin(), p.end(), 0);
    std::size_t aut = 0;
    std::set<std::string> seen;
    do {
        const Digraph h = g.permuted(p);
        if (h.same_matrix(g)) ++aut;
        std::string key;
        for (std::size_t i = 0; i < h.size(); ++i)
            for (std::size_t j = 0; j < h.size(); ++j) key.push_back(h.adjacent(i, j) ? '1' : '0');
        seen.insert(key);
    } while (std::next_permutation(p.begin(), p.end()));
    return {aut, seen.size()};
}

}  // namespace

TEST_CASE("certificates are invariant under relabeling") {
    std::mt19937_64 rng(99);
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const auto g = load_fixture(name);
        const auto cert = canonical_form(g).certificate;
        CHECK(cert.size() == 4 + (g.size() * g.size() + 7) / 8);
        for (int trial = 0; trial < 100; ++trial) {
            const auto h = g.permuted(random_permutation(g.size(), rng));
            CHECK(canonical_form(h).certificate == cert);
        }
    }
}

TEST_CASE("canonical graph reproduces the certificate") {
    const auto g = load_fixture("T3");
    const auto form = canonical_form(g);
    const auto c = form.canonical_graph(g);
    CHECK(canonical_form(c).certificate == form.certificate);
    // The certificate spells out the canonical matrix.
    const auto& cert = form.certificate;
    CHECK(static_cast<unsigned char>(cert[3]) == g.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) {
            const std::size_t bit = i * c.size() + j;
            const bool on = (static_cast<unsigned char>(cert[4 + bit / 8]) >> (7 - bit % 8)) & 1U;
            CHECK(on == c.adjacent(i, j));
        }
}

TEST_CASE("directed cycles") {
    for (std::size_t n = 3; n <= 9; ++n) {
        const auto c = test_support::directed_cycle(n);
        CHECK(automorphism_group(c).order() == n);
        CHECK_FALSE(are_isomorphic(c, test_support::directed_cycle(n == 3 ? 4 : n - 1)));
    }
    const auto c3 = test_support::directed_cycle(3);
    CHECK(are_isomorphic(c3, transpose(c3)));
}

TEST_CASE("aut order times distinct relabelings is n!") {
    std::mt19937_64 rng(5);
    for (std::size_t n = 1; n <= 7; ++n)
        for (int trial = 0; trial < (n <= 5 ? 12 : 3); ++trial) {
            const auto g = random_digraph(n, trial % 3 == 0 ? 0.5 : 0.25, rng);
            const auto [aut, distinct] = brute_force(g);
            std::size_t fact = 1;
            for (std::size_t i = 2; i <= n; ++i) fact *= i;
            CHECK(aut * distinct == fact);
            const auto res = canonical_search(g);
            CHECK(res.orbit_product == aut);
            CHECK(automorphism_group(g).order() == aut);
            for (const auto& p : res.automorphisms) CHECK(g.permuted(p.images()).same_matrix(g));
        }
    // Highly symmetric inputs: empty, complete, J(5,2) complement.
    CHECK(automorphism_group(Digraph(6)).order() == 720);
    CHECK(automorphism_group(test_support::kneser_5_2()).order() == 120);
}

TEST_CASE("published fixtures separate into the expected classes") {
    std::set<std::string> t;
    for (int i = 1; i <= 7; ++i) t.insert(canonical_form(load_fixture("T" + std::to_string(i))).certificate);
    CHECK(t.size() == 7);
    std::set<std::string> closure = t;
    for (int i = 1; i <= 7; ++i) closure.insert(canonical_form(transpose(load_fixture("T" + std::to_string(i)))).certificate);
    CHECK(closure.size() == 13);
    for (const char* j : {"J8", "J9"}) {
        closure.insert(canonical_form(load_fixture(j)).certificate);
        closure.insert(canonical_form(transpose(load_fixture(j))).certificate);
    }
    CHECK(closure.size() == 16);

    std::set<std::string> n;
    for (int i = 1; i <= 7; ++i) n.insert(canonical_form(load_fixture("N" + std::to_string(i))).certificate);
    CHECK(n.size() == 7);

    CHECK(automorphism_group(load_fixture("T4")).order() == 20);
    CHECK(are_isomorphic(load_fixture("T7"), transpose(load_fixture("T7"))));
    CHECK_FALSE(are_isomorphic(load_fixture("T4"), load_fixture("J9")));
}

TEST_CASE("isomorphism witnesses") {
    std::mt19937_64 rng(21);
    for (const auto& name : fixture_names()) {
        const auto g = load_fixture(name);
        const auto p = random_permutation(g.size(), rng);
        const auto h = g.permuted(p);
        const auto w = find_isomorphism(g, h);
        REQUIRE(w.has_value());
        CHECK(g.permuted(w->images()).same_matrix(h));
    }
    const auto g = load_fixture("N2");
    const auto self = find_isomorphism(g, g);
    REQUIRE(self.has_value());
    CHECK(g.permuted(self->images()).same_matrix(g));
    CHECK_FALSE(find_isomorphism(g, Digraph(g.size())).has_value());
    CHECK_FALSE(find_isomorphism(g, Digraph(g.size() + 1)).has_value());
}

TEST_CASE("hex rendering") {
    CHECK(to_hex(std::string("\x00\x0a\xff", 3)) == "000aff");
}
