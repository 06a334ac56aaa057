#include "dsrg/error.hpp"
#include "dsrg/perm_group.hpp"

#include <doctest.h>

#include <set>

using namespace dsrg;

namespace {

Permutation cycle(std::size_t n) {
    std::vector<int> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<int>((i + 1) % n);
    return Permutation(img);
}

Permutation reflection(std::size_t n) {
    std::vector<int> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<int>((n - i) % n);
    return Permutation(img);
}

Permutation swap01(std::size_t n) {
    std::vector<int> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<int>(i);
    std::swap(img[0], img[1]);
    return Permutation(img);
}

// Closure by repeated multiplication; an oracle for the group order.
std::set<Permutation> closure(std::size_t n, const std::vector<Permutation>& gens) {
    std::set<Permutation> seen{Permutation::identity(n)};
    std::vector<Permutation> frontier{Permutation::identity(n)};
    while (!frontier.empty()) {
        const Permutation x = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            const Permutation y = then(x, g);
            if (seen.insert(y).second) frontier.push_back(y);
        }
    }
    return seen;
}

}  // namespace

TEST_CASE("permutation basics") {
    const Permutation p({1, 2, 0, 4, 3});
    CHECK(p.order() == 6);
    CHECK(p.cycle_string() == "(0 1 2)(3 4)");
    CHECK(then(p, p.inverse()).is_identity());
    CHECK(Permutation::identity(3).cycle_string() == "()");
    CHECK(then(Permutation({1, 0, 2}), Permutation({0, 2, 1}))(0) == 2);
    CHECK_THROWS_AS(Permutation({0, 0, 1}), ParameterError);
}

TEST_CASE("Schreier-Sims orders") {
    std::uint64_t fact = 1;
    for (std::size_t n = 2; n <= 9; ++n) {
        fact *= n;
        const PermGroup sym(n, {cycle(n), swap01(n)});
        CHECK(sym.order() == fact);
        CHECK(sym.is_transitive());
        CHECK(PermGroup(n, {cycle(n)}).order() == n);
    }
    // S_30 has a 33-digit order.
    BigCount f30 = 1;
    for (int i = 2; i <= 30; ++i) f30 *= i;
    CHECK(PermGroup(30, {cycle(30), swap01(30)}).order() == f30);

    for (std::size_t n = 3; n <= 8; ++n) {
        const std::vector<Permutation> gens{cycle(n), reflection(n)};
        const PermGroup d(n, gens);
        CHECK(d.order() == 2 * n);
        CHECK(closure(n, gens).size() == 2 * n);
    }
}

TEST_CASE("membership, orbits and elements") {
    const PermGroup g(6, {Permutation({1, 0, 2, 3, 4, 5}), Permutation({0, 1, 3, 4, 2, 5})});
    CHECK(g.order() == 6);
    CHECK(g.orbits() == std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}, {5}});
    CHECK_FALSE(g.is_transitive());
    CHECK(g.is_abelian());
    CHECK(g.contains(Permutation({1, 0, 4, 2, 3, 5})));
    CHECK_FALSE(g.contains(Permutation({0, 1, 3, 2, 4, 5})));
    const auto els = g.elements();
    CHECK(els.size() == 6);
    CHECK(els.front().is_identity());
    CHECK(std::set<Permutation>(els.begin(), els.end()) == closure(6, g.generators()));
    CHECK_THROWS_AS(PermGroup(8, {cycle(8), swap01(8)}).elements(1000), ParameterError);
}

TEST_CASE("groups from element lists") {
    const auto els = PermGroup(5, {cycle(5), reflection(5)}).elements();
    const auto g = group_from_elements(5, els);
    CHECK(g.order() == 10);
    CHECK(g.generators().size() <= 3);
}

TEST_CASE("small groups by name") {
    CHECK(recognize_group(PermGroup(4, {})) == "C1");
    CHECK(recognize_group(PermGroup(5, {cycle(5)})) == "C5");
    CHECK(recognize_group(PermGroup(4, {Permutation({1, 0, 3, 2}), Permutation({2, 3, 0, 1})})) == "C2×C2");
    CHECK(recognize_group(PermGroup(6, {Permutation({1, 0, 2, 3, 4, 5}), Permutation({0, 1, 3, 4, 5, 2})})) == "C2×C4");
    CHECK(recognize_group(PermGroup(6, {Permutation({1, 0, 2, 3, 4, 5}), Permutation({0, 1, 3, 4, 2, 5})})) == "C6");
    CHECK(recognize_group(PermGroup(4, {cycle(4), reflection(4)})) == "D8");
    CHECK(recognize_group(PermGroup(5, {cycle(5), reflection(5)})) == "D10");
    CHECK(recognize_group(PermGroup(6, {cycle(6), reflection(6)})) == "D12");
    CHECK(recognize_group(PermGroup(3, {cycle(3), swap01(3)})) == "D6");
    CHECK(recognize_group(PermGroup(4, {cycle(4), swap01(4)})) == "S4");
    CHECK(recognize_group(PermGroup(4, {Permutation({1, 2, 0, 3}), Permutation({0, 2, 3, 1})})) == "A4");
    // x -> 2x + 1 and x -> x + 1 on Z_5.
    CHECK(recognize_group(PermGroup(5, {cycle(5), Permutation({0, 2, 4, 1, 3})})) == "C5⋊C4");
    // Q8 in its regular action: i = (0 1 2 3)(4 5 6 7), j = (0 4 2 6)(1 7 3 5).
    const PermGroup q8(8, {Permutation({1, 2, 3, 0, 5, 6, 7, 4}), Permutation({4, 7, 6, 5, 2, 1, 0, 3})});
    CHECK(q8.order() == 8);
    CHECK(recognize_group(q8) == "Q8");
    CHECK(recognize_group(PermGroup(5, {cycle(5), swap01(5)})) == "order-120 unrecognized");
    CHECK(element_order_counts(q8) == std::map<std::uint64_t, std::size_t>{{1, 1}, {2, 1}, {4, 6}});
}
