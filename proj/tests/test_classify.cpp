#include "dsrg/classify.hpp"
#include "dsrg/construct2.hpp"
#include "dsrg/error.hpp"
#include "dsrg/fixtures.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace dsrg;

TEST_CASE("relabelings fall into one class") {
    std::mt19937_64 rng(4);
    const auto g = load_fixture("T2");
    std::vector<Digraph> graphs;
    for (int i = 0; i < 5; ++i) graphs.push_back(g.permuted(test_support::random_permutation(g.size(), rng)));
    const auto rep = classify_family(graphs);
    CHECK(rep.input_count == 5);
    REQUIRE(rep.classes.size() == 1);
    CHECK(rep.classes[0].size() == 5);
    CHECK(rep.classes[0].members == std::vector<std::size_t>{0, 1, 2, 3, 4});
    REQUIRE(rep.classes[0].aut.has_value());
    CHECK(rep.classes[0].aut->order == automorphism_group(g).order());
}

TEST_CASE("published matrices classify separately, transposes included") {
    std::vector<Digraph> graphs;
    for (int i = 1; i <= 7; ++i) graphs.push_back(load_fixture("T" + std::to_string(i)));
    graphs.push_back(transpose(graphs[6]));
    const auto rep = classify_family(graphs, {.automorphisms = false, .jobs = 2});
    CHECK(rep.classes.size() == 7);
    CHECK(rep.transpose_closure == 13);
    CHECK(rep.classes[6].self_transpose);
    CHECK(rep.classes[6].members == std::vector<std::size_t>{6, 7});
    CHECK_FALSE(rep.classes[0].aut.has_value());
}

TEST_CASE("parallel certificates match serial ones") {
    std::vector<Digraph> graphs;
    for (const auto& name : fixture_names()) graphs.push_back(load_fixture(name));
    CHECK(certificates(graphs, 1) == certificates(graphs, 4));
}

TEST_CASE("point relabeling orbits of the (5,2,2) space") {
    const auto space = enumerate_pointwise_partitions(5, 2, 2);
    std::vector<PointwiseFamily> families;
    for (std::uint64_t i = 0; i < space.size(); ++i) families.push_back(space.at(i));
    const auto orbits = orbits_under_point_relabeling(families, 5);
    std::size_t covered = 0;
    std::set<std::size_t> all;
    for (const auto& o : orbits) {
        CHECK(o.orbit_size * o.stabilizer.order() == 120);
        CHECK(o.members.size() == o.orbit_size);  // the space is closed under relabeling
        covered += o.members.size();
        all.insert(o.members.begin(), o.members.end());
        CHECK(o.stabilizer_name == recognize_group(o.stabilizer));
        // Every stabilizer element fixes the representative.
        const auto key = family_key(families[o.representative]);
        for (const auto& s : o.stabilizer.elements()) CHECK(family_key(relabel_points(families[o.representative], s)) == key);
        // Graphs in one orbit are isomorphic.
        const auto cert = canonical_form(build_d1(families[o.representative])).certificate;
        for (std::size_t m : o.members) CHECK(canonical_form(build_d1(families[m])).certificate == cert);
    }
    CHECK(covered == 243);
    CHECK(all.size() == 243);
    CHECK(orbits.size() == 7);

    std::vector<PointwiseFamily> nine{chunked_pointwise_family(9, 2, 4, 1)};
    CHECK_THROWS_AS(orbits_under_point_relabeling(nine, 9), ParameterError);
}

TEST_CASE("relabel_points composes") {
    const auto fam = chunked_pointwise_family(5, 2, 2, 1);
    const Permutation a({1, 2, 0, 3, 4}), b({0, 1, 3, 4, 2});
    CHECK(family_key(relabel_points(relabel_points(fam, a), b)) == family_key(relabel_points(fam, then(a, b))));
    CHECK(validate_pointwise_family(relabel_points(fam, a)).ok);
}

TEST_CASE("sampling") {
    std::mt19937_64 rng(1);
    std::map<std::uint64_t, int> hist;
    for (int i = 0; i < 6000; ++i) ++hist[uniform_below(rng, 3)];
    CHECK(hist.size() == 3);
    for (const auto& [v, c] : hist) CHECK(c > 1800);

    const auto space = enumerate_pointwise_partitions(7, 3, 2);
    const auto a = sample_classes(space, Variant::d1, 300, 11, 1);
    const auto b = sample_classes(space, Variant::d1, 300, 11, 3);
    CHECK(a.samples == 300);
    CHECK(a.verified == 300);
    CHECK(a.distinct == b.distinct);
    CHECK(a.params == expected_params_c2(7, 3, 2, 1, Variant::d1));

    std::mt19937_64 r2(2);
    const auto fam = random_partition_family(13, 3, 4, r2);
    CHECK(validate_pointwise_family(fam).ok);
    CHECK_THROWS_AS(random_partition_family(13, 3, 3, r2), ParameterError);
}

TEST_CASE("automorphism summaries") {
    const auto s = summarize_automorphisms(load_fixture("T4"));
    CHECK(s.order == 20);
    CHECK(s.name == "C5⋊C4");
    CHECK(s.transitive);
    CHECK(summarize_automorphisms(test_support::directed_cycle(7)).name == "C7");
}
