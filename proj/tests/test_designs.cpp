#include "dsrg/designs.hpp"
#include "dsrg/error.hpp"

#include <doctest.h>

#include <functional>
#include <set>

using namespace dsrg;

namespace {

// Brute force: count partitions of {0..m-1} into cells of size l by always
// completing the cell of the least unused point.
std::uint64_t count_partitions_brute(int m, int l) {
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    std::function<std::uint64_t()> rec = [&]() -> std::uint64_t {
        int first = -1;
        for (int i = 0; i < m; ++i)
            if (!used[static_cast<std::size_t>(i)]) {
                first = i;
                break;
            }
        if (first < 0) return 1;
        used[static_cast<std::size_t>(first)] = 1;
        std::uint64_t total = 0;
        std::vector<int> chosen;
        std::function<void(int)> pick = [&](int from) {
            if (static_cast<int>(chosen.size()) == l - 1) {
                total += rec();
                return;
            }
            for (int i = from; i < m; ++i)
                if (!used[static_cast<std::size_t>(i)]) {
                    used[static_cast<std::size_t>(i)] = 1;
                    chosen.push_back(i);
                    pick(i + 1);
                    chosen.pop_back();
                    used[static_cast<std::size_t>(i)] = 0;
                }
        };
        pick(first + 1);
        used[static_cast<std::size_t>(first)] = 0;
        return total;
    };
    return rec();
}

}  // namespace

TEST_CASE("set partitions into equal cells") {
    CHECK(partition_count(3, 2) == 15);
    CHECK(set_partitions(3, 2).size() == 15);
    CHECK(partition_count(2, 3) == 10);
    for (int s = 1; s <= 4; ++s)
        for (int l = 1; l <= 3; ++l) {
            const auto parts = set_partitions(s, l);
            CHECK(parts.size() == partition_count(s, l));
            CHECK(parts.size() == count_partitions_brute(s * l, l));
            std::set<std::vector<Block>> distinct(parts.begin(), parts.end());
            CHECK(distinct.size() == parts.size());
        }
}

TEST_CASE("tactical configurations") {
    const auto cyc = cyclic_block_family(5, 2);
    const auto rep = validate_tactical_config(cyc);
    REQUIRE(rep.ok);
    CHECK(*rep.params == DesignParams{5, 5, 2, 2});
    CHECK_THROWS_AS(cyclic_block_family(3, 4), ParameterError);

    TacticalConfig bad{3, {{0, 1}, {0, 2}}};
    const auto r2 = validate_tactical_config(bad);
    CHECK_FALSE(r2.ok);
    REQUIRE(r2.violations.size() == 1);
    CHECK(r2.violations.front() == "replication not constant: points 1,2 in 1 block; point 0 in 2 blocks");

    TacticalConfig unsorted{3, {{1, 0}, {2, 1}}};
    CHECK_FALSE(validate_tactical_config(unsorted).ok);
}

TEST_CASE("pointwise families") {
    const auto fam = chunked_pointwise_family(7, 3, 4, 2);
    const auto rep = validate_pointwise_family(fam);
    REQUIRE(rep.ok);
    CHECK(*rep.params == PointwiseParams{3, 4, 2});
    CHECK(fam.vertex_count() == 21);
    CHECK_THROWS_AS(chunked_pointwise_family(7, 3, 4, 1), ParameterError);  // d(n-1) != ls
    CHECK_THROWS_AS(chunked_pointwise_family(5, 1, 4, 1), ParameterError);  // l > n-2

    PointwiseFamily owner_inside = fam;
    owner_inside.owner_blocks[0][0] = {0, 1, 2, 3};
    const auto bad = validate_pointwise_family(owner_inside);
    CHECK_FALSE(bad.ok);
    CHECK(bad.violations.front().find("contains its owner 0") != std::string::npos);
}

TEST_CASE("partition space indexing") {
    const auto space = enumerate_pointwise_partitions(5, 2, 2);
    CHECK(space.partitions_per_point() == 3);
    CHECK(space.size() == 243);
    std::set<std::vector<std::vector<Block>>> seen;
    for (std::uint64_t i = 0; i < space.size(); ++i) {
        const auto f = space.at(i);
        CHECK(validate_pointwise_family(f).ok);
        seen.insert(f.owner_blocks);
    }
    CHECK(seen.size() == 243);
    CHECK(space.at(0).owner_blocks == space.from_choices({0, 0, 0, 0, 0}).owner_blocks);
    CHECK(space.at(1).owner_blocks == space.from_choices({0, 0, 0, 0, 1}).owner_blocks);
    CHECK_THROWS_AS(space.at(243), ParameterError);
    CHECK_THROWS_AS(PointwisePartitionSpace(6, 2, 2), ParameterError);
}

TEST_CASE("projective planes") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    for (int p : {2, 3, 5}) {
        const auto lines = projective_plane_lines(p);
        const int n = p * p + p + 1;
        CHECK(static_cast<int>(lines.size()) == n);
        // Any two points lie on exactly one common line.
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                int common = 0;
                for (const auto& line : lines)
                    common += std::count(line.begin(), line.end(), x) && std::count(line.begin(), line.end(), y);
                CHECK(common == 1);
            }
        const auto fam = projective_plane_family(p);
        const auto rep = validate_pointwise_family(fam);
        REQUIRE(rep.ok);
        CHECK(*rep.params == PointwiseParams{p + 1, p, 1});
    }
    CHECK_THROWS_AS(projective_plane_family(4), ParameterError);
}

TEST_CASE("grouped design hypotheses") {
    // Built in construct1; here only the failure reporting.
    GroupedDesign d;
    d.r = 2;
    d.q = 4;
    d.a = 2;
    d.b = 2;
    const auto v = grouped_design_violations(d);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().find("q - 1 = ab") != std::string::npos);
}
