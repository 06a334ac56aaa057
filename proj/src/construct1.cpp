#include "dsrg/construct1.hpp"

#include "dsrg/construct2.hpp"
#include "dsrg/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace dsrg {

namespace {

void require_basic(int r, int q) {
    if (r < 2 || q < 2)
        throw ParameterError("Construction I needs r >= 2 and q >= 2 (got r=" + std::to_string(r) +
                             ", q=" + std::to_string(q) + ")");
}

Block sorted_union(Block a, const Block& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

std::vector<std::vector<int>> permutations_of(int q) {
    std::vector<int> p(static_cast<std::size_t>(q));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

std::uint64_t factorial(int q) {
    std::uint64_t f = 1;
    for (int i = 2; i <= q; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

C1Result finish(PointwiseFamily family, std::vector<std::string> warnings = {}) {
    C1Result out;
    out.graph = antiflag_digraph(family);
    out.family = std::move(family);
    out.warnings = std::move(warnings);
    return out;
}

}  // namespace

GroupedDesign default_grouped_design(int r, int q, int a, int b) {
    require_basic(r, q);
    if (a < 1 || b < 1 || q - 1 != a * b)
        throw ParameterError("Construction I needs q - 1 = ab with a, b >= 1");
    GroupedDesign d;
    d.r = r;
    d.q = q;
    d.a = a;
    d.b = b;
    const TacticalConfig local = cyclic_block_family(q, a);
    for (int j = 0; j < r; ++j) {
        std::vector<int> grp(static_cast<std::size_t>(q));
        std::iota(grp.begin(), grp.end(), j * q);
        d.groups.push_back(grp);
        std::vector<Block> fam;
        for (const Block& blk : local.blocks) {
            Block shifted;
            for (int x : blk) shifted.push_back(j * q + x);
            fam.push_back(std::move(shifted));
        }
        d.group_blocks.push_back(std::move(fam));
    }
    for (int i = 0; i < q; ++i) {
        Block span;
        for (int j = 0; j < r; ++j) span = sorted_union(std::move(span), d.group_blocks[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
        d.spanning_blocks.push_back(std::move(span));
    }
    for (int j = 0; j < r; ++j)
        for (int x = 0; x < q; ++x) {
            std::vector<Block> cells;
            for (int c = 0; c < b; ++c) {
                Block cell;
                for (int k = 0; k < a; ++k) cell.push_back(j * q + (x + 1 + c * a + k) % q);
                std::sort(cell.begin(), cell.end());
                cells.push_back(std::move(cell));
            }
            d.x_partitions.push_back(std::move(cells));
        }
    return d;
}

PointwiseFamily grouped_design_family(const GroupedDesign& d) {
    const std::vector<std::string> problems = grouped_design_violations(d);
    if (!problems.empty()) throw ConstructionError("grouped design violates: " + problems.front());

    const int n = d.r * d.q;
    std::vector<int> group_of(static_cast<std::size_t>(n));
    for (int j = 0; j < d.r; ++j)
        for (int p : d.groups[static_cast<std::size_t>(j)]) group_of[static_cast<std::size_t>(p)] = j;

    PointwiseFamily fam{n, {}};
    for (int g = 0; g < n; ++g) {
        const int h = group_of[static_cast<std::size_t>(g)];
        std::vector<Block> blocks;
        for (const Block& x : d.x_partitions[static_cast<std::size_t>(g)])
            for (const Block& span : d.spanning_blocks) {
                // B_j minus its block from the home group.
                Block outside;
                for (int p : span)
                    if (group_of[static_cast<std::size_t>(p)] != h) outside.push_back(p);
                blocks.push_back(sorted_union(x, outside));
            }
        fam.owner_blocks.push_back(std::move(blocks));
    }
    return fam;
}

C1Result build_c1_general(const GroupedDesign& design) { return finish(grouped_design_family(design)); }

C1Result build_c1_general(int r, int q, int a, int b) {
    return build_c1_general(default_grouped_design(r, q, a, b));
}

std::uint64_t relaxed_choice_count(int r, int q) {
    require_basic(r, q);
    const std::uint64_t f = factorial(q);
    std::uint64_t total = 1;
    for (int i = 0; i < (r - 2) * r * q; ++i) {
        if (total > UINT64_MAX / f) throw ParameterError("relaxed choice space overflows 64 bits");
        total *= f;
    }
    return total;
}

std::vector<int> relaxed_choice_vector(int r, int q, std::uint64_t index) {
    if (index >= relaxed_choice_count(r, q)) throw ParameterError("relaxed choice index out of range");
    const std::uint64_t f = factorial(q);
    std::vector<int> out(static_cast<std::size_t>((r - 2) * r * q));
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<int>(index % f);
        index /= f;
    }
    return out;
}

C1Result build_c1_b1(int r, int q, Pairing pairing, std::span<const int> choices) {
    require_basic(r, q);
    const int n = r * q;
    const auto perms = permutations_of(q);
    const std::size_t per_point = static_cast<std::size_t>(r - 2);
    if (pairing == Pairing::relaxed) {
        if (choices.size() != per_point * static_cast<std::size_t>(n))
            throw ParameterError("relaxed pairing needs " + std::to_string(per_point * static_cast<std::size_t>(n)) +
                                 " choices, got " + std::to_string(choices.size()));
        for (int c : choices)
            if (c < 0 || static_cast<std::size_t>(c) >= perms.size())
                throw ParameterError("relaxed pairing choice " + std::to_string(c) + " out of range 0.." +
                                     std::to_string(perms.size() - 1));
    } else if (!choices.empty()) {
        throw ParameterError("strict pairing takes no choices");
    }

    // Subset i of group j: G_j minus its i-th point.
    auto subset = [q](int j, int i) {
        Block b;
        for (int x = 0; x < q; ++x)
            if (x != i) b.push_back(j * q + x);
        return b;
    };

    PointwiseFamily fam{n, {}};
    for (int g = 0; g < n; ++g) {
        const int h = g / q;
        Block home;
        for (int x = 0; x < q; ++x)
            if (h * q + x != g) home.push_back(h * q + x);
        std::vector<int> others;
        for (int j = 0; j < r; ++j)
            if (j != h) others.push_back(j);

        std::vector<Block> blocks;
        for (int slot = 0; slot < q; ++slot) {
            Block blk = home;
            for (std::size_t o = 0; o < others.size(); ++o) {
                int pick = slot;
                if (pairing == Pairing::relaxed && o > 0) {
                    const int c = choices[static_cast<std::size_t>(g) * per_point + (o - 1)];
                    pick = perms[static_cast<std::size_t>(c)][static_cast<std::size_t>(slot)];
                }
                blk = sorted_union(std::move(blk), subset(others[o], pick));
            }
            blocks.push_back(std::move(blk));
        }
        fam.owner_blocks.push_back(std::move(blocks));
    }
    return finish(std::move(fam));
}

std::vector<int> default_pi(int r, int q) {
    require_basic(r, q);
    int w = 1;
    for (int i = 0; i < r - 2; ++i) w *= q;
    std::vector<int> pi(static_cast<std::size_t>(r * q));
    for (int i = 0; i < r * q; ++i) pi[static_cast<std::size_t>(i)] = i % w;
    return pi;
}

int a1_part_index(int q, std::span<const int> coordinates) {
    // Part c = (y_2 - y_1, ..., y_{r-1} - y_1) mod q, read as a base-q number.
    int index = 0;
    for (std::size_t k = 1; k < coordinates.size(); ++k)
        index = index * q + ((coordinates[k] - coordinates[0]) % q + q) % q;
    return index;
}

C1Result build_c1_a1(int r, int q, std::span<const int> pi) {
    require_basic(r, q);
    const int n = r * q;
    int w = 1;
    for (int i = 0; i < r - 2; ++i) w *= q;
    if (pi.size() != static_cast<std::size_t>(n))
        throw ParameterError("pi must assign a part to each of the " + std::to_string(n) + " points");
    for (int v : pi)
        if (v < 0 || v >= w)
            throw ParameterError("pi value " + std::to_string(v) + " out of range 0.." + std::to_string(w - 1));

    std::vector<std::string> warnings;
    if (std::set<int>(pi.begin(), pi.end()).size() != pi.size())
        warnings.push_back("pi is not injective (rq = " + std::to_string(n) + ", q^(r-2) = " + std::to_string(w) +
                           "); parameters are taken from the verifier");

    // parts[i][c]: blocks through point i whose coordinates lie on diagonal c.
    std::vector<std::vector<std::vector<Block>>> parts(static_cast<std::size_t>(n),
                                                       std::vector<std::vector<Block>>(static_cast<std::size_t>(w)));
    int tuples = 1;
    for (int k = 0; k < r - 1; ++k) tuples *= q;
    std::vector<int> coord(static_cast<std::size_t>(r - 1));
    for (int i = 0; i < n; ++i) {
        const int h = i / q;
        for (int t = 0; t < tuples; ++t) {
            int rest = t;
            for (int k = r - 2; k >= 0; --k) {
                coord[static_cast<std::size_t>(k)] = rest % q;
                rest /= q;
            }
            Block blk{i};
            int k = 0;
            for (int j = 0; j < r; ++j)
                if (j != h) blk.push_back(j * q + coord[static_cast<std::size_t>(k++)]);
            std::sort(blk.begin(), blk.end());
            parts[static_cast<std::size_t>(i)][static_cast<std::size_t>(a1_part_index(q, coord))].push_back(std::move(blk));
        }
    }

    PointwiseFamily fam{n, {}};
    for (int g = 0; g < n; ++g) {
        const int h = g / q;
        std::vector<Block> owned;
        for (int x = 0; x < q; ++x) {
            const int i = h * q + x;
            if (i == g) continue;
            const auto& part = parts[static_cast<std::size_t>(i)][static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])];
            owned.insert(owned.end(), part.begin(), part.end());
        }
        fam.owner_blocks.push_back(std::move(owned));
    }
    return finish(std::move(fam), std::move(warnings));
}

C1Result build_c1_a1(int r, int q) {
    const std::vector<int> pi = default_pi(r, q);
    return build_c1_a1(r, q, pi);
}

DsrgParams expected_params_c1(C1Mode mode, int r, int q, int a, int b) {
    require_basic(r, q);
    const std::int64_t R = r, Q = q;
    switch (mode) {
        case C1Mode::general: {
            if (a < 1 || b < 1 || q - 1 != a * b) throw ParameterError("general mode needs q - 1 = ab");
            const std::int64_t A = a, B = b;
            return {R * Q * Q * B, R * Q * (Q - 1), R * (Q - 1) * A + A, Q * (A - 1) + (R - 1) * (Q - 1) * A,
                    R * (Q - 1) * A + A};
        }
        case C1Mode::b1:
            return {R * Q * Q, R * Q * (Q - 1), (Q - 1) * (R * Q - R + 1), R * (Q - 1) * (Q - 1) - 1,
                    (Q - 1) * (R * Q - R + 1)};
        case C1Mode::a1:
            return {R * Q * Q * (Q - 1), R * Q * (Q - 1), R * Q - R + 1, R * Q - R - Q + 1, R * Q - R + 1};
    }
    throw ParameterError("unknown Construction I mode");
}

}  // namespace dsrg
