#pragma once

#include "dsrg/graphs.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace test_support {

// Independent oracle: A^2 by triple loop over a plain int matrix.
inline std::optional<dsrg::DsrgParams> naive_dsrg(const dsrg::Digraph& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<int>> a(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = g.adjacent(i, j) ? 1 : 0;
    std::int64_t k = -1;
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t out = 0, in = 0;
        for (std::size_t j = 0; j < n; ++j) {
            out += a[i][j];
            in += a[j][i];
        }
        if (out != in || (k != -1 && out != k)) return std::nullopt;
        k = out;
    }
    std::optional<std::int64_t> t, lambda, mu;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t sq = 0;
            for (std::size_t z = 0; z < n; ++z) sq += a[i][z] * a[z][j];
            auto& slot = i == j ? t : (a[i][j] ? lambda : mu);
            if (slot && *slot != sq) return std::nullopt;
            slot = sq;
        }
    if (!t || !lambda || k <= 0) return std::nullopt;
    return dsrg::DsrgParams{static_cast<std::int64_t>(n), k, *t, *lambda, mu ? *mu : *lambda};
}

inline std::vector<int> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline dsrg::Digraph from_rows(const std::vector<const char*>& rows) {
    dsrg::Digraph g(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (rows[i][j] == '1') g.set_arc(i, j);
    return g;
}

inline dsrg::Digraph directed_cycle(std::size_t n) {
    dsrg::Digraph g(n);
    for (std::size_t i = 0; i < n; ++i) g.set_arc(i, (i + 1) % n);
    return g;
}

// Kneser graph K(5,2): 2-subsets of a 5-set, adjacent when disjoint.
inline dsrg::Digraph kneser_5_2() {
    std::vector<std::pair<int, int>> v;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) v.emplace_back(a, b);
    dsrg::Digraph g(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[i].first != v[j].first && v[i].first != v[j].second && v[i].second != v[j].first &&
                v[i].second != v[j].second)
                g.set_arc(i, j);
    return g;
}

}  // namespace test_support
