#include "dsrg/schemes.hpp"

#include "dsrg/canon.hpp"
#include "dsrg/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace dsrg {

struct SchemeBuilder {
    static SchemeCheck build(std::size_t n, std::vector<int> relation);
};

bool AssociationScheme::is_symmetric() const noexcept {
    for (int i = 0; i <= classes_; ++i)
        if (transpose_of(i) != i) return false;
    return true;
}

std::string to_string(const SchemeViolation& v) {
    std::ostringstream os;
    os << v.reason;
    if (v.k || v.i || v.j) os << " (i=" << v.i << ", j=" << v.j << ", k=" << v.k << ")";
    os << " at pair (" << v.x << ", " << v.y << ")";
    return os.str();
}

SchemeCheck SchemeBuilder::build(std::size_t n, std::vector<int> relation) {
    if (relation.size() != n * n) throw ParameterError("scheme: relation matrix is not n x n");
    SchemeCheck out;
    auto fail = [&](std::string reason, std::size_t x, std::size_t y, int i = 0, int j = 0, int k = 0) {
        out.violation = SchemeViolation{std::move(reason), i, j, k, x, y};
        return out;
    };
    if (n == 0) return fail("empty vertex set", 0, 0);

    int c = 0;
    for (int v : relation) {
        if (v < 0) throw ParameterError("scheme: negative class index");
        c = std::max(c, v);
    }
    const auto c1 = static_cast<std::size_t>(c + 1);
    auto rel = [&](std::size_t x, std::size_t y) { return relation[x * n + y]; };

    std::vector<std::pair<std::size_t, std::size_t>> first(c1, {n, n});
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const int r = rel(x, y);
            if ((r == 0) != (x == y)) return fail("class 0 is not exactly the diagonal", x, y);
            auto& f = first[static_cast<std::size_t>(r)];
            if (f.first == n) f = {x, y};
        }
    for (std::size_t k = 0; k < c1; ++k)
        if (first[k].first == n) return fail("class " + std::to_string(k) + " is empty", 0, 0);

    std::vector<int> transpose(c1);
    for (std::size_t k = 0; k < c1; ++k) transpose[k] = rel(first[k].second, first[k].first);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (rel(y, x) != transpose[static_cast<std::size_t>(rel(x, y))])
                return fail("transpose of class " + std::to_string(rel(x, y)) + " is not a class", x, y);

    std::vector<std::int64_t> p(c1 * c1 * c1, 0);
    std::vector<std::int64_t> counts(c1 * c1);
    auto count_at = [&](std::size_t x, std::size_t y) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t z = 0; z < n; ++z)
            ++counts[static_cast<std::size_t>(rel(x, z)) * c1 + static_cast<std::size_t>(rel(z, y))];
    };
    for (std::size_t k = 0; k < c1; ++k) {
        count_at(first[k].first, first[k].second);
        std::copy(counts.begin(), counts.end(), p.begin() + static_cast<std::ptrdiff_t>(k * c1 * c1));
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const auto k = static_cast<std::size_t>(rel(x, y));
            count_at(x, y);
            for (std::size_t ij = 0; ij < c1 * c1; ++ij)
                if (counts[ij] != p[k * c1 * c1 + ij])
                    return fail("intersection number not constant", x, y, static_cast<int>(ij / c1),
                                static_cast<int>(ij % c1), static_cast<int>(k));
        }

    AssociationScheme s;
    s.n_ = n;
    s.classes_ = c;
    s.relation_ = std::move(relation);
    s.p_ = std::move(p);
    s.transpose_ = std::move(transpose);
    s.valency_.resize(c1);
    for (std::size_t i = 0; i < c1; ++i) s.valency_[i] = s.intersection(static_cast<int>(i), s.transpose_[i], 0);
    for (int k = 0; k <= c && s.commutative_; ++k)
        for (int i = 0; i <= c && s.commutative_; ++i)
            for (int j = 0; j < i; ++j)
                if (s.intersection(i, j, k) != s.intersection(j, i, k)) {
                    s.commutative_ = false;
                    break;
                }
    out.scheme = std::move(s);
    return out;
}

SchemeCheck make_scheme(std::size_t n, std::vector<int> relation) { return SchemeBuilder::build(n, std::move(relation)); }

AssociationScheme orbital_scheme(const PermGroup& group, bool require_transitive) {
    const std::size_t n = group.degree();
    if (require_transitive && !group.is_transitive()) {
        std::ostringstream os;
        os << "orbital_scheme: group is not transitive; orbits";
        for (const auto& orbit : group.orbits()) {
            os << " {";
            for (std::size_t i = 0; i < orbit.size(); ++i) os << (i ? "," : "") << orbit[i];
            os << '}';
        }
        throw StructuralError(os.str());
    }

    std::vector<std::size_t> parent(n * n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& g : group.generators())
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const std::size_t a = find(x * n + y);
                const std::size_t b = find(static_cast<std::size_t>(g(static_cast<int>(x))) * n +
                                           static_cast<std::size_t>(g(static_cast<int>(y))));
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }

    // Collect orbitals; the diagonal may split into several when intransitive.
    std::map<std::size_t, std::vector<std::size_t>> orbitals;
    for (std::size_t e = 0; e < n * n; ++e) orbitals[find(e)].push_back(e);

    struct Entry {
        bool diagonal;
        std::size_t size;
        std::string cert;
        std::size_t first;
        const std::vector<std::size_t>* pairs;
    };
    std::vector<Entry> entries;
    for (const auto& [root, pairs] : orbitals) {
        const bool diagonal = pairs.front() / n == pairs.front() % n;
        Digraph g(n);
        if (!diagonal)
            for (std::size_t e : pairs) g.set_arc(e / n, e % n);
        entries.push_back({diagonal, pairs.size(), diagonal ? std::string() : canonical_form(g).certificate, pairs.front(), &pairs});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.diagonal != b.diagonal) return a.diagonal;
        return std::tie(a.size, a.cert, a.first) < std::tie(b.size, b.cert, b.first);
    });

    std::vector<int> relation(n * n, 0);
    int next = 0;
    for (const auto& e : entries) {
        if (e.diagonal) continue;
        ++next;
        for (std::size_t p : *e.pairs) relation[p] = next;
    }
    auto check = make_scheme(n, std::move(relation));
    if (!check) throw StructuralError("orbital_scheme: " + to_string(*check.violation));
    return std::move(*check.scheme);
}

SchemeCheck fuse(const AssociationScheme& scheme, const std::vector<std::vector<int>>& grouping) {
    const int c = scheme.classes();
    std::vector<int> target(static_cast<std::size_t>(c) + 1, -1);
    target[0] = 0;
    for (std::size_t g = 0; g < grouping.size(); ++g) {
        if (grouping[g].empty()) throw ParameterError("fuse: empty group");
        for (int i : grouping[g]) {
            if (i < 1 || i > c) throw ParameterError("fuse: class " + std::to_string(i) + " out of range");
            if (target[static_cast<std::size_t>(i)] != -1)
                throw ParameterError("fuse: class " + std::to_string(i) + " appears twice");
            target[static_cast<std::size_t>(i)] = static_cast<int>(g) + 1;
        }
    }
    for (int i = 1; i <= c; ++i)
        if (target[static_cast<std::size_t>(i)] == -1) throw ParameterError("fuse: class " + std::to_string(i) + " not covered");
    std::vector<int> relation(scheme.relation_matrix().size());
    std::transform(scheme.relation_matrix().begin(), scheme.relation_matrix().end(), relation.begin(),
                   [&](int r) { return target[static_cast<std::size_t>(r)]; });
    return make_scheme(scheme.size(), std::move(relation));
}

std::vector<std::vector<std::vector<int>>> all_fusions(const AssociationScheme& scheme) {
    const int c = scheme.classes();
    std::vector<std::vector<std::vector<int>>> feasible;
    // Restricted growth strings over classes 1..c.
    std::vector<std::vector<int>> current;
    std::function<void(int)> rec = [&](int i) {
        if (i > c) {
            if (current.size() >= 2 && static_cast<int>(current.size()) < c && fuse(scheme, current)) feasible.push_back(current);
            return;
        }
        for (std::size_t g = 0; g < current.size(); ++g) {
            current[g].push_back(i);
            rec(i + 1);
            current[g].pop_back();
        }
        current.push_back({i});
        rec(i + 1);
        current.pop_back();
    };
    rec(1);
    std::stable_sort(feasible.begin(), feasible.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return feasible;
}

Decomposition relation_decomposition(const AssociationScheme& scheme, const Digraph& g) {
    if (g.size() != scheme.size()) throw ParameterError("relation_decomposition: vertex counts differ");
    const std::size_t n = g.size();
    const auto c1 = static_cast<std::size_t>(scheme.classes() + 1);
    // Per class: -1 unseen, else the arc value of its first pair, plus that pair.
    std::vector<int> value(c1, -1);
    std::vector<std::pair<std::size_t, std::size_t>> seen(c1);
    Decomposition d;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const auto k = static_cast<std::size_t>(scheme.relation(x, y));
            const int arc = g.adjacent(x, y) ? 1 : 0;
            if (value[k] == -1) {
                value[k] = arc;
                seen[k] = {x, y};
            } else if (value[k] != arc) {
                std::ostringstream os;
                os << "not a union of classes: class " << k << " contains (" << seen[k].first << ", " << seen[k].second << ") "
                   << (value[k] ? "as an arc" : "as a non-arc") << " and (" << x << ", " << y << ") "
                   << (arc ? "as an arc" : "as a non-arc");
                d.witness = os.str();
                return d;
            }
        }
    d.classes.emplace();
    for (std::size_t k = 0; k < c1; ++k)
        if (value[k] == 1) d.classes->insert(static_cast<int>(k));
    return d;
}

Digraph relation_graph(const AssociationScheme& scheme, const std::set<int>& classes) {
    Digraph g(scheme.size());
    for (std::size_t x = 0; x < scheme.size(); ++x)
        for (std::size_t y = 0; y < scheme.size(); ++y)
            if (classes.count(scheme.relation(x, y))) g.set_arc(x, y);
    return g;
}

std::optional<SchemeIsomorphism> find_scheme_isomorphism(const AssociationScheme& a, const AssociationScheme& b) {
    const std::size_t n = a.size();
    const int c = a.classes();
    if (b.size() != n || b.classes() != c) return std::nullopt;
    {
        std::vector<std::int64_t> va, vb;
        for (int i = 0; i <= c; ++i) {
            va.push_back(a.valency(i));
            vb.push_back(b.valency(i));
        }
        std::sort(va.begin(), va.end());
        std::sort(vb.begin(), vb.end());
        if (va != vb) return std::nullopt;
    }

    std::vector<int> vmap(n, -1), used(n, 0);
    std::vector<int> cmap(static_cast<std::size_t>(c) + 1, -1), cinv(static_cast<std::size_t>(c) + 1, -1);
    cmap[0] = cinv[0] = 0;
    std::vector<std::pair<int, int>> undo;  // class bindings made at each step

    auto bind = [&](int ca, int cb, std::size_t& added) {
        auto& f = cmap[static_cast<std::size_t>(ca)];
        auto& r = cinv[static_cast<std::size_t>(cb)];
        if (f == -1 && r == -1) {
            f = cb;
            r = ca;
            undo.emplace_back(ca, cb);
            ++added;
            return true;
        }
        return f == cb && r == ca;
    };

    std::function<bool(std::size_t)> rec = [&](std::size_t v) {
        if (v == n) return true;
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w]) continue;
            if (a.valency(a.relation(v, v)) != b.valency(b.relation(w, w))) continue;
            std::size_t added = 0;
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u) {
                const auto pu = static_cast<std::size_t>(vmap[u]);
                ok = bind(a.relation(u, v), b.relation(pu, w), added) && bind(a.relation(v, u), b.relation(w, pu), added);
            }
            if (ok) {
                vmap[v] = static_cast<int>(w);
                used[w] = 1;
                if (rec(v + 1)) return true;
                used[w] = 0;
                vmap[v] = -1;
            }
            for (; added > 0; --added) {
                auto [ca, cb] = undo.back();
                undo.pop_back();
                cmap[static_cast<std::size_t>(ca)] = -1;
                cinv[static_cast<std::size_t>(cb)] = -1;
            }
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return SchemeIsomorphism{std::move(vmap), std::move(cmap)};
}

}  // namespace dsrg
