#include "dsrg/perm_group.hpp"

#include "dsrg/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace dsrg {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
        if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)])
            throw ParameterError("permutation: image list is not a bijection");
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    Permutation p;
    p.images_ = std::move(id);
    return p;
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i)) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return inv;
}

std::uint64_t Permutation::order() const {
    std::uint64_t result = 1;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
            seen[j] = 1;
            ++len;
        }
        result = std::lcm(result, len);
    }
    return result;
}

std::string Permutation::cycle_string() const {
    std::ostringstream os;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == static_cast<int>(i)) continue;
        os << '(';
        bool first = true;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
            seen[j] = 1;
            if (!first) os << ' ';
            os << j;
            first = false;
        }
        os << ')';
    }
    const std::string s = os.str();
    return s.empty() ? "()" : s;
}

Permutation then(const Permutation& first, const Permutation& second) {
    std::vector<int> img(first.degree());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = second(first(static_cast<int>(i)));
    return Permutation(std::move(img));
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators) : degree_(degree) {
    for (auto& g : generators) {
        if (g.degree() != degree) throw ParameterError("PermGroup: generator degree mismatch");
        if (!g.is_identity() && std::find(generators_.begin(), generators_.end(), g) == generators_.end())
            generators_.push_back(std::move(g));
    }
    schreier_sims();
}

void PermGroup::rebuild_orbit(Level& level) const {
    level.transversal.assign(degree_, std::nullopt);
    level.orbit.clear();
    level.transversal[static_cast<std::size_t>(level.base_point)] = Permutation::identity(degree_);
    level.orbit.push_back(level.base_point);
    for (std::size_t head = 0; head < level.orbit.size(); ++head) {
        const int x = level.orbit[head];
        for (const auto& s : level.strong) {
            const int y = s(x);
            if (level.transversal[static_cast<std::size_t>(y)]) continue;
            level.transversal[static_cast<std::size_t>(y)] = then(*level.transversal[static_cast<std::size_t>(x)], s);
            level.orbit.push_back(y);
        }
    }
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation p, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
        const int beta = p(levels_[l].base_point);
        const auto& u = levels_[l].transversal[static_cast<std::size_t>(beta)];
        if (!u) return {std::move(p), l};
        p = then(p, u->inverse());
    }
    return {std::move(p), levels_.size()};
}

void PermGroup::schreier_sims() {
    base_.clear();
    levels_.clear();
    order_ = 1;
    if (generators_.empty()) return;

    auto moved_point = [](const Permutation& p) {
        for (std::size_t i = 0; i < p.degree(); ++i)
            if (p(static_cast<int>(i)) != static_cast<int>(i)) return static_cast<int>(i);
        return -1;
    };
    auto fixes_base_prefix = [&](const Permutation& p, std::size_t upto) {
        for (std::size_t i = 0; i < upto; ++i)
            if (p(base_[i]) != base_[i]) return false;
        return true;
    };

    std::vector<Permutation> strong = generators_;
    for (const auto& g : strong)
        if (fixes_base_prefix(g, base_.size())) base_.push_back(moved_point(g));

    auto rebuild_level = [&](std::size_t i) {
        Level& lv = levels_[i];
        lv.base_point = base_[i];
        lv.strong.clear();
        for (const auto& s : strong)
            if (fixes_base_prefix(s, i)) lv.strong.push_back(s);
        rebuild_orbit(lv);
    };

    levels_.resize(base_.size());
    for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_level(i);

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
        const std::size_t li = static_cast<std::size_t>(i);
        bool restarted = false;
        for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !restarted; ++oi) {
            const int beta = levels_[li].orbit[oi];
            const Permutation& u_beta = *levels_[li].transversal[static_cast<std::size_t>(beta)];
            for (std::size_t si = 0; si < levels_[li].strong.size(); ++si) {
                const Permutation& s = levels_[li].strong[si];
                const int image = s(beta);
                const Permutation h =
                    then(then(u_beta, s), levels_[li].transversal[static_cast<std::size_t>(image)]->inverse());
                if (h.is_identity()) continue;
                auto [residue, j] = strip(h, li + 1);
                if (j == levels_.size() && residue.is_identity()) continue;
                if (j == levels_.size()) {
                    base_.push_back(moved_point(residue));
                    levels_.emplace_back();
                }
                strong.push_back(residue);
                for (std::size_t l = li + 1; l <= j; ++l) rebuild_level(l);
                i = static_cast<std::ptrdiff_t>(j);
                restarted = true;
                break;
            }
        }
        if (!restarted) --i;
    }

    for (const auto& lv : levels_) order_ *= lv.orbit.size();
}

bool PermGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    auto [residue, j] = strip(p, 0);
    return j == levels_.size() && residue.is_identity();
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<int> parent(degree_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& g : generators_)
        for (std::size_t x = 0; x < degree_; ++x) {
            const int a = find(static_cast<int>(x));
            const int b = find(g(static_cast<int>(x)));
            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    std::vector<std::vector<int>> out;
    std::vector<int> slot(degree_, -1);
    for (std::size_t x = 0; x < degree_; ++x) {
        const int r = find(static_cast<int>(x));
        if (slot[static_cast<std::size_t>(r)] < 0) {
            slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(static_cast<int>(x));
    }
    return out;
}

bool PermGroup::is_transitive() const { return degree_ <= 1 || orbits().size() == 1; }

bool PermGroup::is_abelian() const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t j = i + 1; j < generators_.size(); ++j)
            if (then(generators_[i], generators_[j]) != then(generators_[j], generators_[i])) return false;
    return true;
}

std::vector<Permutation> PermGroup::elements(std::size_t limit) const {
    if (order_ > limit) throw ParameterError("PermGroup::elements: group order " + order_.str() + " exceeds limit");
    std::vector<Permutation> out{Permutation::identity(degree_)};
    // Every element factors uniquely as u_k ... u_1 u_0 (deepest level first).
    for (std::size_t l = levels_.size(); l-- > 0;) {
        std::vector<Permutation> next;
        next.reserve(out.size() * levels_[l].orbit.size());
        for (const auto& partial : out)
            for (int x : levels_[l].orbit) next.push_back(then(partial, *levels_[l].transversal[static_cast<std::size_t>(x)]));
        out = std::move(next);
    }
    std::sort(out.begin() + 1, out.end());
    return out;
}

PermGroup group_from_elements(std::size_t degree, std::span<const Permutation> elements) {
    PermGroup group(degree, {});
    std::vector<Permutation> gens;
    for (const auto& e : elements) {
        if (group.contains(e)) continue;
        gens.push_back(e);
        group = PermGroup(degree, gens);
    }
    return group;
}

std::map<std::uint64_t, std::size_t> element_order_counts(const PermGroup& group, std::size_t limit) {
    std::map<std::uint64_t, std::size_t> counts;
    for (const auto& e : group.elements(limit)) ++counts[e.order()];
    return counts;
}

namespace {

std::string abelian_name(const std::vector<Permutation>& elements) {
    const std::uint64_t n = elements.size();
    // Invariant factors from the counts of elements whose order divides d.
    std::map<std::uint64_t, std::vector<std::uint64_t>> primary;  // p -> exponents of p-parts
    std::uint64_t rest = n;
    for (std::uint64_t p = 2; rest > 1; ++p) {
        if (rest % p) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        // f(i) = log_p #{x : x^(p^i) = 1 within the p-part}
        std::vector<int> f(static_cast<std::size_t>(e) + 1, 0);
        std::uint64_t pi = 1;
        for (int i = 1; i <= e; ++i) {
            pi *= p;
            std::uint64_t count = 0;
            for (const auto& x : elements) {
                const std::uint64_t o = x.order();
                if (pi % o == 0) ++count;
            }
            int lg = 0;
            while (count > 1) {
                count /= p;
                ++lg;
            }
            f[static_cast<std::size_t>(i)] = lg;
        }
        // f(i) - f(i-1) = number of cyclic factors of exponent >= i.
        std::vector<int> at_least(static_cast<std::size_t>(e) + 2, 0);
        for (int i = 1; i <= e; ++i) at_least[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)] - f[static_cast<std::size_t>(i) - 1];
        std::vector<std::uint64_t> parts;
        for (int i = e; i >= 1; --i) {
            const int exactly = at_least[static_cast<std::size_t>(i)] - at_least[static_cast<std::size_t>(i) + 1];
            std::uint64_t pe = 1;
            for (int k = 0; k < i; ++k) pe *= p;
            for (int k = 0; k < exactly; ++k) parts.push_back(pe);
        }
        primary[p] = parts;  // descending
    }
    // Combine into invariant factors d_1 | d_2 | ..., largest first.
    std::size_t width = 0;
    for (const auto& [p, parts] : primary) width = std::max(width, parts.size());
    std::vector<std::uint64_t> factors(width, 1);
    for (const auto& [p, parts] : primary)
        for (std::size_t i = 0; i < parts.size(); ++i) factors[i] *= parts[i];
    std::string name;
    for (std::size_t i = factors.size(); i-- > 0;) {
        if (!name.empty()) name += "×";
        name += "C" + std::to_string(factors[i]);
    }
    return name.empty() ? "C1" : name;
}

}  // namespace

std::string recognize_group(const PermGroup& group) {
    const BigCount& order = group.order();
    if (order == 1) return "C1";
    const std::string fallback = "order-" + order.str() + " unrecognized";
    if (order > 24) return fallback;

    const auto elements = group.elements(24);
    const std::uint64_t n = elements.size();
    std::map<std::uint64_t, std::size_t> counts;
    for (const auto& e : elements) ++counts[e.order()];

    if (group.is_abelian()) return abelian_name(elements);

    // Dihedral: an element x of order n/2 with every element outside <x> an involution.
    if (n % 2 == 0 && n >= 6) {
        for (const auto& x : elements) {
            if (x.order() != n / 2) continue;
            std::vector<Permutation> cyclic{Permutation::identity(group.degree())};
            for (std::uint64_t k = 1; k < n / 2; ++k) cyclic.push_back(then(cyclic.back(), x));
            std::sort(cyclic.begin(), cyclic.end());
            bool dihedral = true;
            for (const auto& y : elements)
                if (!std::binary_search(cyclic.begin(), cyclic.end(), y) && y.order() != 2) {
                    dihedral = false;
                    break;
                }
            if (dihedral) return "D" + std::to_string(n);
            break;  // all elements of order n/2 generate subgroups of index 2 with the same property
        }
    }

    using Counts = std::map<std::uint64_t, std::size_t>;
    if (n == 8 && counts == Counts{{1, 1}, {2, 1}, {4, 6}}) return "Q8";
    if (n == 12 && counts == Counts{{1, 1}, {2, 3}, {3, 8}}) return "A4";
    if (n == 24 && counts == Counts{{1, 1}, {2, 9}, {3, 8}, {4, 6}}) return "S4";
    if (n == 20 && counts == Counts{{1, 1}, {2, 5}, {4, 10}, {5, 4}}) return "C5⋊C4";
    return fallback;
}

}  // namespace dsrg
