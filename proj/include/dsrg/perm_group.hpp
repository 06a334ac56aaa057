#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dsrg {

using BigCount = boost::multiprecision::cpp_int;

/// Bijection of {0..n-1}; images[i] is the image of i.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);  // throws ParameterError if not a bijection

    static Permutation identity(std::size_t n);

    std::size_t degree() const noexcept { return images_.size(); }
    int operator()(int i) const noexcept { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    bool is_identity() const noexcept;
    Permutation inverse() const;
    // Smallest k > 0 with p^k = id.
    std::uint64_t order() const;
    // Disjoint cycles, 0-based, fixed points omitted; "()" for the identity.
    std::string cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

// Apply `first`, then `second`: x -> second(first(x)).
Permutation then(const Permutation& first, const Permutation& second);

/// Permutation group given by generators, with a base and strong generating
/// set built by the deterministic Schreier-Sims algorithm.
class PermGroup {
public:
    PermGroup() = default;
    PermGroup(std::size_t degree, std::vector<Permutation> generators);

    std::size_t degree() const noexcept { return degree_; }
    const std::vector<Permutation>& generators() const noexcept { return generators_; }
    const BigCount& order() const noexcept { return order_; }

    bool contains(const Permutation& p) const;
    // Orbits on points, each sorted, listed by least element.
    std::vector<std::vector<int>> orbits() const;
    bool is_transitive() const;
    bool is_abelian() const;

    /// Every element (identity first). Throws ParameterError if the order
    /// exceeds `limit`.
    std::vector<Permutation> elements(std::size_t limit = 100000) const;

    const std::vector<int>& base() const noexcept { return base_; }

private:
    struct Level {
        int base_point = 0;
        std::vector<Permutation> strong;                  // strong generators fixing earlier base points
        std::vector<std::optional<Permutation>> transversal;  // transversal[x] maps base_point to x
        std::vector<int> orbit;
    };

    void schreier_sims();
    void rebuild_orbit(Level& level) const;
    // Sifts p through levels from `from`; returns the residue and the level it stopped at.
    std::pair<Permutation, std::size_t> strip(Permutation p, std::size_t from) const;

    std::size_t degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<int> base_;
    std::vector<Level> levels_;
    BigCount order_ = 1;
};

/// Adds permutations one at a time, keeping only those not already generated.
PermGroup group_from_elements(std::size_t degree, std::span<const Permutation> elements);

/// Names small groups by isomorphism type for orders up to 24: Cn, abelian
/// products such as C2×C2, dihedral D2n (named by order: D8, D10, D12), Q8,
/// A4, S4 and C5⋊C4. Anything else yields "order-N unrecognized".
std::string recognize_group(const PermGroup& group);

// Element-order histogram (order -> count); throws if the group is large.
std::map<std::uint64_t, std::size_t> element_order_counts(const PermGroup& group, std::size_t limit = 100000);

}  // namespace dsrg
