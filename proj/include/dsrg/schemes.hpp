#pragma once

#include "dsrg/graphs.hpp"
#include "dsrg/perm_group.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dsrg {

/// Relations R_0..R_c on n points given by a class matrix; R_0 is the diagonal.
class AssociationScheme {
public:
    std::size_t size() const noexcept { return n_; }
    int classes() const noexcept { return classes_; }  // c, diagonal excluded
    int relation(std::size_t x, std::size_t y) const noexcept { return relation_[x * n_ + y]; }
    const std::vector<int>& relation_matrix() const noexcept { return relation_; }

    // p^k_{ij}
    std::int64_t intersection(int i, int j, int k) const noexcept {
        const auto c1 = static_cast<std::size_t>(classes_ + 1);
        return p_[(static_cast<std::size_t>(k) * c1 + static_cast<std::size_t>(i)) * c1 + static_cast<std::size_t>(j)];
    }
    std::int64_t valency(int i) const noexcept { return valency_[static_cast<std::size_t>(i)]; }
    int transpose_of(int i) const noexcept { return transpose_[static_cast<std::size_t>(i)]; }
    bool is_commutative() const noexcept { return commutative_; }
    bool is_symmetric() const noexcept;

    friend struct SchemeBuilder;

private:
    std::size_t n_ = 0;
    int classes_ = 0;
    std::vector<int> relation_;
    std::vector<std::int64_t> p_;
    std::vector<std::int64_t> valency_;
    std::vector<int> transpose_;
    bool commutative_ = true;
};

// A failed scheme axiom: (x, y) lies in R_k, but the count of z with
// (x,z) in R_i and (z,y) in R_j differs from the count at the first pair of R_k.
struct SchemeViolation {
    std::string reason;
    int i = 0, j = 0, k = 0;
    std::size_t x = 0, y = 0;
};

std::string to_string(const SchemeViolation& v);

struct SchemeCheck {
    std::optional<AssociationScheme> scheme;
    std::optional<SchemeViolation> violation;
    explicit operator bool() const noexcept { return scheme.has_value(); }
};

/// Exhaustive check of every axiom for an n x n class matrix with classes 0..c.
SchemeCheck make_scheme(std::size_t n, std::vector<int> relation);

/// Orbitals of the group on V x V; class 0 is the diagonal, the others are
/// sorted by (valency, canonical certificate of the relation digraph, first
/// pair). Throws StructuralError naming the orbits when transitivity is
/// required and fails; otherwise an intransitive group fails the axiom check
/// and the StructuralError names the offending intersection number.
AssociationScheme orbital_scheme(const PermGroup& group, bool require_transitive = true);

/// Merges the nondiagonal classes by `grouping` (a partition of {1..c});
/// fused class g+1 is the union of grouping[g]. Throws ParameterError if the
/// grouping is not a partition.
SchemeCheck fuse(const AssociationScheme& scheme, const std::vector<std::vector<int>>& grouping);

/// Every feasible proper fusion (2 <= groups < c), groups sorted by least
/// element, listed in order of increasing group count.
std::vector<std::vector<std::vector<int>>> all_fusions(const AssociationScheme& scheme);

struct Decomposition {
    std::optional<std::set<int>> classes;
    std::string witness;  // set when the arc set is not a union of classes
};

Decomposition relation_decomposition(const AssociationScheme& scheme, const Digraph& g);

// Digraph whose arcs are the union of the given classes.
Digraph relation_graph(const AssociationScheme& scheme, const std::set<int>& classes);

struct SchemeIsomorphism {
    std::vector<int> vertex_map;  // vertex x of a -> vertex_map[x] of b
    std::vector<int> class_map;   // class i of a -> class_map[i] of b
};

/// Simultaneous row/column permutation plus class relabeling taking a to b.
std::optional<SchemeIsomorphism> find_scheme_isomorphism(const AssociationScheme& a, const AssociationScheme& b);

}  // namespace dsrg
