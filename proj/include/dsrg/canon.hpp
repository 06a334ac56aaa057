#pragma once

#include "dsrg/graphs.hpp"
#include "dsrg/perm_group.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dsrg {

struct CanonicalForm {
    // 4-byte big-endian vertex count, then the relabeled matrix row-major,
    // one bit per entry, most significant bit first.
    std::string certificate;
    // labeling[v] = position of v in the canonical order.
    std::vector<int> labeling;

    Digraph canonical_graph(const Digraph& g) const { return g.permuted(labeling); }
};

struct SearchResult {
    CanonicalForm form;
    std::vector<Permutation> automorphisms;  // generators of Aut
    BigCount orbit_product;                   // |Aut| from the search tree
};

/// Individualization-refinement search: equitable refinement by out- and
/// in-neighbour counts, then branching on the first smallest non-singleton
/// cell. Automorphisms are collected first along the leftmost path, then the
/// canonical leaf is the least (trace sequence, matrix) over the tree pruned by
/// trace comparison and known automorphisms.
SearchResult canonical_search(const Digraph& g);

CanonicalForm canonical_form(const Digraph& g);
PermGroup automorphism_group(const Digraph& g);

/// Isomorphism as a vertex map w with g.permuted(w) == h, or nullopt.
std::optional<Permutation> find_isomorphism(const Digraph& g, const Digraph& h);
bool are_isomorphic(const Digraph& g, const Digraph& h);

std::string to_hex(std::string_view bytes);

}  // namespace dsrg
