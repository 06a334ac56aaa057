#pragma once

#include "dsrg/designs.hpp"
#include "dsrg/graphs.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dsrg {

enum class C1Mode { general, b1, a1 };
enum class Pairing { strict, relaxed };

struct C1Result {
    Digraph graph;
    PointwiseFamily family;
    std::vector<std::string> warnings;
};

/// Groups G_j = {jq, ..., jq+q-1}; P_j = cyclic (q, a) family shifted into
/// G_j; spanning block i joins the i-th block of every group; X-cells of g
/// chunk G_h \ {g} in cyclic order starting just after g.
GroupedDesign default_grouped_design(int r, int q, int a, int b);

/// Block lists B_{gl,j} = X_{gl} + (B_j \ P_{hj}), ordered l-major then j.
/// Throws ConstructionError naming the first violated hypothesis.
PointwiseFamily grouped_design_family(const GroupedDesign& design);

C1Result build_c1_general(const GroupedDesign& design);
C1Result build_c1_general(int r, int q, int a, int b);

/// Number of relaxed pairing choices: (q!)^((r-2) * rq) (1 when r = 2).
std::uint64_t relaxed_choice_count(int r, int q);

/// Decodes a relaxed choice index into one permutation index per (point,
/// realigned group), point-major.
std::vector<int> relaxed_choice_vector(int r, int q, std::uint64_t index);

/// b = 1: P_j holds the q subsets G_j \ {x} of size q-1. With strict pairing
/// every point uses the global spanning blocks; with relaxed pairing each
/// point g permutes, for every non-home group after the first, which of that
/// group's subsets joins its j-th block (choices: one index into the
/// lexicographic permutations of q per (point, realigned group)).
C1Result build_c1_b1(int r, int q, Pairing pairing = Pairing::strict, std::span<const int> choices = {});

/// pi(i) = i mod q^(r-2) (0-based parts).
std::vector<int> default_pi(int r, int q);

/// a = 1: transversal blocks; the blocks through i are split into q^(r-2)
/// parts along diagonal lines, and point g in G_h owns the parts pi(i) of the
/// other points i of G_h. A non-injective pi only adds a warning.
C1Result build_c1_a1(int r, int q, std::span<const int> pi);
C1Result build_c1_a1(int r, int q);

/// Index of the part containing a block through i, given the block's local
/// coordinates in the other groups (group order). Exposed for tests.
int a1_part_index(int q, std::span<const int> coordinates);

/// Closed-form parameters; all three agree with the (r, a, b) family under q = 1 + ab.
DsrgParams expected_params_c1(C1Mode mode, int r, int q, int a = 0, int b = 0);

}  // namespace dsrg
