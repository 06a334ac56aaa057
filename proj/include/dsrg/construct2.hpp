#pragma once

#include "dsrg/designs.hpp"
#include "dsrg/graphs.hpp"

namespace dsrg {

enum class Variant { d1, d2 };

/// Vertices (g, B) for B in owner_blocks[g], in point-major order; arc
/// (g, B) -> (g', B') iff g lies in B'. No validation beyond the antiflag
/// property; Construction I reuses this directly.
Digraph antiflag_digraph(const PointwiseFamily& family);

// Throws ConstructionError if the family fails validate_pointwise_family.
Digraph build_d1(const PointwiseFamily& family);

// As build_d1, plus arcs between distinct vertices owned by the same point.
// Vertices are distinct block occurrences, so repeated blocks in a list are
// still joined.
Digraph build_d2(const PointwiseFamily& family);

/// m instance-tagged copies of every vertex (copy-major order). The D1 rule
/// only looks at the owner point; the D2 rule also joins every pair of
/// distinct instances owned by the same point. D1 blow-ups require t = mu,
/// which is checked. Throws ParameterError on unlabeled input or m < 1.
Digraph blow_up(const Digraph& graph, Variant variant, int m);

/// Closed-form parameters of D1 / D2 and of their m-copy blow-ups.
/// Throws ParameterError unless d(n-1) = ls and m >= 1.
DsrgParams expected_params_c2(int n, int s, int l, int d, Variant variant, int m = 1);

}  // namespace dsrg
