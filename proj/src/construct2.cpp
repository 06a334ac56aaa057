#include "dsrg/construct2.hpp"

#include "dsrg/error.hpp"

#include <algorithm>

namespace dsrg {

namespace {

std::vector<VertexLabel> antiflag_labels(const PointwiseFamily& family) {
    std::vector<VertexLabel> labels;
    labels.reserve(family.vertex_count());
    for (int g = 0; g < family.n_points; ++g) {
        const auto& list = family.owner_blocks[static_cast<std::size_t>(g)];
        for (std::size_t j = 0; j < list.size(); ++j) labels.push_back({g, static_cast<int>(j), 0, list[j]});
    }
    return labels;
}

// Arc rule shared by every antiflag graph: the tail's point lies in the head's block.
void add_incidence_arcs(Digraph& out, const std::vector<VertexLabel>& labels) {
    const std::size_t v = labels.size();
    for (std::size_t head = 0; head < v; ++head)
        for (int p : labels[head].block)
            for (std::size_t tail = 0; tail < v; ++tail)
                if (labels[tail].point == p) out.set_arc(tail, head);
}

void require_valid(const PointwiseFamily& family) {
    FamilyReport rep = validate_pointwise_family(family);
    if (!rep.ok) {
        std::string msg = "invalid pointwise family:";
        for (const auto& v : rep.violations) msg += " " + v + ";";
        throw ConstructionError(msg);
    }
}

}  // namespace

Digraph antiflag_digraph(const PointwiseFamily& family) {
    FamilyReport rep = validate_antiflag_family(family);
    if (!rep.ok) throw ConstructionError("not an antiflag family: " + rep.violations.front());
    std::vector<VertexLabel> labels = antiflag_labels(family);
    Digraph g(labels.size());
    add_incidence_arcs(g, labels);
    g.set_labels(std::move(labels));
    return g;
}

Digraph build_d1(const PointwiseFamily& family) {
    require_valid(family);
    return antiflag_digraph(family);
}

Digraph build_d2(const PointwiseFamily& family) {
    require_valid(family);
    Digraph g = antiflag_digraph(family);
    const auto& labels = g.labels();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (i != j && labels[i].point == labels[j].point) g.set_arc(i, j);
    return g;
}

Digraph blow_up(const Digraph& graph, Variant variant, int m) {
    if (m < 1) throw ParameterError("blow-up multiplicity must be at least 1");
    if (!graph.labeled()) throw ParameterError("blow-up needs (point, block) vertex labels");
    if (variant == Variant::d1) {
        DsrgVerdict v = verify_dsrg(graph);
        if (!v || v.params->t != v.params->mu)
            throw ConstructionError("D1 blow-up requires a DSRG with t = mu");
    }

    const std::size_t base = graph.size();
    const std::size_t total = base * static_cast<std::size_t>(m);
    std::vector<VertexLabel> labels;
    labels.reserve(total);
    for (int c = 0; c < m; ++c)
        for (const VertexLabel& lbl : graph.labels()) {
            VertexLabel copy = lbl;
            copy.copy = c;
            labels.push_back(std::move(copy));
        }

    Digraph out(total);
    add_incidence_arcs(out, labels);
    if (variant == Variant::d2)
        for (std::size_t i = 0; i < total; ++i)
            for (std::size_t j = 0; j < total; ++j)
                if (i != j && labels[i].point == labels[j].point) out.set_arc(i, j);
    out.set_labels(std::move(labels));
    return out;
}

DsrgParams expected_params_c2(int n, int s, int l, int d, Variant variant, int m) {
    if (n < 2 || s < 1 || l < 1 || d < 1 || d * (n - 1) != l * s)
        throw ParameterError("expected_params_c2 needs positive n, s, l, d with d(n-1) = ls");
    if (m < 1) throw ParameterError("multiplicity must be at least 1");
    const std::int64_t N = n, S = s, L = l, D = d, M = m;
    if (variant == Variant::d1)
        return {M * N * S, M * L * S, M * L * D, M * (L - 1) * D, M * L * D};
    return {M * N * S, M * (L * S + S) - 1, M * (L * D + S) - 1, M * (L * D + S) - 2, M * (L + 1) * D};
}

}  // namespace dsrg
