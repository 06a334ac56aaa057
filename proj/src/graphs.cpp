#include "dsrg/graphs.hpp"

#include "dsrg/error.hpp"

#include <bit>
#include <ostream>
#include <sstream>

namespace dsrg {

namespace {

std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

std::int64_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
    std::int64_t c = 0;
    for (std::size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
    return c;
}

}  // namespace

Digraph::Digraph(std::size_t n) : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {}

std::size_t Digraph::out_degree(std::size_t i) const noexcept {
    std::size_t d = 0;
    for (Word w : row(i)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::size_t Digraph::arc_count() const noexcept {
    std::size_t c = 0;
    for (Word w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool Digraph::has_loops() const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
        if (adjacent(i, i)) return true;
    return false;
}

bool Digraph::is_symmetric() const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (adjacent(i, j) != adjacent(j, i)) return false;
    return true;
}

std::vector<Word> Digraph::column_bits() const {
    std::vector<Word> cols(n_ * words_, 0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (adjacent(i, j)) cols[j * words_ + i / kWordBits] |= Word{1} << (i % kWordBits);
    return cols;
}

Digraph Digraph::permuted(std::span<const int> perm) const {
    if (perm.size() != n_) throw ParameterError("permutation degree does not match vertex count");
    Digraph out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (adjacent(i, j)) out.set_arc(static_cast<std::size_t>(perm[i]), static_cast<std::size_t>(perm[j]));
    if (labeled()) {
        std::vector<VertexLabel> labels(n_);
        for (std::size_t i = 0; i < n_; ++i) labels[static_cast<std::size_t>(perm[i])] = labels_[i];
        out.labels_ = std::move(labels);
    }
    return out;
}

void Digraph::set_labels(std::vector<VertexLabel> labels) {
    if (!labels.empty() && labels.size() != n_)
        throw ParameterError("label count " + std::to_string(labels.size()) + " does not match vertex count " +
                             std::to_string(n_));
    labels_ = std::move(labels);
}

std::ostream& operator<<(std::ostream& os, const DsrgParams& p) {
    return os << '(' << p.v << ',' << p.k << ',' << p.t << ',' << p.lambda << ',' << p.mu << ')';
}

std::ostream& operator<<(std::ostream& os, const SrgParams& p) {
    return os << '(' << p.v << ',' << p.k << ',' << p.lambda << ',' << p.mu << ')';
}

std::string to_string(const DsrgParams& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

std::string to_string(const SrgParams& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

std::string to_string(const Witness& w) {
    std::ostringstream os;
    os << w.reason << " at (" << w.row << ',' << w.col << "), value " << w.value;
    return os.str();
}

DsrgVerdict verify_dsrg(const Digraph& g) {
    DsrgVerdict out;
    const std::size_t n = g.size();
    if (n == 0) {
        out.witness = Witness{"empty graph", 0, 0, 0};
        return out;
    }
    if (g.has_loops()) throw StructuralError("digraph has loops; a DSRG must be loopless");

    const std::vector<Word> cols = g.column_bits();
    const std::size_t wpr = g.words_per_row();
    auto col = [&](std::size_t j) { return std::span<const Word>(cols.data() + j * wpr, wpr); };

    const auto k = static_cast<std::int64_t>(g.out_degree(0));
    for (std::size_t i = 0; i < n; ++i) {
        const auto out_deg = static_cast<std::int64_t>(g.out_degree(i));
        if (out_deg != k) {
            out.witness = Witness{"k not constant: out-degree differs", i, i, out_deg};
            return out;
        }
        std::int64_t in_deg = 0;
        for (Word w : col(i)) in_deg += std::popcount(w);
        if (in_deg != k) {
            out.witness = Witness{"k not constant: in-degree differs", i, i, in_deg};
            return out;
        }
    }
    if (k == 0) {
        out.witness = Witness{"degenerate: k = 0 (no arcs)", 0, 0, 0};
        return out;
    }

    std::optional<std::int64_t> t, lambda, mu;
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = g.row(i);
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t paths = and_popcount(r, col(j));
            std::optional<std::int64_t>* slot = nullptr;
            const char* what = nullptr;
            if (i == j) {
                slot = &t;
                what = "diagonal of A^2 not constant (t)";
            } else if (g.adjacent(i, j)) {
                slot = &lambda;
                what = "A^2 not constant on arcs (lambda)";
            } else {
                slot = &mu;
                what = "A^2 not constant on non-arcs (mu)";
            }
            if (!slot->has_value()) {
                *slot = paths;
            } else if (**slot != paths) {
                out.witness = Witness{what, i, j, paths};
                return out;
            }
        }
    }

    if (!mu) {
        // A = J - I: the mu term vanishes, so mu is unconstrained.
        mu = lambda;
        out.advisories.emplace_back("complete digraph: mu is unconstrained and reported equal to lambda");
    }
    if (*t == k) out.advisories.emplace_back("t = k: undirected strongly regular graph");
    if (*t == 0) out.advisories.emplace_back("t = 0: doubly regular tournament");

    out.params = DsrgParams{static_cast<std::int64_t>(n), k, *t, lambda.value_or(0), *mu};
    return out;
}

SrgVerdict verify_srg(const Digraph& g) {
    if (g.has_loops()) throw StructuralError("graph has loops");
    if (!g.is_symmetric()) throw StructuralError("adjacency matrix is not symmetric");
    SrgVerdict out;
    DsrgVerdict d = verify_dsrg(g);
    if (!d) {
        out.witness = d.witness;
        return out;
    }
    out.params = SrgParams{d.params->v, d.params->k, d.params->lambda, d.params->mu};
    return out;
}

Digraph transpose(const Digraph& g) {
    const std::size_t n = g.size();
    Digraph out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g.adjacent(i, j)) out.set_arc(j, i);
    out.set_labels(g.labels());
    return out;
}

Digraph complement(const Digraph& g) {
    const std::size_t n = g.size();
    Digraph out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !g.adjacent(i, j)) out.set_arc(i, j);
    out.set_labels(g.labels());
    return out;
}

Digraph symmetrize(const Digraph& g) {
    const std::size_t n = g.size();
    Digraph out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g.adjacent(i, j)) {
                out.set_arc(i, j);
                out.set_arc(j, i);
            }
    out.set_labels(g.labels());
    return out;
}

}  // namespace dsrg
