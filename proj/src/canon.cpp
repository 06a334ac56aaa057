#include "dsrg/canon.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace dsrg {

namespace {

using Trace = std::vector<std::int64_t>;

struct Partition {
    std::vector<int> elems;  // vertices in cell order
    std::vector<int> pos;    // pos[v]: index of v in elems
    std::vector<int> start;  // start[i]: first index of the cell holding index i
    std::vector<int> end;    // end[s]: one past the cell starting at s
    int cells = 0;

    explicit Partition(int n) : elems(static_cast<std::size_t>(n)), pos(static_cast<std::size_t>(n)),
                                start(static_cast<std::size_t>(n), 0), end(static_cast<std::size_t>(n), 0) {
        std::iota(elems.begin(), elems.end(), 0);
        std::iota(pos.begin(), pos.end(), 0);
        if (n > 0) {
            end[0] = n;
            cells = 1;
        }
    }
    int size() const { return static_cast<int>(elems.size()); }
    bool discrete() const { return cells == size(); }
    int cell_end(int s) const { return end[static_cast<std::size_t>(s)]; }
};

class Searcher {
public:
    explicit Searcher(const Digraph& g)
        : n_(static_cast<int>(g.size())), words_(g.words_per_row()), out_(g.size() * g.words_per_row()),
          in_(g.column_bits()), graph_(g) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            auto r = g.row(i);
            std::copy(r.begin(), r.end(), out_.begin() + static_cast<std::ptrdiff_t>(i * words_));
        }
    }

    SearchResult run();

private:
    void refine(Partition& p, int first_splitter, Trace& trace) const;
    Partition child(const Partition& p, int v, Trace& trace) const;
    int target_cell(const Partition& p) const;
    std::string leaf_certificate(const Partition& p) const;
    std::vector<int> orbit_roots(const std::vector<int>& prefix) const;

    bool find_equivalent_leaf(const Partition& p, std::size_t depth, std::vector<int>& prefix);
    void canonical_dfs(const Partition& p, std::size_t depth, std::vector<int>& prefix, bool better);

    int n_;
    std::size_t words_;
    std::vector<Word> out_;
    std::vector<Word> in_;
    const Digraph& graph_;

    // First path.
    std::vector<Trace> first_traces_;
    std::string first_cert_;
    std::vector<int> first_elems_;

    std::vector<Permutation> gens_;

    // Best leaf of the canonical pass.
    std::vector<Trace> path_traces_;
    std::vector<Trace> best_traces_;
    std::string best_cert_;
    std::vector<int> best_pos_;
    std::uint64_t best_version_ = 0;
};

void Searcher::refine(Partition& p, int first_splitter, Trace& trace) const {
    const std::size_t n = static_cast<std::size_t>(n_);
    std::vector<char> queued(n, 0);
    std::deque<int> queue{first_splitter};
    queued[static_cast<std::size_t>(first_splitter)] = 1;
    std::vector<Word> mask(words_);
    std::vector<std::int64_t> key(n);

    while (!queue.empty() && !p.discrete()) {
        const int w = queue.front();
        queue.pop_front();
        queued[static_cast<std::size_t>(w)] = 0;
        std::fill(mask.begin(), mask.end(), Word{0});
        for (int i = w; i < p.cell_end(w); ++i) {
            const auto v = static_cast<std::size_t>(p.elems[static_cast<std::size_t>(i)]);
            mask[v / kWordBits] |= Word{1} << (v % kWordBits);
        }
        trace.push_back(-1);
        trace.push_back(w);

        for (int c = 0; c < n_; c = p.cell_end(c)) {
            const int e = p.cell_end(c);
            if (e - c == 1) continue;
            bool uniform = true;
            for (int i = c; i < e; ++i) {
                const auto v = static_cast<std::size_t>(p.elems[static_cast<std::size_t>(i)]);
                std::int64_t outs = 0, ins = 0;
                for (std::size_t k = 0; k < words_; ++k) {
                    outs += std::popcount(out_[v * words_ + k] & mask[k]);
                    ins += std::popcount(in_[v * words_ + k] & mask[k]);
                }
                key[v] = outs * (n_ + 1) + ins;
                if (key[v] != key[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(c)])]) uniform = false;
            }
            if (uniform) continue;

            auto first = p.elems.begin() + c;
            auto last = p.elems.begin() + e;
            std::sort(first, last, [&](int a, int b) { return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)]; });
            std::vector<int> pieces{c};
            for (int i = c + 1; i < e; ++i)
                if (key[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(i)])] !=
                    key[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(i) - 1])])
                    pieces.push_back(i);
            pieces.push_back(e);
            for (std::size_t k = 0; k + 1 < pieces.size(); ++k) {
                const int a = pieces[k], b = pieces[k + 1];
                p.end[static_cast<std::size_t>(a)] = b;
                for (int j = a; j < b; ++j) {
                    p.start[static_cast<std::size_t>(j)] = a;
                    p.pos[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(j)])] = j;
                }
                trace.push_back(a);
                trace.push_back(key[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(a)])]);
                if (!queued[static_cast<std::size_t>(a)]) {
                    queued[static_cast<std::size_t>(a)] = 1;
                    queue.push_back(a);
                }
            }
            p.cells += static_cast<int>(pieces.size()) - 2;
        }
    }
    trace.push_back(-2);
    trace.push_back(p.cells);
}

Partition Searcher::child(const Partition& p, int v, Trace& trace) const {
    Partition q = p;
    const int c = q.start[static_cast<std::size_t>(q.pos[static_cast<std::size_t>(v)])];
    const int e = q.cell_end(c);
    const int at = q.pos[static_cast<std::size_t>(v)];
    std::swap(q.elems[static_cast<std::size_t>(c)], q.elems[static_cast<std::size_t>(at)]);
    q.pos[static_cast<std::size_t>(q.elems[static_cast<std::size_t>(at)])] = at;
    q.pos[static_cast<std::size_t>(v)] = c;
    q.end[static_cast<std::size_t>(c)] = c + 1;
    q.end[static_cast<std::size_t>(c) + 1] = e;
    for (int i = c + 1; i < e; ++i) q.start[static_cast<std::size_t>(i)] = c + 1;
    ++q.cells;
    trace.push_back(-3);
    trace.push_back(c);
    refine(q, c, trace);
    return q;
}

int Searcher::target_cell(const Partition& p) const {
    int best = -1;
    int best_size = n_ + 1;
    for (int c = 0; c < n_; c = p.cell_end(c)) {
        const int size = p.cell_end(c) - c;
        if (size > 1 && size < best_size) {
            best = c;
            best_size = size;
        }
    }
    return best;
}

std::string Searcher::leaf_certificate(const Partition& p) const {
    const std::size_t n = static_cast<std::size_t>(n_);
    std::string cert(4 + (n * n + 7) / 8, '\0');
    const auto un = static_cast<std::uint32_t>(n);
    for (int b = 0; b < 4; ++b) cert[static_cast<std::size_t>(b)] = static_cast<char>((un >> (24 - 8 * b)) & 0xFFU);
    for (std::size_t i = 0; i < n; ++i) {
        const auto u = static_cast<std::size_t>(p.elems[i]);
        for (std::size_t k = 0; k < words_; ++k) {
            Word w = out_[u * words_ + k];
            while (w) {
                const std::size_t target = k * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
                w &= w - 1;
                const std::size_t bit = i * n + static_cast<std::size_t>(p.pos[target]);
                cert[4 + bit / 8] = static_cast<char>(static_cast<unsigned char>(cert[4 + bit / 8]) | (0x80U >> (bit % 8)));
            }
        }
    }
    return cert;
}

// Union-find roots of the group generated by the known automorphisms that fix
// every prefix vertex.
std::vector<int> Searcher::orbit_roots(const std::vector<int>& prefix) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (const auto& g : gens_) {
        if (!std::all_of(prefix.begin(), prefix.end(), [&](int v) { return g(v) == v; })) continue;
        for (int x = 0; x < n_; ++x) {
            const int a = find(x), b = find(g(x));
            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    }
    for (int x = 0; x < n_; ++x) parent[static_cast<std::size_t>(x)] = find(x);
    return parent;
}

// `p` sits at `depth` of a path whose traces so far match the first path.
bool Searcher::find_equivalent_leaf(const Partition& p, std::size_t depth, std::vector<int>& prefix) {
    if (p.discrete()) {
        if (leaf_certificate(p) != first_cert_) return false;
        std::vector<int> img(static_cast<std::size_t>(n_));
        for (int u = 0; u < n_; ++u)
            img[static_cast<std::size_t>(u)] = first_elems_[static_cast<std::size_t>(p.pos[static_cast<std::size_t>(u)])];
        gens_.emplace_back(std::move(img));
        return true;
    }
    const int c = target_cell(p);
    std::vector<int> cell(p.elems.begin() + c, p.elems.begin() + p.cell_end(c));
    std::sort(cell.begin(), cell.end());
    const auto roots = orbit_roots(prefix);
    std::vector<char> tried(static_cast<std::size_t>(n_), 0);
    for (int x : cell) {
        if (tried[static_cast<std::size_t>(roots[static_cast<std::size_t>(x)])]) continue;
        tried[static_cast<std::size_t>(roots[static_cast<std::size_t>(x)])] = 1;
        Trace trace;
        Partition q = child(p, x, trace);
        if (trace != first_traces_[depth + 1]) continue;
        prefix.push_back(x);
        const bool found = find_equivalent_leaf(q, depth + 1, prefix);
        prefix.pop_back();
        if (found) return true;
    }
    return false;
}

void Searcher::canonical_dfs(const Partition& p, std::size_t depth, std::vector<int>& prefix, bool better) {
    if (p.discrete()) {
        std::string cert = leaf_certificate(p);
        if (better || cert < best_cert_) {
            best_cert_ = std::move(cert);
            best_traces_ = path_traces_;
            best_pos_ = p.pos;
            ++best_version_;
        }
        return;
    }
    const int c = target_cell(p);
    std::vector<int> cell(p.elems.begin() + c, p.elems.begin() + p.cell_end(c));
    std::sort(cell.begin(), cell.end());
    const auto roots = orbit_roots(prefix);
    std::vector<char> tried(static_cast<std::size_t>(n_), 0);
    for (int x : cell) {
        if (tried[static_cast<std::size_t>(roots[static_cast<std::size_t>(x)])]) continue;
        tried[static_cast<std::size_t>(roots[static_cast<std::size_t>(x)])] = 1;
        Trace trace;
        Partition q = child(p, x, trace);
        bool child_better = better;
        if (!better) {
            const Trace& ref = best_traces_[depth + 1];
            if (ref < trace) continue;
            child_better = trace < ref;
        }
        const std::uint64_t version = best_version_;
        path_traces_.push_back(std::move(trace));
        prefix.push_back(x);
        canonical_dfs(q, depth + 1, prefix, child_better);
        prefix.pop_back();
        path_traces_.pop_back();
        // A new best below this node makes this node a prefix of the best path.
        if (best_version_ != version) better = false;
    }
}

SearchResult Searcher::run() {
    SearchResult result;
    result.orbit_product = 1;
    if (n_ == 0) {
        result.form.certificate = std::string(4, '\0');
        return result;
    }

    // Leftmost path.
    std::vector<Partition> parts;
    std::vector<int> chosen;
    {
        Partition root(n_);
        Trace trace;
        refine(root, 0, trace);
        first_traces_.push_back(std::move(trace));
        parts.push_back(std::move(root));
    }
    while (!parts.back().discrete()) {
        const Partition& p = parts.back();
        const int v = p.elems[static_cast<std::size_t>(target_cell(p))];
        Trace trace;
        Partition q = child(p, v, trace);
        chosen.push_back(v);
        first_traces_.push_back(std::move(trace));
        parts.push_back(std::move(q));
    }
    first_cert_ = leaf_certificate(parts.back());
    first_elems_ = parts.back().elems;

    // Automorphisms, deepest level first.
    for (std::size_t d = chosen.size(); d-- > 0;) {
        const Partition& p = parts[d];
        const int c = target_cell(p);
        std::vector<int> cell(p.elems.begin() + c, p.elems.begin() + p.cell_end(c));
        std::sort(cell.begin(), cell.end());
        std::vector<int> prefix(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(d));
        const int v = chosen[d];
        std::vector<int> failed;
        for (int w : cell) {
            if (w == v) continue;
            auto roots = orbit_roots(prefix);
            const int rw = roots[static_cast<std::size_t>(w)];
            if (rw == roots[static_cast<std::size_t>(v)]) continue;
            if (std::any_of(failed.begin(), failed.end(), [&](int f) { return roots[static_cast<std::size_t>(f)] == rw; })) continue;
            Trace trace;
            Partition q = child(p, w, trace);
            bool found = false;
            if (trace == first_traces_[d + 1]) {
                prefix.push_back(w);
                found = find_equivalent_leaf(q, d + 1, prefix);
                prefix.pop_back();
            }
            if (!found) failed.push_back(w);
        }
        const auto roots = orbit_roots(prefix);
        const auto orbit = std::count_if(cell.begin(), cell.end(), [&](int x) {
            return roots[static_cast<std::size_t>(x)] == roots[static_cast<std::size_t>(v)];
        });
        result.orbit_product *= static_cast<unsigned>(orbit);
    }

    // Canonical leaf.
    best_cert_ = first_cert_;
    best_traces_ = first_traces_;
    best_pos_ = parts.back().pos;
    path_traces_.push_back(first_traces_[0]);
    std::vector<int> prefix;
    canonical_dfs(parts.front(), 0, prefix, false);

    result.form.certificate = best_cert_;
    result.form.labeling = best_pos_;
    result.automorphisms = gens_;
    return result;
}

}  // namespace

SearchResult canonical_search(const Digraph& g) {
    Searcher s(g);
    return s.run();
}

CanonicalForm canonical_form(const Digraph& g) { return canonical_search(g).form; }

PermGroup automorphism_group(const Digraph& g) {
    auto r = canonical_search(g);
    return PermGroup(g.size(), std::move(r.automorphisms));
}

std::optional<Permutation> find_isomorphism(const Digraph& g, const Digraph& h) {
    if (g.size() != h.size()) return std::nullopt;
    const auto cg = canonical_form(g);
    const auto ch = canonical_form(h);
    if (cg.certificate != ch.certificate) return std::nullopt;
    std::vector<int> inv_h(h.size());
    for (std::size_t v = 0; v < h.size(); ++v) inv_h[static_cast<std::size_t>(ch.labeling[v])] = static_cast<int>(v);
    std::vector<int> map(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) map[v] = inv_h[static_cast<std::size_t>(cg.labeling[v])];
    Permutation w(std::move(map));
    if (!g.permuted(w.images()).same_matrix(h)) throw std::logic_error("find_isomorphism: witness does not map g onto h");
    return w;
}

bool are_isomorphic(const Digraph& g, const Digraph& h) { return find_isomorphism(g, h).has_value(); }

std::string to_hex(std::string_view bytes) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xF]);
    }
    return out;
}

}  // namespace dsrg
