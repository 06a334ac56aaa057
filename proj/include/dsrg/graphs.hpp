#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dsrg {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

// Identity of a vertex of an antiflag graph: the owning point, the position of
// its block in the owner's block list, the copy tag of a blow-up and the block
// itself.
struct VertexLabel {
    int point = 0;
    int block_index = 0;
    int copy = 0;
    std::vector<int> block;

    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

/// Dense 0/1 adjacency matrix with bit-packed rows; row i holds the
/// out-neighbours of vertex i. Labels are optional and travel with the
/// vertices through transpose/complement/symmetrize/permute.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool adjacent(std::size_t i, std::size_t j) const noexcept {
        return (bits_[i * words_ + j / kWordBits] >> (j % kWordBits)) & 1U;
    }
    void set_arc(std::size_t i, std::size_t j, bool on = true) noexcept {
        Word& w = bits_[i * words_ + j / kWordBits];
        const Word mask = Word{1} << (j % kWordBits);
        w = on ? (w | mask) : (w & ~mask);
    }

    std::span<const Word> row(std::size_t i) const noexcept {
        return {bits_.data() + i * words_, words_};
    }

    std::size_t out_degree(std::size_t i) const noexcept;
    std::size_t arc_count() const noexcept;
    bool has_loops() const noexcept;
    bool is_symmetric() const noexcept;

    // Bit-packed columns (= rows of the transpose).
    std::vector<Word> column_bits() const;

    // Vertex v of *this becomes vertex perm[v] of the result.
    Digraph permuted(std::span<const int> perm) const;

    bool labeled() const noexcept { return !labels_.empty(); }
    const std::vector<VertexLabel>& labels() const noexcept { return labels_; }
    void set_labels(std::vector<VertexLabel> labels);

    // Matrix equality; labels are not compared.
    bool same_matrix(const Digraph& other) const noexcept {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> bits_;
    std::vector<VertexLabel> labels_;
};

struct DsrgParams {
    std::int64_t v = 0, k = 0, t = 0, lambda = 0, mu = 0;
    friend bool operator==(const DsrgParams&, const DsrgParams&) = default;
};

struct SrgParams {
    std::int64_t v = 0, k = 0, lambda = 0, mu = 0;
    friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

std::ostream& operator<<(std::ostream& os, const DsrgParams& p);
std::ostream& operator<<(std::ostream& os, const SrgParams& p);
std::string to_string(const DsrgParams& p);
std::string to_string(const SrgParams& p);

// First entry at which the defining identity fails.
struct Witness {
    std::string reason;
    std::size_t row = 0;
    std::size_t col = 0;
    std::int64_t value = 0;
};

std::string to_string(const Witness& w);

struct DsrgVerdict {
    std::optional<DsrgParams> params;
    std::optional<Witness> witness;
    // Degenerate acceptances (t = k, t = 0, complete graph).
    std::vector<std::string> advisories;

    explicit operator bool() const noexcept { return params.has_value(); }
};

struct SrgVerdict {
    std::optional<SrgParams> params;
    std::optional<Witness> witness;

    explicit operator bool() const noexcept { return params.has_value(); }
};

// Exact check of JA = AJ = kJ and A^2 = tI + lambda A + mu (J - I - A).
// Throws StructuralError if the graph has loops.
DsrgVerdict verify_dsrg(const Digraph& g);

// Exact check of the undirected identity. Throws StructuralError on loops or
// an asymmetric matrix.
SrgVerdict verify_srg(const Digraph& g);

Digraph transpose(const Digraph& g);
// J - I - A.
Digraph complement(const Digraph& g);
// Elementwise OR of A and its transpose.
Digraph symmetrize(const Digraph& g);

}  // namespace dsrg
