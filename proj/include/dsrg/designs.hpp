#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dsrg {

// A block is a strictly increasing list of 0-based point indices.
using Block = std::vector<int>;

// (points, blocks, block size, replication).
struct DesignParams {
    int points = 0;
    int blocks = 0;
    int block_size = 0;
    int replication = 0;
    friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

std::string to_string(const DesignParams& p);

struct TacticalConfig {
    int n_points = 0;
    std::vector<Block> blocks;
};

struct ValidationReport {
    bool ok = false;
    std::optional<DesignParams> params;
    std::vector<std::string> violations;
};

/// Checks block sizes, point ranges, sortedness and constant replication.
/// Every violation names the point or block witnessing it.
ValidationReport validate_tactical_config(const TacticalConfig& cfg);

/// Per-point block families. owner_blocks[g] is the ordered block list of
/// point g; for antiflag constructions no block of owner_blocks[g] contains g.
struct PointwiseFamily {
    int n_points = 0;
    std::vector<std::vector<Block>> owner_blocks;

    std::size_t vertex_count() const;
};

// (blocks per point, block size, replication over the other points).
struct PointwiseParams {
    int s = 0;
    int l = 0;
    int d = 0;
    friend bool operator==(const PointwiseParams&, const PointwiseParams&) = default;
};

struct FamilyReport {
    bool ok = false;
    std::optional<PointwiseParams> params;
    std::vector<std::string> violations;
};

/// Checks that every owner_blocks[g] avoids g and is a tactical configuration
/// on the other n-1 points, with the same (s, l, d) for every point, and that
/// d(n-1) = ls.
FamilyReport validate_pointwise_family(const PointwiseFamily& family);

/// Checks only the antiflag property (g never lies in a block of its own list)
/// and block well-formedness. Construction I families satisfy this but are not
/// tactical configurations on P \ {g}.
FamilyReport validate_antiflag_family(const PointwiseFamily& family);

/// Points split into r groups of q; see build_c1_general for how the pieces
/// combine.
struct GroupedDesign {
    int r = 0;
    int q = 0;
    int a = 0;
    int b = 0;
    std::vector<std::vector<int>> groups;               // r cells of size q
    std::vector<std::vector<Block>> group_blocks;       // per group, q blocks of size a
    std::vector<Block> spanning_blocks;                 // q blocks of size r*a
    std::vector<std::vector<Block>> x_partitions;       // per point, b cells of size a
};

/// Empty report list means the design satisfies every hypothesis of the
/// grouped-design lemma; otherwise each entry names the failed hypothesis.
std::vector<std::string> grouped_design_violations(const GroupedDesign& design);

/// Block i = {i, i+1, ..., i+a-1} mod q. Throws ParameterError unless 1 <= a <= q.
TacticalConfig cyclic_block_family(int q, int a);

/// For each point g: list the other points increasingly, repeat the list d
/// times and cut it into s consecutive chunks of length l.
/// Throws ParameterError unless d(n-1) = ls, 1 <= l <= n-2 and 1 <= d < s.
PointwiseFamily chunked_pointwise_family(int n, int s, int l, int d);

/// All partitions of {0..m-1} into `cells` unordered cells of equal size
/// `cell_size` (m = cells * cell_size). Cells are sorted by least element.
std::vector<std::vector<Block>> set_partitions(int cells, int cell_size);

/// Number of such partitions: (ls)! / (s! (l!)^s).
std::uint64_t partition_count(int s, int l);

/// The exhaustive stream of d = 1 pointwise families on n = ls + 1 points:
/// each point independently picks a partition of the other points into s cells
/// of size l. Indexable so that workers can take disjoint index ranges.
class PointwisePartitionSpace {
public:
    static constexpr std::uint64_t kMaxPartitionsPerPoint = 1000000;

    // Throws ParameterError unless ls = n-1 and partition_count(s, l) <= kMaxPartitionsPerPoint.
    PointwisePartitionSpace(int n, int s, int l);

    int n() const noexcept { return n_; }
    int s() const noexcept { return s_; }
    int l() const noexcept { return l_; }
    std::uint64_t partitions_per_point() const noexcept { return partitions_.size(); }
    // 0 when the product overflows 64 bits; at() then throws and only
    // from_choices is usable.
    std::uint64_t size() const noexcept { return size_; }

    // Point g takes partition digit g of `index` in base partitions_per_point(),
    // point 0 being the most significant digit.
    PointwiseFamily at(std::uint64_t index) const;
    PointwiseFamily from_choices(const std::vector<std::uint64_t>& choice) const;

private:
    int n_, s_, l_;
    std::vector<std::vector<Block>> partitions_;  // over local indices 0..n-2
    std::uint64_t size_ = 0;
};

PointwisePartitionSpace enumerate_pointwise_partitions(int n, int s, int l);

bool is_prime(int n);

/// Points of PG(2, p) for prime p; owner_blocks[x] lists L \ {x} for the p+1
/// lines L through x, so s = p+1, l = p, d = 1. Throws ParameterError if p is
/// not prime.
PointwiseFamily projective_plane_family(int p);

/// The lines of PG(2, p) as blocks of size p+1 (same point numbering).
std::vector<Block> projective_plane_lines(int p);

}  // namespace dsrg
