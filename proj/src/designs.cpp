#include "dsrg/designs.hpp"

#include "dsrg/error.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace dsrg {

std::string to_string(const DesignParams& p) {
    std::ostringstream os;
    os << '(' << p.points << ',' << p.blocks << ',' << p.block_size << ',' << p.replication << ')';
    return os.str();
}

namespace {

std::string block_text(const Block& b) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << '}';
    return os.str();
}

// Block shape problems (range, order, size) appended to `out`; returns false if any.
bool check_block_shape(const Block& block, int n_points, std::size_t expected_size, const std::string& where,
                       std::vector<std::string>& out) {
    bool ok = true;
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (block[i] < 0 || block[i] >= n_points) {
            out.push_back(where + " contains point " + std::to_string(block[i]) + " outside 0.." +
                          std::to_string(n_points - 1));
            ok = false;
        }
        if (i > 0 && block[i] <= block[i - 1]) {
            out.push_back(where + " " + block_text(block) + " is not strictly increasing");
            ok = false;
        }
    }
    if (block.size() != expected_size) {
        out.push_back(where + " has " + std::to_string(block.size()) + " points, expected " +
                      std::to_string(expected_size));
        ok = false;
    }
    return ok;
}

}  // namespace

ValidationReport validate_tactical_config(const TacticalConfig& cfg) {
    ValidationReport rep;
    if (cfg.n_points <= 0) rep.violations.emplace_back("point set is empty");
    if (cfg.blocks.empty()) rep.violations.emplace_back("block list is empty");
    if (!rep.violations.empty()) return rep;

    const std::size_t k = cfg.blocks.front().size();
    std::vector<int> replication(static_cast<std::size_t>(cfg.n_points), 0);
    for (std::size_t i = 0; i < cfg.blocks.size(); ++i) {
        const Block& b = cfg.blocks[i];
        if (!check_block_shape(b, cfg.n_points, k, "block " + std::to_string(i), rep.violations)) continue;
        for (int p : b) ++replication[static_cast<std::size_t>(p)];
    }
    if (!rep.violations.empty()) return rep;

    const int r = replication.front();
    if (std::any_of(replication.begin(), replication.end(), [r](int x) { return x != r; })) {
        std::ostringstream os;
        os << "replication not constant:";
        // Group points by count so the message names every witness.
        std::map<int, std::vector<int>> by_count;
        for (std::size_t p = 0; p < replication.size(); ++p) by_count[replication[p]].push_back(static_cast<int>(p));
        for (const auto& [count, pts] : by_count) {
            os << (pts.size() == 1 ? " point" : " points");
            for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? "," : " ") << pts[i];
            os << " in " << count << (count == 1 ? " block;" : " blocks;");
        }
        std::string msg = os.str();
        msg.pop_back();
        rep.violations.push_back(msg);
        return rep;
    }
    rep.ok = true;
    rep.params = DesignParams{cfg.n_points, static_cast<int>(cfg.blocks.size()), static_cast<int>(k), r};
    return rep;
}

std::size_t PointwiseFamily::vertex_count() const {
    std::size_t c = 0;
    for (const auto& list : owner_blocks) c += list.size();
    return c;
}

FamilyReport validate_antiflag_family(const PointwiseFamily& family) {
    FamilyReport rep;
    if (family.n_points <= 0) {
        rep.violations.emplace_back("point set is empty");
        return rep;
    }
    if (family.owner_blocks.size() != static_cast<std::size_t>(family.n_points)) {
        rep.violations.push_back("family lists " + std::to_string(family.owner_blocks.size()) +
                                 " point block lists for " + std::to_string(family.n_points) + " points");
        return rep;
    }
    for (int g = 0; g < family.n_points; ++g) {
        const auto& list = family.owner_blocks[static_cast<std::size_t>(g)];
        for (std::size_t j = 0; j < list.size(); ++j) {
            const Block& b = list[j];
            const std::string where = "point " + std::to_string(g) + " block " + std::to_string(j);
            check_block_shape(b, family.n_points, b.size(), where, rep.violations);
            if (std::binary_search(b.begin(), b.end(), g))
                rep.violations.push_back(where + " " + block_text(b) + " contains its owner " + std::to_string(g));
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

FamilyReport validate_pointwise_family(const PointwiseFamily& family) {
    FamilyReport rep = validate_antiflag_family(family);
    if (!rep.ok) return rep;
    rep.ok = false;

    const int n = family.n_points;
    std::optional<PointwiseParams> common;
    for (int g = 0; g < n; ++g) {
        const auto& list = family.owner_blocks[static_cast<std::size_t>(g)];
        // Relabel P \ {g} onto 0..n-2 and validate as a tactical configuration.
        TacticalConfig local{n - 1, {}};
        for (const Block& b : list) {
            Block mapped;
            for (int p : b) mapped.push_back(p < g ? p : p - 1);
            local.blocks.push_back(std::move(mapped));
        }
        ValidationReport sub = validate_tactical_config(local);
        if (!sub.ok) {
            for (const auto& v : sub.violations)
                rep.violations.push_back("point " + std::to_string(g) + " (points above " + std::to_string(g) +
                                         " shifted down by one): " + v);
            continue;
        }
        PointwiseParams p{sub.params->blocks, sub.params->block_size, sub.params->replication};
        if (!common) {
            common = p;
        } else if (!(p == *common)) {
            rep.violations.push_back("point " + std::to_string(g) + " has (s,l,d) = (" + std::to_string(p.s) + "," +
                                     std::to_string(p.l) + "," + std::to_string(p.d) + "), point 0 has (" +
                                     std::to_string(common->s) + "," + std::to_string(common->l) + "," +
                                     std::to_string(common->d) + ")");
        }
    }
    if (!rep.violations.empty()) return rep;
    if (common->d * (n - 1) != common->l * common->s) {
        rep.violations.push_back("d(n-1) != ls");
        return rep;
    }
    rep.ok = true;
    rep.params = common;
    return rep;
}

std::vector<std::string> grouped_design_violations(const GroupedDesign& d) {
    std::vector<std::string> out;
    const int r = d.r, q = d.q, a = d.a, b = d.b;
    if (r < 1 || q < 2 || a < 1 || b < 1 || q - 1 != a * b) {
        out.push_back("parameters must satisfy q - 1 = ab with r >= 1, a, b >= 1 (got r=" + std::to_string(r) +
                      ", q=" + std::to_string(q) + ", a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
        return out;
    }
    const int n = r * q;
    if (d.groups.size() != static_cast<std::size_t>(r)) {
        out.push_back("expected " + std::to_string(r) + " groups");
        return out;
    }
    std::vector<int> group_of(static_cast<std::size_t>(n), -1);
    for (int j = 0; j < r; ++j) {
        const auto& grp = d.groups[static_cast<std::size_t>(j)];
        if (grp.size() != static_cast<std::size_t>(q)) out.push_back("group " + std::to_string(j) + " does not have q points");
        for (int p : grp) {
            if (p < 0 || p >= n) {
                out.push_back("group " + std::to_string(j) + " contains out-of-range point " + std::to_string(p));
            } else if (group_of[static_cast<std::size_t>(p)] != -1) {
                out.push_back("point " + std::to_string(p) + " lies in two groups");
            } else {
                group_of[static_cast<std::size_t>(p)] = j;
            }
        }
    }
    if (!out.empty()) return out;

    // Each (G_j, P_j) is a (q, q, a, a) configuration.
    if (d.group_blocks.size() != static_cast<std::size_t>(r)) {
        out.emplace_back("expected one block family per group");
        return out;
    }
    for (int j = 0; j < r; ++j) {
        const auto& fam = d.group_blocks[static_cast<std::size_t>(j)];
        std::map<int, int> count;
        bool shape_ok = fam.size() == static_cast<std::size_t>(q);
        for (const Block& blk : fam) {
            if (blk.size() != static_cast<std::size_t>(a)) shape_ok = false;
            for (int p : blk) {
                if (p < 0 || p >= n || group_of[static_cast<std::size_t>(p)] != j) shape_ok = false;
                else ++count[p];
            }
        }
        for (int p : d.groups[static_cast<std::size_t>(j)])
            if (count[p] != a) shape_ok = false;
        if (!shape_ok)
            out.push_back("group " + std::to_string(j) + " blocks do not form a (q,q,a,a) tactical configuration on the group");
    }
    if (!out.empty()) return out;

    // Spanning blocks: each contains exactly one block of every group family,
    // and every group block lies in exactly one spanning block.
    if (d.spanning_blocks.size() != static_cast<std::size_t>(q)) {
        out.emplace_back("expected q spanning blocks");
        return out;
    }
    for (int j = 0; j < r; ++j) {
        const auto& fam = d.group_blocks[static_cast<std::size_t>(j)];
        std::vector<int> used(fam.size(), 0);
        for (int i = 0; i < q; ++i) {
            const Block& span = d.spanning_blocks[static_cast<std::size_t>(i)];
            Block part;
            for (int p : span)
                if (p >= 0 && p < n && group_of[static_cast<std::size_t>(p)] == j) part.push_back(p);
            auto it = std::find(fam.begin(), fam.end(), part);
            if (it == fam.end()) {
                out.push_back("spanning block " + std::to_string(i) + " does not contain exactly one block of group " +
                              std::to_string(j));
            } else {
                ++used[static_cast<std::size_t>(it - fam.begin())];
            }
        }
        for (std::size_t h = 0; h < used.size(); ++h)
            if (used[h] != 1)
                out.push_back("block " + std::to_string(h) + " of group " + std::to_string(j) + " lies in " +
                              std::to_string(used[h]) + " spanning blocks, expected exactly one");
    }
    for (int i = 0; i < q; ++i)
        if (d.spanning_blocks[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(r * a))
            out.push_back("spanning block " + std::to_string(i) + " does not have r*a points");
    if (!out.empty()) return out;

    // X-partitions: b cells of size a partitioning G_h \ {g}.
    if (d.x_partitions.size() != static_cast<std::size_t>(n)) {
        out.emplace_back("expected one X-partition per point");
        return out;
    }
    for (int g = 0; g < n; ++g) {
        const auto& cells = d.x_partitions[static_cast<std::size_t>(g)];
        Block all;
        bool ok = cells.size() == static_cast<std::size_t>(b);
        for (const Block& c : cells) {
            if (c.size() != static_cast<std::size_t>(a)) ok = false;
            all.insert(all.end(), c.begin(), c.end());
        }
        std::sort(all.begin(), all.end());
        Block expected;
        for (int p : d.groups[static_cast<std::size_t>(group_of[static_cast<std::size_t>(g)])])
            if (p != g) expected.push_back(p);
        std::sort(expected.begin(), expected.end());
        if (!ok || all != expected)
            out.push_back("X-partition of point " + std::to_string(g) +
                          " is not a partition of its group minus itself into b cells of size a");
    }
    return out;
}

TacticalConfig cyclic_block_family(int q, int a) {
    if (q < 1 || a < 1 || a > q)
        throw ParameterError("cyclic block family needs 1 <= a <= q (got q=" + std::to_string(q) +
                             ", a=" + std::to_string(a) + ")");
    TacticalConfig cfg{q, {}};
    for (int i = 0; i < q; ++i) {
        Block b;
        for (int k = 0; k < a; ++k) b.push_back((i + k) % q);
        std::sort(b.begin(), b.end());
        cfg.blocks.push_back(std::move(b));
    }
    return cfg;
}

PointwiseFamily chunked_pointwise_family(int n, int s, int l, int d) {
    if (n < 2 || s < 1 || l < 1 || d < 1)
        throw ParameterError("chunked family needs positive n, s, l, d");
    if (d * (n - 1) != l * s)
        throw ParameterError("chunked family needs d(n-1) = ls (got n=" + std::to_string(n) + ", s=" +
                             std::to_string(s) + ", l=" + std::to_string(l) + ", d=" + std::to_string(d) + ")");
    if (l > n - 2) throw ParameterError("chunked family needs l <= n-2");
    if (d >= s) throw ParameterError("chunked family needs d < s");

    PointwiseFamily fam{n, {}};
    for (int g = 0; g < n; ++g) {
        std::vector<int> others;
        for (int p = 0; p < n; ++p)
            if (p != g) others.push_back(p);
        std::vector<int> stream;
        for (int rep = 0; rep < d; ++rep) stream.insert(stream.end(), others.begin(), others.end());
        std::vector<Block> blocks;
        for (int c = 0; c < s; ++c) {
            Block b(stream.begin() + c * l, stream.begin() + (c + 1) * l);
            std::sort(b.begin(), b.end());
            blocks.push_back(std::move(b));
        }
        fam.owner_blocks.push_back(std::move(blocks));
    }
    return fam;
}

namespace {

void extend_partition(std::vector<bool>& used, int cell_size, std::vector<Block>& current,
                      std::vector<std::vector<Block>>& out) {
    const auto first = std::find(used.begin(), used.end(), false);
    if (first == used.end()) {
        out.push_back(current);
        return;
    }
    const int lead = static_cast<int>(first - used.begin());
    std::vector<int> rest;
    for (int p = lead + 1; p < static_cast<int>(used.size()); ++p)
        if (!used[static_cast<std::size_t>(p)]) rest.push_back(p);

    // Combinations of cell_size - 1 companions for the least unused point.
    const int need = cell_size - 1;
    std::vector<int> idx(static_cast<std::size_t>(need));
    std::iota(idx.begin(), idx.end(), 0);
    const int m = static_cast<int>(rest.size());
    if (need > m) return;
    while (true) {
        Block cell{lead};
        for (int i : idx) cell.push_back(rest[static_cast<std::size_t>(i)]);
        for (int p : cell) used[static_cast<std::size_t>(p)] = true;
        current.push_back(cell);
        extend_partition(used, cell_size, current, out);
        current.pop_back();
        for (int p : cell) used[static_cast<std::size_t>(p)] = false;

        int pos = need - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - need + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < need; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        throw ParameterError("count overflows 64 bits");
    return a * b;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

}  // namespace

std::vector<std::vector<Block>> set_partitions(int cells, int cell_size) {
    if (cells < 1 || cell_size < 1) throw ParameterError("set partitions need positive cell count and size");
    std::vector<bool> used(static_cast<std::size_t>(cells * cell_size), false);
    std::vector<Block> current;
    std::vector<std::vector<Block>> out;
    extend_partition(used, cell_size, current, out);
    return out;
}

std::uint64_t partition_count(int s, int l) {
    // Place cells one at a time, the least remaining point leading each cell.
    std::uint64_t count = 1;
    for (int remaining = s * l; remaining > 0; remaining -= l)
        count = checked_mul(count, binomial(static_cast<std::uint64_t>(remaining - 1), static_cast<std::uint64_t>(l - 1)));
    return count;
}

PointwisePartitionSpace::PointwisePartitionSpace(int n, int s, int l) : n_(n), s_(s), l_(l) {
    if (s < 1 || l < 1 || l * s != n - 1)
        throw ParameterError("pointwise partitions need ls = n-1 (got n=" + std::to_string(n) + ", s=" +
                             std::to_string(s) + ", l=" + std::to_string(l) + ")");
    if (partition_count(s, l) > kMaxPartitionsPerPoint)
        throw ParameterError("pointwise partitions: " + std::to_string(partition_count(s, l)) +
                             " partitions per point is too many to list");
    partitions_ = set_partitions(s, l);
    size_ = 1;
    for (int g = 0; g < n && size_ != 0; ++g) {
        const std::uint64_t c = partitions_.size();
        size_ = size_ > std::numeric_limits<std::uint64_t>::max() / c ? 0 : size_ * c;
    }
}

PointwiseFamily PointwisePartitionSpace::from_choices(const std::vector<std::uint64_t>& choice) const {
    if (choice.size() != static_cast<std::size_t>(n_)) throw ParameterError("need one partition choice per point");
    PointwiseFamily fam{n_, {}};
    for (int g = 0; g < n_; ++g) {
        const std::uint64_t c = choice[static_cast<std::size_t>(g)];
        if (c >= partitions_.size()) throw ParameterError("partition choice out of range");
        std::vector<Block> blocks;
        for (const Block& local : partitions_[c]) {
            Block b;
            for (int x : local) b.push_back(x < g ? x : x + 1);
            blocks.push_back(std::move(b));
        }
        fam.owner_blocks.push_back(std::move(blocks));
    }
    return fam;
}

PointwiseFamily PointwisePartitionSpace::at(std::uint64_t index) const {
    if (size_ == 0) throw ParameterError("partition space too large to index; use from_choices");
    if (index >= size_) throw ParameterError("family index out of range");
    std::vector<std::uint64_t> choice(static_cast<std::size_t>(n_));
    const std::uint64_t c = partitions_.size();
    for (int g = n_ - 1; g >= 0; --g) {
        choice[static_cast<std::size_t>(g)] = index % c;
        index /= c;
    }
    return from_choices(choice);
}

PointwisePartitionSpace enumerate_pointwise_partitions(int n, int s, int l) { return {n, s, l}; }

bool is_prime(int n) {
    if (n < 2) return false;
    for (int f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

namespace {

// Normalised nonzero vectors of GF(p)^3: first nonzero coordinate is 1.
std::vector<std::array<int, 3>> projective_points(int p) {
    std::vector<std::array<int, 3>> pts;
    for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y)
            for (int z = 0; z < p; ++z) {
                const std::array<int, 3> v{x, y, z};
                const auto lead = std::find_if(v.begin(), v.end(), [](int c) { return c != 0; });
                if (lead != v.end() && *lead == 1) pts.push_back(v);
            }
    return pts;
}

}  // namespace

std::vector<Block> projective_plane_lines(int p) {
    if (!is_prime(p))
        throw ParameterError("projective planes are built over prime fields only; order " + std::to_string(p) +
                             " is not prime");
    const auto pts = projective_points(p);
    std::vector<Block> lines;
    for (const auto& dual : pts) {
        Block line;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const int dot = dual[0] * pts[i][0] + dual[1] * pts[i][1] + dual[2] * pts[i][2];
            if (dot % p == 0) line.push_back(static_cast<int>(i));
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

PointwiseFamily projective_plane_family(int p) {
    const std::vector<Block> lines = projective_plane_lines(p);
    const int n = p * p + p + 1;
    PointwiseFamily fam{n, std::vector<std::vector<Block>>(static_cast<std::size_t>(n))};
    for (const Block& line : lines)
        for (int x : line) {
            Block rest;
            for (int y : line)
                if (y != x) rest.push_back(y);
            fam.owner_blocks[static_cast<std::size_t>(x)].push_back(std::move(rest));
        }
    return fam;
}

}  // namespace dsrg
