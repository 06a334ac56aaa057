#include "dsrg/classify.hpp"

#include "dsrg/error.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace dsrg {

namespace {

template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace

AutSummary summarize_automorphisms(const Digraph& g) {
    auto search = canonical_search(g);
    PermGroup group(g.size(), std::move(search.automorphisms));
    if (group.order() != search.orbit_product)
        throw std::logic_error("automorphism group order disagrees with the search tree");
    AutSummary s;
    s.order = group.order();
    s.name = recognize_group(group);
    s.transitive = group.is_transitive();
    s.generators = group.generators();
    return s;
}

std::vector<std::string> certificates(std::span<const Digraph> graphs, unsigned jobs) {
    std::vector<std::string> out(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i) { out[i] = canonical_form(graphs[i]).certificate; });
    return out;
}

IsoClassReport classify_family(std::span<const Digraph> graphs, const ClassifyOptions& options) {
    IsoClassReport report;
    report.input_count = graphs.size();
    const auto certs = certificates(graphs, options.jobs);

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        auto [it, fresh] = index.emplace(certs[i], report.classes.size());
        if (fresh) {
            IsoClass c;
            c.certificate = certs[i];
            c.representative = graphs[i];
            report.classes.push_back(std::move(c));
        }
        report.classes[it->second].members.push_back(i);
    }

    std::vector<std::string> transposed(report.classes.size());
    parallel_for(report.classes.size(), options.jobs, [&](std::size_t i) {
        auto& c = report.classes[i];
        transposed[i] = canonical_form(transpose(c.representative)).certificate;
        c.self_transpose = transposed[i] == c.certificate;
        if (options.automorphisms) c.aut = summarize_automorphisms(c.representative);
    });

    std::set<std::string> closure;
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
        closure.insert(report.classes[i].certificate);
        closure.insert(transposed[i]);
    }
    report.transpose_closure = closure.size();
    return report;
}

PointwiseFamily relabel_points(const PointwiseFamily& family, const Permutation& sigma) {
    PointwiseFamily out;
    out.n_points = family.n_points;
    out.owner_blocks.resize(family.owner_blocks.size());
    for (std::size_t g = 0; g < family.owner_blocks.size(); ++g) {
        auto& dest = out.owner_blocks[static_cast<std::size_t>(sigma(static_cast<int>(g)))];
        for (const auto& b : family.owner_blocks[g]) {
            Block image;
            image.reserve(b.size());
            for (int x : b) image.push_back(sigma(x));
            std::sort(image.begin(), image.end());
            dest.push_back(std::move(image));
        }
        std::sort(dest.begin(), dest.end());
    }
    return out;
}

std::vector<std::vector<Block>> family_key(const PointwiseFamily& family) {
    std::vector<std::vector<Block>> key = family.owner_blocks;
    for (auto& blocks : key) {
        for (auto& b : blocks) std::sort(b.begin(), b.end());
        std::sort(blocks.begin(), blocks.end());
    }
    return key;
}

std::vector<FamilyOrbit> orbits_under_point_relabeling(std::span<const PointwiseFamily> families, int n) {
    if (n > 8)
        throw ParameterError("orbits_under_point_relabeling: " + std::to_string(n) +
                             "! relabelings is too many; use sampling mode");
    if (n < 1) throw ParameterError("orbits_under_point_relabeling: n must be positive");
    for (const auto& f : families)
        if (f.n_points != n || static_cast<int>(f.owner_blocks.size()) != n)
            throw ParameterError("orbits_under_point_relabeling: family is not on " + std::to_string(n) + " points");

    std::vector<Permutation> all;
    {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        do all.emplace_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }

    std::map<std::vector<std::vector<Block>>, std::size_t> index;
    for (std::size_t i = 0; i < families.size(); ++i) index.emplace(family_key(families[i]), i);

    std::vector<char> assigned(families.size(), 0);
    std::vector<FamilyOrbit> orbits;
    for (std::size_t i = 0; i < families.size(); ++i) {
        if (assigned[i]) continue;
        const auto key = family_key(families[i]);
        std::set<std::vector<std::vector<Block>>> images;
        std::vector<Permutation> stabilizer;
        for (const auto& sigma : all) {
            auto image = family_key(relabel_points(families[i], sigma));
            if (image == key) stabilizer.push_back(sigma);
            images.insert(std::move(image));
        }
        FamilyOrbit orbit;
        orbit.representative = i;
        orbit.orbit_size = images.size();
        for (std::size_t j = i; j < families.size(); ++j)
            if (!assigned[j] && images.count(family_key(families[j]))) {
                assigned[j] = 1;
                orbit.members.push_back(j);
            }
        orbit.stabilizer = group_from_elements(static_cast<std::size_t>(n), stabilizer);
        if (orbit.stabilizer.order() != stabilizer.size())
            throw std::logic_error("stabilizer generators do not reproduce the stabilizer");
        orbit.stabilizer_name = recognize_group(orbit.stabilizer);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw ParameterError("uniform_below: empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

PointwiseFamily random_partition_family(int n, int s, int l, std::mt19937_64& rng) {
    if (s < 1 || l < 1 || l * s != n - 1) throw ParameterError("random_partition_family: need ls = n-1");
    PointwiseFamily family{n, {}};
    for (int g = 0; g < n; ++g) {
        std::vector<int> others;
        for (int x = 0; x < n; ++x)
            if (x != g) others.push_back(x);
        for (std::size_t i = others.size(); i > 1; --i) std::swap(others[i - 1], others[uniform_below(rng, i)]);
        std::vector<Block> cells;
        for (int c = 0; c < s; ++c) {
            Block b(others.begin() + c * l, others.begin() + (c + 1) * l);
            std::sort(b.begin(), b.end());
            cells.push_back(std::move(b));
        }
        std::sort(cells.begin(), cells.end());
        family.owner_blocks.push_back(std::move(cells));
    }
    return family;
}

SampleReport sample_classes(const PointwisePartitionSpace& space, Variant variant, std::uint64_t samples,
                            std::uint64_t seed, unsigned jobs) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::uint64_t>> choices(samples);
    for (auto& c : choices) {
        c.resize(static_cast<std::size_t>(space.n()));
        for (auto& digit : c) digit = uniform_below(rng, space.partitions_per_point());
    }

    std::vector<std::string> certs(samples);
    std::vector<std::optional<DsrgParams>> params(samples);
    parallel_for(samples, jobs, [&](std::size_t i) {
        const auto family = space.from_choices(choices[i]);
        const Digraph g = variant == Variant::d1 ? build_d1(family) : build_d2(family);
        params[i] = verify_dsrg(g).params;
        if (params[i]) certs[i] = canonical_form(g).certificate;
    });

    SampleReport report;
    report.samples = samples;
    std::set<std::string> distinct;
    bool agree = true;
    for (std::size_t i = 0; i < samples; ++i) {
        if (!params[i]) continue;
        ++report.verified;
        distinct.insert(std::move(certs[i]));
        if (!report.params) report.params = params[i];
        else if (*report.params != *params[i]) agree = false;
    }
    if (!agree) report.params.reset();
    report.distinct = distinct.size();
    return report;
}

}  // namespace dsrg
