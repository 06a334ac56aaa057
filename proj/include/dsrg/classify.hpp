#pragma once

#include "dsrg/canon.hpp"
#include "dsrg/construct2.hpp"
#include "dsrg/designs.hpp"
#include "dsrg/graphs.hpp"
#include "dsrg/perm_group.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace dsrg {

struct AutSummary {
    BigCount order;
    std::string name;  // recognize_group
    bool transitive = false;
    std::vector<Permutation> generators;
};

AutSummary summarize_automorphisms(const Digraph& g);

struct IsoClass {
    std::string certificate;  // raw bytes
    Digraph representative;   // first member in input order
    std::vector<std::size_t> members;
    std::optional<AutSummary> aut;
    bool self_transpose = false;

    std::size_t size() const noexcept { return members.size(); }
};

struct IsoClassReport {
    std::size_t input_count = 0;
    std::vector<IsoClass> classes;  // by first appearance
    // Classes after adjoining the transpose of every representative.
    std::size_t transpose_closure = 0;
};

struct ClassifyOptions {
    bool automorphisms = true;
    unsigned jobs = 1;
};

IsoClassReport classify_family(std::span<const Digraph> graphs, const ClassifyOptions& options = {});

// Certificates of many graphs, computed on `jobs` threads; result order follows input.
std::vector<std::string> certificates(std::span<const Digraph> graphs, unsigned jobs = 1);

/// Point g of the result owns {sigma(B) : B in owner_blocks[sigma^-1(g)]},
/// each block re-sorted; block lists are sorted so that families compare as
/// per-point sets of blocks.
PointwiseFamily relabel_points(const PointwiseFamily& family, const Permutation& sigma);

// Relabeling-independent form of the family: per point, the sorted list of blocks.
std::vector<std::vector<Block>> family_key(const PointwiseFamily& family);

struct FamilyOrbit {
    std::size_t representative;  // index into the input
    std::vector<std::size_t> members;  // input indices in this orbit
    std::size_t orbit_size = 0;  // full S_n orbit, including images absent from the input
    PermGroup stabilizer;
    std::string stabilizer_name;
};

/// S_n acting on families by relabeling points. Throws ParameterError for
/// n > 8 (use sample_classes instead) or families on other point counts.
std::vector<FamilyOrbit> orbits_under_point_relabeling(std::span<const PointwiseFamily> families, int n);

struct SampleReport {
    std::uint64_t samples = 0;
    std::uint64_t verified = 0;
    std::size_t distinct = 0;  // distinct certificates among verified graphs
    std::optional<DsrgParams> params;  // common verified parameters, if all agree
};

/// Draws `samples` uniform members of the partition space (seeded
/// mt19937_64, rejection-sampled digits so the stream is platform
/// independent), builds each D1/D2 graph and counts distinct certificates.
/// The count is a lower bound on the number of isomorphism classes.
SampleReport sample_classes(const PointwisePartitionSpace& space, Variant variant, std::uint64_t samples,
                            std::uint64_t seed, unsigned jobs = 1);

/// A uniformly random d = 1 family: each point shuffles the other n-1 points
/// and cuts them into s cells of size l. Throws ParameterError unless ls = n-1.
PointwiseFamily random_partition_family(int n, int s, int l, std::mt19937_64& rng);

// Uniform integer in [0, bound) from a 64-bit engine by rejection.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace dsrg
