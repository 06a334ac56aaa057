#include "dsrg/catalog.hpp"

#include "dsrg/canon.hpp"
#include "dsrg/classify.hpp"
#include "dsrg/construct1.hpp"
#include "dsrg/construct2.hpp"
#include "dsrg/error.hpp"
#include "dsrg/fixtures.hpp"
#include "dsrg/io.hpp"
#include "dsrg/schemes.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>

namespace dsrg {

bool CriterionResult::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.ok; });
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string str(const std::optional<DsrgParams>& p) { return p ? to_string(*p) : std::string("rejected"); }

class Checker {
public:
    explicit Checker(CriterionResult& r) : r_(r) {}
    bool operator()(bool ok, std::string text) {
        r_.checks.push_back({ok, std::move(text)});
        return ok;
    }
    void params(const std::string& what, const Digraph& g, const DsrgParams& expected) {
        const auto got = verify_dsrg(g).params;
        (*this)(got && *got == expected, what + " verifies as " + str(got) + ", expected " + to_string(expected));
    }
    void runtime(Clock::time_point t0, double limit) {
        const double s = since(t0);
        std::ostringstream os;
        os.precision(3);
        os << "runtime " << s << " s (limit " << limit << " s)";
        (*this)(s < limit, os.str());
    }

private:
    CriterionResult& r_;
};

template <typename T>
std::string join(const std::vector<T>& v) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << '}';
    return os.str();
}

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Blocks per point compared as sets.
bool same_family(const PointwiseFamily& a, const PointwiseFamily& b) {
    return a.n_points == b.n_points && family_key(a) == family_key(b);
}

void criterion1(Checker& check) {
    const auto t0 = Clock::now();
    const DsrgParams expected{100, 40, 18, 13, 18};
    const auto built = build_c1_general(2, 5, 2, 2);
    check.params("default grouped design (r=2,q=5,a=2,b=2)", built.graph, expected);
    check(expected_params_c1(C1Mode::general, 2, 5, 2, 2) == expected, "closed form gives (100,40,18,13,18)");

    const auto design = grouped_design_from_json(json::parse(fixture_file("grouped100.json")));
    const auto violations = grouped_design_violations(design);
    check(violations.empty(), "transcribed design satisfies every hypothesis" +
                                  (violations.empty() ? std::string() : ": " + violations.front()));
    const auto transcribed = build_c1_general(design);
    check.params("transcribed design", transcribed.graph, expected);
    const auto blocks = family_from_json(json::parse(fixture_file("grouped100_blocks.json")));
    check(same_family(transcribed.family, blocks), "blocks built from the transcribed design equal the transcribed block table");
    check.runtime(t0, 5);
}

void criterion2(Checker& check) {
    const auto t0 = Clock::now();
    struct Row {
        int q, r;
        DsrgParams p;
    };
    const std::vector<Row> rows{{3, 5, {45, 30, 22, 19, 22}},  {3, 6, {54, 36, 26, 23, 26}},  {3, 8, {72, 48, 34, 31, 34}},
                                {3, 9, {81, 54, 38, 35, 38}},  {3, 11, {99, 66, 46, 43, 46}}, {3, 12, {108, 72, 50, 47, 50}},
                                {5, 3, {75, 60, 52, 47, 52}},  {6, 3, {108, 90, 80, 74, 80}}};
    for (const auto& row : rows) {
        const auto built = build_c1_b1(row.r, row.q);
        check.params("b=1 build q=" + std::to_string(row.q) + " r=" + std::to_string(row.r), built.graph, row.p);
    }
    struct BlowRow {
        int q, r;
        DsrgParams p;
    };
    for (const auto& row : std::vector<BlowRow>{{3, 5, {90, 60, 44, 38, 44}}, {3, 6, {108, 72, 52, 46, 52}}}) {
        const auto built = build_c1_b1(row.r, row.q);
        check.params("m=2 blow-up of q=" + std::to_string(row.q) + " r=" + std::to_string(row.r),
                     blow_up(built.graph, Variant::d1, 2), row.p);
    }
    check.runtime(t0, 60);
}

void criterion3(Checker& check) {
    const auto built = build_c1_b1(2, 3);
    check.params("b=1 build r=2 q=3", built.graph, {18, 12, 10, 7, 10});
    check(!are_isomorphic(built.graph, transpose(built.graph)), "graph is not isomorphic to its transpose");
    const auto table = family_from_json(json::parse(fixture_file("b1_r2_q3.json")));
    check(same_family(built.family, table), "block lists equal the transcribed table");
}

void criterion4(Checker& check, unsigned jobs) {
    const std::uint64_t count = relaxed_choice_count(3, 2);
    std::vector<Digraph> graphs;
    for (std::uint64_t i = 0; i < count; ++i) graphs.push_back(build_c1_b1(3, 2, Pairing::relaxed, relaxed_choice_vector(3, 2, i)).graph);
    check(graphs.size() == 64, "relaxed enumeration yields " + std::to_string(graphs.size()) + " graphs (expected 64)");
    const bool all = std::all_of(graphs.begin(), graphs.end(), [](const Digraph& g) {
        const auto p = verify_dsrg(g).params;
        return p && *p == DsrgParams{12, 6, 4, 2, 4};
    });
    check(all, "every graph verifies as (12,6,4,2,4)");

    const auto report = classify_family(graphs, {true, jobs});
    check(report.classes.size() == 7, std::to_string(report.classes.size()) + " isomorphism classes (expected 7)");
    std::vector<std::size_t> sizes;
    std::vector<std::string> orders, names;
    for (const auto& c : report.classes) {
        sizes.push_back(c.size());
        orders.push_back(c.aut->order.str());
        names.push_back(c.aut->name);
    }
    check(sorted(sizes) == sorted(std::vector<std::size_t>{4, 6, 12, 12, 4, 2, 24}), "class sizes " + join(sizes));
    check(sorted(orders) == sorted(std::vector<std::string>{"12", "8", "4", "4", "12", "24", "2"}), "Aut orders " + join(orders));
    check(sorted(names) == sorted(std::vector<std::string>{"D12", "D8", "C2×C2", "C2×C2", "D12", "S4", "C2"}),
          "Aut names " + join(names));
    check(report.transpose_closure == 14,
          "transpose-closure has " + std::to_string(report.transpose_closure) + " classes (expected 14)");

    // Pair each class with its fixture and record which are self-transpose.
    std::vector<std::string> matched;
    std::vector<std::string> self;
    bool bijective = true;
    std::set<std::string> used;
    for (const auto& c : report.classes) {
        std::string hit;
        for (int i = 1; i <= 7; ++i)
            if (are_isomorphic(c.representative, load_fixture("N" + std::to_string(i)))) hit = "N" + std::to_string(i);
        matched.push_back(hit.empty() ? "-" : hit);
        if (hit.empty() || !used.insert(hit).second) bijective = false;
        if (c.self_transpose) self.push_back(hit);
    }
    check(bijective, "class representatives match fixtures " + join(matched) + " one-to-one");
    check(true, "self-transpose representatives: " + join(self));

    const auto table = family_from_json(json::parse(fixture_file("b1_r3_q2.json")));
    bool found = false;
    for (std::uint64_t i = 0; i < count && !found; ++i)
        found = same_family(build_c1_b1(3, 2, Pairing::relaxed, relaxed_choice_vector(3, 2, i)).family, table);
    check(found, "the transcribed (r=3,q=2) configuration is one of the 64");
}

void criterion5(Checker& check) {
    const auto t0 = Clock::now();
    struct Row {
        int r, q;
        DsrgParams p;
    };
    for (const auto& row : std::vector<Row>{{3, 2, {12, 6, 4, 2, 4}}, {5, 2, {20, 10, 6, 4, 6}}, {5, 3, {90, 30, 11, 8, 11}}, {6, 3, {108, 36, 13, 10, 13}}}) {
        const auto built = build_c1_a1(row.r, row.q);
        check.params("a=1 build r=" + std::to_string(row.r) + " q=" + std::to_string(row.q), built.graph, row.p);
    }
    check.runtime(t0, 30);
}

void criterion6(Checker& check, unsigned jobs) {
    const auto t0 = Clock::now();
    const auto space = enumerate_pointwise_partitions(5, 2, 2);
    std::vector<PointwiseFamily> families;
    for (std::uint64_t i = 0; i < space.size(); ++i) families.push_back(space.at(i));
    check(families.size() == 243, std::to_string(families.size()) + " families (expected 243)");

    const auto orbits = orbits_under_point_relabeling(families, 5);
    check(orbits.size() == 7, std::to_string(orbits.size()) + " orbits (expected 7)");
    std::vector<std::string> rows, expected_rows;
    std::size_t total = 0;
    bool stabilizer_identity = true;
    for (const auto& o : orbits) {
        rows.push_back(std::to_string(o.orbit_size) + "/" + o.stabilizer.order().str() + "/" + o.stabilizer_name);
        total += o.members.size();
        if (o.orbit_size * o.stabilizer.order() != 120) stabilizer_identity = false;
    }
    for (const char* r : {"15/8/D8", "30/4/C2×C2", "60/2/C2", "6/20/C5⋊C4", "60/2/C2", "60/2/C2", "12/10/D10"}) expected_rows.emplace_back(r);
    check(sorted(rows) == sorted(expected_rows), "orbit size/stabilizer order/name " + join(rows));
    check(total == 243 && stabilizer_identity, "orbits cover the 243 families and |orbit|·|stabilizer| = 120");

    std::vector<Digraph> graphs;
    for (const auto& f : families) graphs.push_back(build_d1(f));
    const bool all = std::all_of(graphs.begin(), graphs.end(), [](const Digraph& g) {
        const auto p = verify_dsrg(g).params;
        return p && *p == DsrgParams{10, 4, 2, 1, 2};
    });
    check(all, "all 243 D1 graphs verify as (10,4,2,1,2)");

    const auto certs = certificates(graphs, jobs);
    bool orbit_iso = true;
    for (const auto& o : orbits)
        for (std::size_t m : o.members)
            if (certs[m] != certs[o.representative]) orbit_iso = false;
    check(orbit_iso, "families in one orbit give isomorphic graphs");

    const auto report = classify_family(graphs, {false, jobs});
    check(report.classes.size() == 7, std::to_string(report.classes.size()) + " isomorphism classes (expected 7)");
    check(report.transpose_closure == 13,
          "transpose-closure has " + std::to_string(report.transpose_closure) + " classes (expected 13)");
    std::vector<const IsoClass*> self;
    for (const auto& c : report.classes)
        if (c.self_transpose) self.push_back(&c);
    check(self.size() == 1 && are_isomorphic(self.front()->representative, load_fixture("T7")),
          std::to_string(self.size()) + " self-transpose class(es), isomorphic to T7");

    std::set<std::string> closure;
    for (const auto& c : report.classes) {
        closure.insert(c.certificate);
        closure.insert(canonical_form(transpose(c.representative)).certificate);
    }
    const Digraph j8 = load_fixture("J8");
    bool disjoint = true;
    for (const Digraph& j : {j8, load_fixture("J9"), transpose(j8)})
        if (closure.count(canonical_form(j).certificate)) disjoint = false;
    check(disjoint, "none of the 13 is isomorphic to J8, J9 or transpose(J8)");

    bool fixtures_match = true;
    for (int i = 1; i <= 7; ++i) {
        const auto cert = canonical_form(load_fixture("T" + std::to_string(i))).certificate;
        if (std::none_of(report.classes.begin(), report.classes.end(), [&](const IsoClass& c) { return c.certificate == cert; }))
            fixtures_match = false;
    }
    check(fixtures_match, "fixtures T1..T7 each fall in one of the 7 classes");
    check.runtime(t0, 60);
}

// Kneser graph K(5,2), built directly from 2-subsets.
Digraph kneser_5_2() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
    Digraph g(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            const auto [a, b] = pairs[i];
            const auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) g.set_arc(i, j);
        }
    return g;
}

void criterion7(Checker& check) {
    const Digraph t4 = load_fixture("T4");
    const auto aut = automorphism_group(t4);
    check(aut.order() == 20, "|Aut(D(T4))| = " + aut.order().str());
    check(recognize_group(aut) == "C5⋊C4", "Aut(D(T4)) recognized as " + recognize_group(aut));
    check(aut.is_transitive(), "Aut(D(T4)) is vertex-transitive");

    const auto scheme = orbital_scheme(aut);
    check(scheme.classes() == 5, "orbital scheme has " + std::to_string(scheme.classes()) + " nondiagonal classes");
    check(!scheme.is_commutative(), "orbital scheme is non-commutative");

    const auto [n, rel] = parse_relation_matrix(fixture_file("scheme_T4.rel"));
    const auto printed = make_scheme(n, rel);
    check(printed.scheme.has_value(), "transcribed relation matrix satisfies the scheme axioms");
    if (!printed.scheme) return;
    const auto iso = find_scheme_isomorphism(*printed.scheme, scheme);
    check(iso.has_value(), "orbital scheme equals the transcribed relation matrix up to relabeling");
    if (!iso) return;
    auto ours = [&](std::initializer_list<int> printed_classes) {
        std::set<int> s;
        for (int c : printed_classes) s.insert(iso->class_map[static_cast<std::size_t>(c)]);
        return s;
    };
    auto mapped = [&](std::initializer_list<int> printed_classes) {
        std::vector<int> v;
        for (int c : printed_classes) v.push_back(iso->class_map[static_cast<std::size_t>(c)]);
        std::sort(v.begin(), v.end());
        return v;
    };

    // The printed matrix uses the vertex order of the T4 fixture.
    const auto printed_dec = relation_decomposition(*printed.scheme, t4);
    check(printed_dec.classes && *printed_dec.classes == std::set<int>{1, 3}, "arcs of D(T4) are R1 ∪ R3 in the printed labeling");
    const auto dec = relation_decomposition(scheme, t4);
    check(dec.classes && *dec.classes == ours({1, 3}), "arcs of D(T4) are the images of R1 ∪ R3 in the orbital scheme");
    // The printed matrix has R1 and R4 mutually transposed and R3 symmetric.
    const auto printed_dec_t = relation_decomposition(*printed.scheme, transpose(t4));
    check(printed_dec_t.classes && *printed_dec_t.classes == std::set<int>{3, 4},
          "arcs of transpose(D(T4)) are R3 ∪ R4 in the printed labeling");
    const auto dec_t = relation_decomposition(scheme, transpose(t4));
    check(dec_t.classes && *dec_t.classes == ours({3, 4}), "arcs of transpose(D(T4)) are the images of R3 ∪ R4");

    const auto fused = fuse(scheme, {mapped({1, 3, 4}), mapped({2, 5})});
    check(fused.scheme.has_value(), "fusion {{1,3,4},{2,5}} is feasible");
    if (fused.scheme) {
        check(fused.scheme->classes() == 2 && fused.scheme->is_symmetric(), "fused scheme is a symmetric 2-class scheme");
        const auto srg = verify_srg(relation_graph(*fused.scheme, {1}));
        check(srg.params && *srg.params == SrgParams{10, 6, 3, 4},
              "first fused relation graph is SRG" + (srg.params ? to_string(*srg.params) : std::string("-")));
    }
    const auto sym = verify_srg(symmetrize(t4));
    check(sym.params && *sym.params == SrgParams{10, 6, 3, 4}, "symmetrize(D(T4)) verifies as SRG-(10,6,3,4)");
    const Digraph petersen = complement(symmetrize(t4));
    const auto pet = verify_srg(petersen);
    const auto kneser = kneser_5_2();
    const auto kn = verify_srg(kneser);
    check(pet.params && *pet.params == SrgParams{10, 3, 0, 1} && kn.params && *kn.params == SrgParams{10, 3, 0, 1},
          "complement relation and K(5,2) both verify as SRG-(10,3,0,1)");
    check(are_isomorphic(petersen, kneser), "complement relation is isomorphic to the Kneser graph K(5,2)");
    const auto dec_p = relation_decomposition(scheme, petersen);
    check(dec_p.classes && *dec_p.classes == ours({2, 5}), "complement relation is the image of R2 ∪ R5");
}

std::vector<std::tuple<int, int, int, int>> admissible_c2_tuples(int max_vertices) {
    std::vector<std::tuple<int, int, int, int>> out;
    for (int n = 3; n * 2 <= max_vertices; ++n)
        for (int s = 2; n * s <= max_vertices; ++s)
            for (int l = 1; l <= n - 2; ++l)
                if ((l * s) % (n - 1) == 0) {
                    const int d = l * s / (n - 1);
                    if (d >= 1 && d < s) out.emplace_back(n, s, l, d);
                }
    return out;
}

void criterion8(Checker& check) {
    auto tuples = admissible_c2_tuples(200);
    std::mt19937_64 rng(8);
    std::vector<std::tuple<int, int, int, int>> picked;
    for (int i = 0; i < 20; ++i) picked.push_back(tuples[uniform_below(rng, tuples.size())]);
    picked.emplace_back(9, 2, 4, 1);  // the (18,8,4,3,4) family
    int ok = 0, total = 0;
    std::vector<std::string> failures;
    for (const auto& [n, s, l, d] : picked) {
        const std::string tag = "(n,s,l,d)=(" + std::to_string(n) + "," + std::to_string(s) + "," + std::to_string(l) + "," + std::to_string(d) + ")";
        std::vector<PointwiseFamily> families{chunked_pointwise_family(n, s, l, d)};
        if (d == 1) families.push_back(random_partition_family(n, s, l, rng));
        for (const auto& f : families)
            for (Variant v : {Variant::d1, Variant::d2}) {
                const Digraph g = v == Variant::d1 ? build_d1(f) : build_d2(f);
                const std::string vt = v == Variant::d1 ? "D1" : "D2";
                for (int m : {1, 2, 3}) {
                    const Digraph h = m == 1 ? g : blow_up(g, v, m);
                    const auto got = verify_dsrg(h).params;
                    const auto want = expected_params_c2(n, s, l, d, v, m);
                    ++total;
                    if (got && *got == want && (v == Variant::d2 || got->t == got->mu)) ++ok;
                    else failures.push_back(tag + " " + vt + " m=" + std::to_string(m) + ": " + str(got) + " vs " + to_string(want));
                }
            }
    }
    check(failures.empty(), std::to_string(ok) + "/" + std::to_string(total) +
                                " D1/D2 builds and m=2,3 blow-ups match the closed forms exactly (D1: t = mu)" +
                                (failures.empty() ? std::string() : "; first failure " + failures.front()));
}

void criterion9(Checker& check) {
    struct Row {
        int p;
        DsrgParams d1, d2;
    };
    for (const auto& row : std::vector<Row>{{2, {21, 6, 2, 1, 2}, {21, 8, 4, 3, 3}}, {3, {52, 12, 3, 2, 3}, {52, 15, 6, 5, 4}}}) {
        const auto f = projective_plane_family(row.p);
        check.params("PG(2," + std::to_string(row.p) + ") D1", build_d1(f), row.d1);
        check.params("PG(2," + std::to_string(row.p) + ") D2", build_d2(f), row.d2);
    }
}

void criterion10(Checker& check, const CatalogOptions& options) {
    const auto t0 = Clock::now();
    const PointwisePartitionSpace space(7, 2, 3);
    const auto r = sample_classes(space, Variant::d1, options.stretch_samples, options.stretch_seed, options.jobs);
    check(r.verified == r.samples && r.params && *r.params == DsrgParams{14, 6, 3, 2, 3},
          std::to_string(r.verified) + "/" + std::to_string(r.samples) + " sampled graphs verify as " + str(r.params));
    check(r.distinct >= 1985, std::to_string(r.distinct) + " distinct certificates from " + std::to_string(r.samples) +
                                  " samples (seed " + std::to_string(options.stretch_seed) + "), need >= 1985");
    std::ostringstream os;
    os.precision(3);
    os << "sampling took " << since(t0) << " s";
    check(true, os.str());
}

const std::map<int, std::string>& titles() {
    static const std::map<int, std::string> t{
        {1, "Construction I general: (100,40,18,13,18)"},
        {2, "Construction I b=1 parameter sweep and m=2 blow-ups"},
        {3, "b=1 (r=2,q=3): (18,12,10,7,10), not self-transpose"},
        {4, "relaxed b=1 (r=3,q=2): 64 graphs, 7 classes, 14 with transposes"},
        {5, "Construction I a=1 builds"},
        {6, "l=s=2 families: 243 families, 7 orbits, 13 graphs"},
        {7, "D(T4) automorphisms, orbital scheme and fusions"},
        {8, "Construction II property suite"},
        {9, "projective plane D1/D2 builds"},
        {10, "stretch: (14,6,3,2,3) classes by sampling"},
    };
    return t;
}

}  // namespace

CriterionResult run_criterion(int id, const CatalogOptions& options) {
    if (id < 1 || id > kCriterionCount) throw ParameterError("unknown criterion " + std::to_string(id));
    CriterionResult result;
    result.id = id;
    result.title = titles().at(id);
    result.gating = id != 10;
    Checker check(result);
    const auto t0 = Clock::now();
    try {
        switch (id) {
            case 1: criterion1(check); break;
            case 2: criterion2(check); break;
            case 3: criterion3(check); break;
            case 4: criterion4(check, options.jobs); break;
            case 5: criterion5(check); break;
            case 6: criterion6(check, options.jobs); break;
            case 7: criterion7(check); break;
            case 8: criterion8(check); break;
            case 9: criterion9(check); break;
            case 10: criterion10(check, options); break;
        }
    } catch (const std::exception& e) {
        check(false, std::string("exception: ") + e.what());
    }
    result.seconds = since(t0);
    return result;
}

std::vector<CriterionResult> run_catalog(const std::set<int>& ids, const CatalogOptions& options) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id)
        if (ids.empty() || ids.count(id)) out.push_back(run_criterion(id, options));
    return out;
}

}  // namespace dsrg
