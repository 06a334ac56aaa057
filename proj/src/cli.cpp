#include "dsrg/cli.hpp"

#include "dsrg/canon.hpp"
#include "dsrg/catalog.hpp"
#include "dsrg/classify.hpp"
#include "dsrg/construct1.hpp"
#include "dsrg/construct2.hpp"
#include "dsrg/error.hpp"
#include "dsrg/fixtures.hpp"
#include "dsrg/io.hpp"
#include "dsrg/schemes.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

namespace dsrg {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Raised by subcommands to report a verification failure after output was written.
struct VerificationFailure {
    std::string message;
};

unsigned default_jobs() {
    if (const char* env = std::getenv("DSRG_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    std::string command;
    unsigned jobs = 1;
    std::string format = "digraph01";
    std::string out_path;

    void emit(const std::string& text) const {
        if (out_path.empty() || out_path == "-") out << text;
        else write_text_file(out_path, text);
    }
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParameterError("expected a comma-separated integer list, got '" + text + "'");
        }
    }
    return v;
}

json graph_report(const Context& ctx, const Digraph& g, const json& construction, std::optional<DsrgParams> expected,
                  const std::vector<std::string>& warnings, Clock::time_point t0, bool with_aut) {
    const auto verdict = verify_dsrg(g);
    json r;
    r["command"] = ctx.command;
    r["construction"] = construction;
    r["verification"] = verdict_to_json(verdict);
    if (expected) {
        r["expected"] = params_to_json(*expected);
        r["matches_expected"] = verdict.params && *verdict.params == *expected;
    }
    if (!warnings.empty()) r["warnings"] = warnings;
    const auto search = canonical_search(g);
    r["certificate"] = to_hex(search.form.certificate);
    if (with_aut) {
        PermGroup aut(g.size(), search.automorphisms);
        r["automorphism_group"] = {{"order", aut.order().str()}, {"name", recognize_group(aut)}, {"vertex_transitive", aut.is_transitive()}};
    }
    r["graph"] = digraph_to_json(g);
    r["seconds"] = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

// Writes graphs in the chosen format; returns false if any fails to verify.
bool write_graphs(const Context& ctx, const std::vector<Digraph>& graphs, const json& construction,
                  const std::vector<std::optional<DsrgParams>>& expected, const std::vector<std::vector<std::string>>& warnings,
                  Clock::time_point t0, bool with_aut) {
    bool ok = true;
    std::string text;
    json reports = json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto verdict = verify_dsrg(graphs[i]);
        if (!verdict.params || (expected[i] && *verdict.params != *expected[i])) ok = false;
        for (const auto& w : warnings[i]) ctx.err << "warning: " << w << '\n';
        if (ctx.format == "json") reports.push_back(graph_report(ctx, graphs[i], construction, expected[i], warnings[i], t0, with_aut));
        else text += format_digraph01(graphs[i]);
    }
    if (ctx.format == "json") ctx.emit((graphs.size() == 1 ? reports.front() : reports).dump(2) + "\n");
    else ctx.emit(text);
    return ok;
}

std::vector<std::pair<std::string, Digraph>> read_inputs(const Context& ctx, const std::vector<std::string>& inputs) {
    std::vector<std::pair<std::string, Digraph>> graphs;
    auto add_stream = [&](const std::string& name, std::vector<Digraph> gs) {
        for (std::size_t i = 0; i < gs.size(); ++i)
            graphs.emplace_back(gs.size() == 1 ? name : name + "#" + std::to_string(i), std::move(gs[i]));
    };
    if (inputs.empty() || (inputs.size() == 1 && inputs.front() == "-")) {
        std::ostringstream os;
        os << ctx.in.rdbuf();
        std::istringstream in(os.str());
        add_stream("stdin", read_digraph01_stream(in));
        return graphs;
    }
    for (const auto& path : inputs) {
        if (fs::is_directory(path)) {
            std::vector<fs::path> files;
            for (const auto& e : fs::directory_iterator(path))
                if (e.is_regular_file()) files.push_back(e.path());
            std::sort(files.begin(), files.end());
            for (const auto& f : files) add_stream(f.string(), read_digraph_stream_file(f.string()));
        } else {
            add_stream(path, read_digraph_stream_file(path));
        }
    }
    return graphs;
}

std::string describe(const DsrgVerdict& v) {
    if (!v.params) return "not a DSRG: " + to_string(*v.witness);
    std::string s = "DSRG " + to_string(*v.params);
    for (const auto& a : v.advisories) s += " [" + a + "]";
    return s;
}

void print_classes(const Context& ctx, const IsoClassReport& report) {
    if (ctx.format == "json") {
        ctx.emit(iso_report_to_json(report).dump(2) + "\n");
        return;
    }
    std::ostringstream os;
    os << report.input_count << " graphs, " << report.classes.size() << " isomorphism classes, " << report.transpose_closure
       << " after adjoining transposes\n";
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
        const auto& c = report.classes[i];
        const auto v = verify_dsrg(c.representative);
        os << "class " << i + 1 << ": size " << c.size() << ", first input " << c.members.front() << ", "
           << (v.params ? to_string(*v.params) : std::string("not a DSRG"));
        if (c.aut) os << ", Aut order " << c.aut->order << " (" << c.aut->name << ")";
        os << ", " << (c.self_transpose ? "self-transpose" : "not self-transpose") << '\n';
    }
    ctx.emit(os.str());
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Context ctx{in, out, err, {}, default_jobs(), "digraph01", {}};
    for (const auto& a : args) ctx.command += (ctx.command.empty() ? "" : " ") + a;

    CLI::App app{"Directed strongly regular graphs from antiflag constructions", "dsrg"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");
    const auto formats = CLI::IsMember({"digraph01", "json"});
    const auto text_or_json = CLI::IsMember({"text", "json"});

    // construct
    auto* construct = app.add_subcommand("construct", "Build a graph by Construction I (c1) or II (c2)");
    construct->require_subcommand(1);

    auto* c1 = construct->add_subcommand("c1", "Construction I");
    std::string mode = "general", pairing = "strict", pi_text, input_path;
    int r = 2, q = 5, a = 2, b = 2;
    std::uint64_t choice = 0;
    bool enumerate_all = false, with_aut = false;
    c1->add_option("--mode", mode, "general | b1 | a1")->check(CLI::IsMember({"general", "b1", "a1"}))->capture_default_str();
    c1->add_option("--r", r, "number of groups")->capture_default_str();
    c1->add_option("--q", q, "group size")->capture_default_str();
    c1->add_option("--a", a, "block size within a group (general mode)")->capture_default_str();
    c1->add_option("--b", b, "blocks per X-partition (general mode)")->capture_default_str();
    c1->add_option("--pairing", pairing, "b1 pairing: strict | relaxed")->check(CLI::IsMember({"strict", "relaxed"}))->capture_default_str();
    c1->add_option("--choice", choice, "relaxed pairing choice index")->capture_default_str();
    c1->add_flag("--enumerate", enumerate_all, "emit every relaxed pairing choice as a stream");
    c1->add_option("--pi", pi_text, "a1 part map as a comma-separated list, one entry per point");
    c1->add_option("--input", input_path, "GroupedDesign JSON (general mode)");

    auto* c2 = construct->add_subcommand("c2", "Construction II");
    int n = 5, s = 2, l = 2, d = 1, m = 1, projective = 0;
    std::string variant = "d1";
    std::optional<std::uint64_t> random_seed;
    c2->add_option("--n", n, "points")->capture_default_str();
    c2->add_option("--s", s, "blocks per point")->capture_default_str();
    c2->add_option("--l", l, "block size")->capture_default_str();
    c2->add_option("--d", d, "replication over the other points")->capture_default_str();
    c2->add_option("--variant", variant, "d1 | d2")->check(CLI::IsMember({"d1", "d2"}))->capture_default_str();
    c2->add_option("--m", m, "blow-up copies")->check(CLI::PositiveNumber)->capture_default_str();
    c2->add_option("--input", input_path, "PointwiseFamily JSON");
    c2->add_option("--projective", projective, "use the lines of PG(2,p) for prime p");
    c2->add_option("--random-seed", random_seed, "random d=1 partition family from this seed");

    for (auto* sub : {c1, c2}) {
        sub->add_option("--out", ctx.out_path, "output path (default stdout)");
        sub->add_option("--format", ctx.format, "digraph01 | json")->check(formats)->capture_default_str();
        sub->add_flag("--aut", with_aut, "include the automorphism group in JSON reports");
    }

    // verify
    auto* verify = app.add_subcommand("verify", "Check the DSRG (or SRG) identity exactly");
    std::vector<std::string> inputs;
    bool as_srg = false;
    std::string report_format = "text";
    verify->add_option("inputs", inputs, "digraph01/JSON files or directories ('-' or none: stdin)");
    verify->add_flag("--srg", as_srg, "check the undirected identity instead");
    verify->add_option("--format", report_format, "text | json")->check(text_or_json)->capture_default_str();
    verify->add_flag("--aut", with_aut, "also report certificate and automorphism group");

    // classify
    auto* classify = app.add_subcommand("classify", "Group graphs into isomorphism classes");
    bool no_aut = false;
    classify->add_option("inputs", inputs, "files, directories or '-' for stdin");
    classify->add_flag("--no-aut", no_aut, "skip automorphism groups");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "Exhaust or sample the d=1 partition families of (n, s, l)");
    std::uint64_t samples = 0, seed = 1;
    std::string stream_out;
    enumerate->add_option("--n", n, "points")->required();
    enumerate->add_option("--s", s, "cells per point")->required();
    enumerate->add_option("--l", l, "cell size")->required();
    enumerate->add_option("--variant", variant, "d1 | d2")->check(CLI::IsMember({"d1", "d2"}))->capture_default_str();
    enumerate->add_option("--sample", samples, "draw this many seeded samples instead of enumerating");
    enumerate->add_option("--seed", seed, "sampling seed")->capture_default_str();
    enumerate->add_option("--graphs-out", stream_out, "also write every graph as a digraph01 stream (exhaustive only)");
    enumerate->add_flag("--no-aut", no_aut, "skip automorphism groups");

    // orbits
    auto* orbits = app.add_subcommand("orbits", "Orbits of families under relabeling of points");
    orbits->add_option("--n", n, "points (d=1 partition families)");
    orbits->add_option("--s", s, "cells per point");
    orbits->add_option("--l", l, "cell size");
    orbits->add_option("--input", input_path, "JSON array of PointwiseFamily objects instead");

    // scheme
    auto* scheme_cmd = app.add_subcommand("scheme", "Orbital scheme of Aut(G) and its fusions");
    std::string graph_path, relation_out;
    scheme_cmd->add_option("graph", graph_path, "digraph01/JSON file or fixture name")->required();
    scheme_cmd->add_option("--relation-out", relation_out, "write the relation matrix as text");

    // catalog
    auto* catalog = app.add_subcommand("catalog", "Run the regression suite");
    std::string only;
    CatalogOptions catalog_options;
    catalog->add_option("--only", only, "comma-separated criterion ids");
    catalog->add_option("--samples", catalog_options.stretch_samples, "samples for the stretch criterion")->capture_default_str();
    catalog->add_option("--seed", catalog_options.stretch_seed, "seed for the stretch criterion")->capture_default_str();

    // fixture
    auto* fixture = app.add_subcommand("fixture", "Print a transcribed fixture matrix");
    std::string fixture_name;
    fixture->add_option("name", fixture_name, "N1..N7, T1..T7, J8, J9, T4_sym")->required();

    for (auto* sub : {verify, classify, enumerate, orbits, scheme_cmd, catalog, fixture}) {
        if (sub != verify) sub->add_option("--format", report_format, "text | json")->check(text_or_json)->capture_default_str();
        if (sub != fixture) sub->add_option("--out", ctx.out_path, "output path (default stdout)");
    }
    for (auto* sub : {classify, enumerate, catalog})
        sub->add_option("--jobs", ctx.jobs, "worker threads (default $DSRG_JOBS or 1)")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        if (const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front()) err << sub->help();
        return kExitUsage;
    }

    const auto t0 = Clock::now();
    try {
        if (construct->parsed()) {
            std::vector<Digraph> graphs;
            std::vector<std::optional<DsrgParams>> expected;
            std::vector<std::vector<std::string>> warnings;
            json construction;
            if (c1->parsed()) {
                construction = {{"construction", "c1"}, {"mode", mode}, {"r", r}, {"q", q}};
                if (mode == "general") {
                    GroupedDesign design = input_path.empty() ? default_grouped_design(r, q, a, b)
                                                              : grouped_design_from_json(json::parse(read_text_file(input_path)));
                    construction["a"] = design.a;
                    construction["b"] = design.b;
                    construction["r"] = design.r;
                    construction["q"] = design.q;
                    auto res = build_c1_general(design);
                    graphs.push_back(std::move(res.graph));
                    expected.push_back(expected_params_c1(C1Mode::general, design.r, design.q, design.a, design.b));
                    warnings.push_back(res.warnings);
                } else if (mode == "b1") {
                    construction["pairing"] = pairing;
                    if (pairing == "strict") {
                        auto res = build_c1_b1(r, q);
                        graphs.push_back(std::move(res.graph));
                        warnings.push_back(res.warnings);
                    } else {
                        const std::uint64_t total = relaxed_choice_count(r, q);
                        const std::uint64_t first = enumerate_all ? 0 : choice;
                        const std::uint64_t last = enumerate_all ? total : choice + 1;
                        if (enumerate_all && total > 1000000)
                            throw ParameterError("relaxed enumeration has " + std::to_string(total) + " members; pick one with --choice");
                        for (std::uint64_t i = first; i < last; ++i) {
                            auto res = build_c1_b1(r, q, Pairing::relaxed, relaxed_choice_vector(r, q, i));
                            graphs.push_back(std::move(res.graph));
                            warnings.push_back(res.warnings);
                        }
                        if (!enumerate_all) construction["choice"] = choice;
                    }
                    expected.assign(graphs.size(), expected_params_c1(C1Mode::b1, r, q));
                } else {
                    auto res = pi_text.empty() ? build_c1_a1(r, q) : build_c1_a1(r, q, parse_int_list(pi_text));
                    graphs.push_back(std::move(res.graph));
                    expected.push_back(expected_params_c1(C1Mode::a1, r, q));
                    warnings.push_back(res.warnings);
                }
            } else {
                const Variant v = variant == "d1" ? Variant::d1 : Variant::d2;
                PointwiseFamily family;
                if (!input_path.empty()) family = family_from_json(json::parse(read_text_file(input_path)));
                else if (projective) family = projective_plane_family(projective);
                else if (random_seed) {
                    std::mt19937_64 rng(*random_seed);
                    family = random_partition_family(n, s, l, rng);
                } else family = chunked_pointwise_family(n, s, l, d);
                const auto report = validate_pointwise_family(family);
                if (!report.ok) throw ConstructionError("family is not admissible: " + report.violations.front());
                const auto p = *report.params;
                Digraph g = v == Variant::d1 ? build_d1(family) : build_d2(family);
                if (m > 1) g = blow_up(g, v, m);
                construction = {{"construction", "c2"}, {"variant", variant}, {"n", family.n_points}, {"s", p.s},
                                {"l", p.l}, {"d", p.d}, {"m", m}};
                expected.push_back(expected_params_c2(family.n_points, p.s, p.l, p.d, v, m));
                graphs.push_back(std::move(g));
                warnings.emplace_back();
            }
            if (!write_graphs(ctx, graphs, construction, expected, warnings, t0, with_aut))
                throw VerificationFailure{"constructed graph does not verify with the expected parameters"};
            return kExitOk;
        }

        if (verify->parsed()) {
            const auto graphs = read_inputs(ctx, inputs);
            bool ok = true;
            json reports = json::array();
            std::ostringstream os;
            for (const auto& [name, g] : graphs) {
                json r = {{"input", name}};
                if (as_srg) {
                    const auto v = verify_srg(g);
                    ok = ok && v.params.has_value();
                    if (v.params) {
                        r["srg"] = true;
                        r["params"] = {{"v", v.params->v}, {"k", v.params->k}, {"lambda", v.params->lambda}, {"mu", v.params->mu}};
                        os << name << ": SRG " << to_string(*v.params) << '\n';
                    } else {
                        r["srg"] = false;
                        r["witness"] = to_string(*v.witness);
                        os << name << ": not an SRG: " << to_string(*v.witness) << '\n';
                    }
                } else {
                    const auto v = verify_dsrg(g);
                    ok = ok && v.params.has_value();
                    r.update(verdict_to_json(v));
                    os << name << ": " << describe(v);
                    if (with_aut) {
                        const auto aut = summarize_automorphisms(g);
                        r["certificate"] = to_hex(canonical_form(g).certificate);
                        r["automorphism_group"] = aut_to_json(aut);
                        os << ", Aut order " << aut.order << " (" << aut.name << ")";
                    }
                    os << '\n';
                }
                reports.push_back(std::move(r));
            }
            ctx.emit(report_format == "json" ? reports.dump(2) + "\n" : os.str());
            if (!ok) throw VerificationFailure{"verification failed"};
            return kExitOk;
        }

        ctx.format = report_format;

        if (classify->parsed()) {
            std::vector<Digraph> graphs;
            for (auto& [name, g] : read_inputs(ctx, inputs)) graphs.push_back(std::move(g));
            print_classes(ctx, classify_family(graphs, {!no_aut, ctx.jobs}));
            return kExitOk;
        }

        if (enumerate->parsed()) {
            const Variant v = variant == "d1" ? Variant::d1 : Variant::d2;
            const PointwisePartitionSpace space(n, s, l);
            if (samples > 0) {
                const auto rep = sample_classes(space, v, samples, seed, ctx.jobs);
                json j = {{"command", ctx.command}, {"n", n}, {"s", s}, {"l", l}, {"variant", variant}, {"samples", rep.samples},
                          {"seed", seed}, {"verified", rep.verified}, {"distinct_certificates", rep.distinct},
                          {"space_size", space.size() ? json(space.size()) : json("overflow")}};
                if (rep.params) j["params"] = params_to_json(*rep.params);
                if (ctx.format == "json") ctx.emit(j.dump(2) + "\n");
                else
                    ctx.emit(std::to_string(rep.samples) + " samples (seed " + std::to_string(seed) + "), " +
                             std::to_string(rep.verified) + " verified" + (rep.params ? " as " + to_string(*rep.params) : "") +
                             ", at least " + std::to_string(rep.distinct) + " isomorphism classes\n");
                if (rep.verified != rep.samples) throw VerificationFailure{"some sampled graphs do not verify"};
                return kExitOk;
            }
            if (space.size() == 0 || space.size() > 2000000)
                throw ParameterError("space has " + (space.size() ? std::to_string(space.size()) : std::string("> 2^64")) +
                                     " members; use --sample N");
            std::vector<Digraph> graphs;
            std::string stream;
            bool all_ok = true;
            for (std::uint64_t i = 0; i < space.size(); ++i) {
                const auto f = space.at(i);
                graphs.push_back(v == Variant::d1 ? build_d1(f) : build_d2(f));
                if (!verify_dsrg(graphs.back())) all_ok = false;
                if (!stream_out.empty()) stream += format_digraph01(graphs.back());
            }
            if (!stream_out.empty()) write_text_file(stream_out, stream);
            print_classes(ctx, classify_family(graphs, {!no_aut, ctx.jobs}));
            if (!all_ok) throw VerificationFailure{"some enumerated graphs do not verify"};
            return kExitOk;
        }

        if (orbits->parsed()) {
            std::vector<PointwiseFamily> families;
            int points = n;
            if (!input_path.empty()) {
                const json j = json::parse(read_text_file(input_path));
                if (!j.is_array()) throw FormatError("orbits --input expects a JSON array of families");
                for (const auto& e : j) families.push_back(family_from_json(e));
                if (families.empty()) throw FormatError("orbits --input: no families");
                points = families.front().n_points;
            } else {
                const PointwisePartitionSpace space(n, s, l);
                if (space.size() == 0 || space.size() > 2000000) throw ParameterError("too many families to enumerate");
                for (std::uint64_t i = 0; i < space.size(); ++i) families.push_back(space.at(i));
            }
            const auto result = orbits_under_point_relabeling(families, points);
            if (ctx.format == "json") {
                ctx.emit(json{{"command", ctx.command}, {"family_count", families.size()}, {"orbits", orbits_to_json(result, families)}}.dump(2) + "\n");
            } else {
                std::ostringstream os;
                os << families.size() << " families, " << result.size() << " orbits\n";
                for (std::size_t i = 0; i < result.size(); ++i) {
                    const auto& o = result[i];
                    os << "orbit " << i + 1 << ": size " << o.orbit_size << ", stabilizer order " << o.stabilizer.order() << " ("
                       << o.stabilizer_name << "), representative " << family_to_json(families[o.representative])["owner_blocks"].dump()
                       << '\n';
                }
                ctx.emit(os.str());
            }
            return kExitOk;
        }

        if (scheme_cmd->parsed()) {
            const auto names = fixture_names();
            const Digraph g = fs::exists(graph_path) || std::find(names.begin(), names.end(), graph_path) == names.end()
                                  ? read_digraph_file(graph_path)
                                  : load_fixture(graph_path);
            const auto aut = automorphism_group(g);
            if (!aut.is_transitive()) {
                std::ostringstream os;
                os << "Aut(G) is not transitive; orbits";
                for (const auto& orbit : aut.orbits()) os << ' ' << json(orbit).dump();
                throw VerificationFailure{os.str()};
            }
            const auto scheme = orbital_scheme(aut);
            const auto fusions = all_fusions(scheme);
            const auto dec = relation_decomposition(scheme, g);
            if (!relation_out.empty()) write_text_file(relation_out, format_relation_matrix(scheme));
            if (ctx.format == "json") {
                json fj = json::array();
                for (const auto& f : fusions) fj.push_back({{"grouping", f}, {"symmetric", fuse(scheme, f).scheme->is_symmetric()}});
                json j = {{"command", ctx.command},
                          {"automorphism_group", {{"order", aut.order().str()}, {"name", recognize_group(aut)}}},
                          {"scheme", scheme_to_json(scheme)},
                          {"fusions", std::move(fj)}};
                if (dec.classes) j["graph_classes"] = *dec.classes;
                ctx.emit(j.dump(2) + "\n");
            } else {
                std::ostringstream os;
                os << "Aut order " << aut.order() << " (" << recognize_group(aut) << "), vertex-transitive\n";
                os << scheme.classes() << "-class " << (scheme.is_commutative() ? "commutative" : "non-commutative")
                   << (scheme.is_symmetric() ? " symmetric" : "") << " scheme\n";
                for (int i = 1; i <= scheme.classes(); ++i)
                    os << "  R" << i << ": valency " << scheme.valency(i) << ", transpose R" << scheme.transpose_of(i) << '\n';
                os << "arcs of G: " << (dec.classes ? "union of classes " + json(*dec.classes).dump() : dec.witness) << '\n';
                os << fusions.size() << " proper fusions\n";
                for (const auto& f : fusions)
                    os << "  " << json(f).dump() << (fuse(scheme, f).scheme->is_symmetric() ? " symmetric" : "") << '\n';
                os << "relation matrix:\n" << format_relation_matrix(scheme);
                ctx.emit(os.str());
            }
            return kExitOk;
        }

        if (catalog->parsed()) {
            catalog_options.jobs = ctx.jobs;
            std::set<int> ids;
            if (!only.empty())
                for (int id : parse_int_list(only)) ids.insert(id);
            const auto results = run_catalog(ids, catalog_options);
            bool ok = true;
            json j = json::array();
            std::ostringstream os;
            for (const auto& res : results) {
                if (res.gating && !res.passed()) ok = false;
                os << (res.passed() ? "PASS" : "FAIL") << " criterion " << res.id << (res.gating ? "" : " (non-gating)") << ": "
                   << res.title << '\n';
                json checks = json::array();
                for (const auto& c : res.checks) {
                    os << "    " << (c.ok ? "ok   " : "FAIL ") << c.text << '\n';
                    checks.push_back({{"ok", c.ok}, {"check", c.text}});
                }
                j.push_back({{"id", res.id}, {"title", res.title}, {"gating", res.gating}, {"passed", res.passed()}, {"checks", std::move(checks)}});
            }
            ctx.emit(ctx.format == "json" ? j.dump(2) + "\n" : os.str());
            if (!ok) throw VerificationFailure{"catalog has failing criteria"};
            return kExitOk;
        }

        if (fixture->parsed()) {
            const Digraph g = load_fixture(fixture_name);
            ctx.emit(ctx.format == "json" ? digraph_to_json(g).dump(2) + "\n" : format_digraph01(g));
            return kExitOk;
        }
    } catch (const VerificationFailure& f) {
        err << "verification failure: " << f.message << '\n';
        return kExitVerification;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const json::exception& e) {
        err << "error: malformed JSON: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConstructionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const StructuralError& e) {
        err << "structural error: " << e.what() << '\n';
        return kExitVerification;
    }
    return kExitUsage;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace dsrg
