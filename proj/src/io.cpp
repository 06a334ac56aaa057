#include "dsrg/io.hpp"

#include "dsrg/canon.hpp"
#include "dsrg/error.hpp"

#include <fstream>
#include <sstream>

namespace dsrg {

namespace {

bool blank(const std::string& line) { return line.find_first_not_of(" \t") == std::string::npos; }

// Reads one record; returns false at end of input before a header.
bool read_record(std::istream& in, std::size_t& line_no, Digraph& out) {
    std::string line;
    for (;;) {
        if (!std::getline(in, line)) return false;
        ++line_no;
        if (!blank(line)) break;
    }
    std::size_t v = 0;
    {
        if (line.empty() || line.find_first_not_of("0123456789") != std::string::npos)
            throw FormatError("digraph01 line " + std::to_string(line_no) + ": expected vertex count, got '" + line + "'");
        try {
            v = std::stoull(line);
        } catch (const std::exception&) {
            throw FormatError("digraph01 line " + std::to_string(line_no) + ": vertex count out of range");
        }
    }
    Digraph g(v);
    for (std::size_t i = 0; i < v; ++i) {
        if (!std::getline(in, line))
            throw FormatError("digraph01: expected " + std::to_string(v) + " rows, input ended after " + std::to_string(i));
        ++line_no;
        if (line.size() != v)
            throw FormatError("digraph01 line " + std::to_string(line_no) + ": row has " + std::to_string(line.size()) +
                              " characters, expected " + std::to_string(v));
        for (std::size_t j = 0; j < v; ++j) {
            if (line[j] == '1') g.set_arc(i, j);
            else if (line[j] != '0')
                throw FormatError("digraph01 line " + std::to_string(line_no) + ": invalid character '" +
                                  std::string(1, line[j]) + "'");
        }
    }
    out = std::move(g);
    return true;
}

template <typename T>
T get_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("JSON: missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("JSON: field '") + key + "': " + e.what());
    }
}

}  // namespace

Digraph read_digraph01(std::istream& in) {
    std::size_t line_no = 0;
    Digraph g;
    if (!read_record(in, line_no, g)) throw FormatError("digraph01: empty input");
    std::string rest;
    while (std::getline(in, rest)) {
        ++line_no;
        if (!blank(rest)) throw FormatError("digraph01 line " + std::to_string(line_no) + ": trailing content after matrix");
    }
    return g;
}

std::vector<Digraph> read_digraph01_stream(std::istream& in) {
    std::vector<Digraph> out;
    std::size_t line_no = 0;
    Digraph g;
    while (read_record(in, line_no, g)) out.push_back(std::move(g));
    return out;
}

Digraph parse_digraph01(const std::string& text) {
    std::istringstream in(text);
    return read_digraph01(in);
}

void write_digraph01(std::ostream& out, const Digraph& g) { out << format_digraph01(g); }

std::string format_digraph01(const Digraph& g) {
    std::string s = std::to_string(g.size()) + "\n";
    s.reserve(s.size() + g.size() * (g.size() + 1));
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) s.push_back(g.adjacent(i, j) ? '1' : '0');
        s.push_back('\n');
    }
    return s;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << text;
}

namespace {

bool looks_like_json(const std::string& text) {
    const auto p = text.find_first_not_of(" \t\r\n");
    return p != std::string::npos && (text[p] == '{' || text[p] == '[');
}

json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(origin + ": " + e.what());
    }
}

}  // namespace

Digraph read_digraph_file(const std::string& path) {
    const std::string text = read_text_file(path);
    if (looks_like_json(text)) return digraph_from_json(parse_json(text, path));
    try {
        return parse_digraph01(text);
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

std::vector<Digraph> read_digraph_stream_file(const std::string& path) {
    const std::string text = read_text_file(path);
    if (looks_like_json(text)) {
        const json j = parse_json(text, path);
        std::vector<Digraph> out;
        if (j.is_array())
            for (const auto& e : j) out.push_back(digraph_from_json(e));
        else
            out.push_back(digraph_from_json(j));
        return out;
    }
    std::istringstream in(text);
    try {
        return read_digraph01_stream(in);
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

json digraph_to_json(const Digraph& g) {
    json rows = json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        std::string r(g.size(), '0');
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g.adjacent(i, j)) r[j] = '1';
        rows.push_back(std::move(r));
    }
    json j = {{"n", g.size()}, {"rows", std::move(rows)}};
    if (g.labeled()) j["labels"] = labels_to_json(g.labels())["vertices"];
    return j;
}

Digraph digraph_from_json(const json& j) {
    const auto n = get_field<std::size_t>(j, "n");
    const auto rows = get_field<std::vector<std::string>>(j, "rows");
    if (rows.size() != n) throw FormatError("JSON digraph: expected " + std::to_string(n) + " rows");
    std::string text = std::to_string(n) + "\n";
    for (const auto& r : rows) text += r + "\n";
    Digraph g = parse_digraph01(text);
    if (j.contains("labels")) g.set_labels(labels_from_json(json{{"vertices", j["labels"]}}));
    return g;
}

json labels_to_json(const std::vector<VertexLabel>& labels) {
    json vs = json::array();
    for (const auto& l : labels) {
        json v = {{"point", l.point}, {"block", l.block}};
        if (l.block_index) v["block_index"] = l.block_index;
        if (l.copy) v["copy"] = l.copy;
        vs.push_back(std::move(v));
    }
    return json{{"vertices", std::move(vs)}};
}

std::vector<VertexLabel> labels_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw FormatError("labels JSON: expected {\"vertices\": [...]}");
    std::vector<VertexLabel> out;
    for (const auto& v : j["vertices"]) {
        VertexLabel l;
        l.point = get_field<int>(v, "point");
        l.block = get_field<std::vector<int>>(v, "block");
        l.block_index = v.value("block_index", 0);
        l.copy = v.value("copy", 0);
        out.push_back(std::move(l));
    }
    return out;
}

json family_to_json(const PointwiseFamily& f) { return json{{"n_points", f.n_points}, {"owner_blocks", f.owner_blocks}}; }

PointwiseFamily family_from_json(const json& j) {
    PointwiseFamily f;
    f.n_points = get_field<int>(j, "n_points");
    f.owner_blocks = get_field<std::vector<std::vector<Block>>>(j, "owner_blocks");
    if (static_cast<int>(f.owner_blocks.size()) != f.n_points)
        throw FormatError("family JSON: owner_blocks has " + std::to_string(f.owner_blocks.size()) + " entries, expected " +
                          std::to_string(f.n_points));
    return f;
}

json grouped_design_to_json(const GroupedDesign& d) {
    return json{{"r", d.r},
                {"q", d.q},
                {"a", d.a},
                {"b", d.b},
                {"groups", d.groups},
                {"group_blocks", d.group_blocks},
                {"spanning_blocks", d.spanning_blocks},
                {"x_partitions", d.x_partitions}};
}

GroupedDesign grouped_design_from_json(const json& j) {
    GroupedDesign d;
    d.r = get_field<int>(j, "r");
    d.q = get_field<int>(j, "q");
    d.a = get_field<int>(j, "a");
    d.b = get_field<int>(j, "b");
    d.groups = get_field<std::vector<std::vector<int>>>(j, "groups");
    d.group_blocks = get_field<std::vector<std::vector<Block>>>(j, "group_blocks");
    d.spanning_blocks = get_field<std::vector<Block>>(j, "spanning_blocks");
    d.x_partitions = get_field<std::vector<std::vector<Block>>>(j, "x_partitions");
    return d;
}

json params_to_json(const DsrgParams& p) {
    return json{{"v", p.v}, {"k", p.k}, {"t", p.t}, {"lambda", p.lambda}, {"mu", p.mu}};
}

json verdict_to_json(const DsrgVerdict& v) {
    json j;
    j["dsrg"] = v.params.has_value();
    if (v.params) j["params"] = params_to_json(*v.params);
    if (v.witness)
        j["witness"] = {{"reason", v.witness->reason}, {"row", v.witness->row}, {"col", v.witness->col}, {"value", v.witness->value}};
    if (!v.advisories.empty()) j["advisories"] = v.advisories;
    return j;
}

json permutation_to_json(const Permutation& p) { return p.images(); }

json aut_to_json(const AutSummary& a) {
    json gens = json::array();
    for (const auto& g : a.generators) gens.push_back(permutation_to_json(g));
    return json{{"order", a.order.str()}, {"name", a.name}, {"vertex_transitive", a.transitive}, {"generators", std::move(gens)}};
}

json iso_report_to_json(const IsoClassReport& r) {
    json classes = json::array();
    for (const auto& c : r.classes) {
        json e = {{"certificate", to_hex(c.certificate)},
                  {"size", c.size()},
                  {"first_index", c.members.front()},
                  {"self_transpose", c.self_transpose}};
        if (c.aut) e["automorphism_group"] = aut_to_json(*c.aut);
        const auto verdict = verify_dsrg(c.representative);
        if (verdict.params) e["params"] = params_to_json(*verdict.params);
        classes.push_back(std::move(e));
    }
    return json{{"input_count", r.input_count},
                {"class_count", r.classes.size()},
                {"transpose_closure", r.transpose_closure},
                {"classes", std::move(classes)}};
}

json orbits_to_json(const std::vector<FamilyOrbit>& orbits, std::span<const PointwiseFamily> families) {
    json out = json::array();
    for (const auto& o : orbits) {
        json gens = json::array();
        for (const auto& g : o.stabilizer.generators()) gens.push_back(permutation_to_json(g));
        out.push_back({{"representative_index", o.representative},
                       {"representative", family_to_json(families[o.representative])},
                       {"orbit_size", o.orbit_size},
                       {"members_in_input", o.members.size()},
                       {"stabilizer_order", o.stabilizer.order().str()},
                       {"stabilizer_name", o.stabilizer_name},
                       {"stabilizer_generators", std::move(gens)}});
    }
    return out;
}

json scheme_to_json(const AssociationScheme& s) {
    const std::size_t n = s.size();
    const int c = s.classes();
    json rel = json::array();
    for (std::size_t x = 0; x < n; ++x) {
        json row = json::array();
        for (std::size_t y = 0; y < n; ++y) row.push_back(s.relation(x, y));
        rel.push_back(std::move(row));
    }
    json p = json::array();
    for (int k = 0; k <= c; ++k) {
        json pk = json::array();
        for (int i = 0; i <= c; ++i) {
            json row = json::array();
            for (int j = 0; j <= c; ++j) row.push_back(s.intersection(i, j, k));
            pk.push_back(std::move(row));
        }
        p.push_back(std::move(pk));
    }
    json val = json::array(), tr = json::array();
    for (int i = 0; i <= c; ++i) {
        val.push_back(s.valency(i));
        tr.push_back(s.transpose_of(i));
    }
    return json{{"n", n},
                {"classes", c},
                {"commutative", s.is_commutative()},
                {"symmetric", s.is_symmetric()},
                {"valencies", std::move(val)},
                {"transpose", std::move(tr)},
                {"relation", std::move(rel)},
                {"intersection_numbers", std::move(p)}};
}

std::string format_relation_matrix(const AssociationScheme& s) {
    std::ostringstream os;
    os << s.size() << '\n';
    for (std::size_t x = 0; x < s.size(); ++x) {
        for (std::size_t y = 0; y < s.size(); ++y) os << (y ? " " : "") << s.relation(x, y);
        os << '\n';
    }
    return os.str();
}

std::pair<std::size_t, std::vector<int>> parse_relation_matrix(const std::string& text) {
    std::istringstream in(text);
    std::size_t n = 0;
    if (!(in >> n)) throw FormatError("relation matrix: expected vertex count");
    std::vector<int> rel(n * n);
    for (auto& r : rel)
        if (!(in >> r) || r < 0) throw FormatError("relation matrix: expected " + std::to_string(n * n) + " class indices");
    std::string extra;
    if (in >> extra) throw FormatError("relation matrix: trailing content '" + extra + "'");
    return {n, std::move(rel)};
}

}  // namespace dsrg
