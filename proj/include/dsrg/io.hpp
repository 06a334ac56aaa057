#pragma once

#include "dsrg/classify.hpp"
#include "dsrg/designs.hpp"
#include "dsrg/graphs.hpp"
#include "dsrg/schemes.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace dsrg {

using json = nlohmann::json;

// digraph01: a line holding v, then v lines of exactly v characters 0/1.
// Blank lines may separate records in a stream. Throws FormatError with the
// line number on anything else.
Digraph read_digraph01(std::istream& in);
std::vector<Digraph> read_digraph01_stream(std::istream& in);
Digraph parse_digraph01(const std::string& text);
void write_digraph01(std::ostream& out, const Digraph& g);
std::string format_digraph01(const Digraph& g);

Digraph read_digraph_file(const std::string& path);  // digraph01 or JSON by content
std::vector<Digraph> read_digraph_stream_file(const std::string& path);

// {"n": v, "rows": ["0101", ...], "labels": [...]} (labels optional)
json digraph_to_json(const Digraph& g);
Digraph digraph_from_json(const json& j);

// {"vertices": [{"point": p, "block": [...], "copy": c}, ...]}, matrix row order.
json labels_to_json(const std::vector<VertexLabel>& labels);
std::vector<VertexLabel> labels_from_json(const json& j);

// {"n_points": n, "owner_blocks": [[block, ...] per point]}
json family_to_json(const PointwiseFamily& f);
PointwiseFamily family_from_json(const json& j);

json grouped_design_to_json(const GroupedDesign& d);
GroupedDesign grouped_design_from_json(const json& j);

json params_to_json(const DsrgParams& p);
json verdict_to_json(const DsrgVerdict& v);
json permutation_to_json(const Permutation& p);
json aut_to_json(const AutSummary& a);
json iso_report_to_json(const IsoClassReport& r);
json orbits_to_json(const std::vector<FamilyOrbit>& orbits, std::span<const PointwiseFamily> families);

// {"n", "classes", "relation": rows, "valencies", "transpose", "commutative",
//  "intersection_numbers": p[k][i][j]}
json scheme_to_json(const AssociationScheme& s);

// Relation matrix as text: a line holding n, then n rows of space-separated class indices.
std::string format_relation_matrix(const AssociationScheme& s);
std::pair<std::size_t, std::vector<int>> parse_relation_matrix(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace dsrg
