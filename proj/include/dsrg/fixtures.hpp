#pragma once

#include "dsrg/graphs.hpp"

#include <string>
#include <vector>

namespace dsrg {

// Matrices transcribed from published tables: N1..N7 (12 vertices), T1..T7,
// J8, J9 (10 vertices), plus T4_sym.
std::vector<std::string> fixture_names();

/// Bit-exact fixture matrix, with vertex labels when a sidecar exists.
/// Throws ParameterError for unknown names.
Digraph load_fixture(const std::string& name);

// Raw contents of any embedded data file (e.g. "grouped100.json").
const std::string& fixture_file(const std::string& file);
std::vector<std::string> fixture_files();

}  // namespace dsrg
