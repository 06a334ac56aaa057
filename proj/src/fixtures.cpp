#include "dsrg/fixtures.hpp"

#include "dsrg/error.hpp"
#include "dsrg/io.hpp"

#include <map>
#include <string_view>
#include <utility>

namespace dsrg {

namespace detail {
extern const std::pair<std::string_view, std::string_view> kEmbeddedFixtures[];
extern const std::size_t kEmbeddedFixtureCount;
}  // namespace detail

namespace {

const std::map<std::string, std::string>& files() {
    static const std::map<std::string, std::string> table = [] {
        std::map<std::string, std::string> m;
        for (std::size_t i = 0; i < detail::kEmbeddedFixtureCount; ++i)
            m.emplace(detail::kEmbeddedFixtures[i].first, detail::kEmbeddedFixtures[i].second);
        return m;
    }();
    return table;
}

}  // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (int i = 1; i <= 7; ++i) names.push_back("N" + std::to_string(i));
    for (int i = 1; i <= 7; ++i) names.push_back("T" + std::to_string(i));
    names.push_back("J8");
    names.push_back("J9");
    names.push_back("T4_sym");
    return names;
}

const std::string& fixture_file(const std::string& file) {
    const auto it = files().find(file);
    if (it == files().end()) throw ParameterError("unknown fixture file '" + file + "'");
    return it->second;
}

std::vector<std::string> fixture_files() {
    std::vector<std::string> out;
    for (const auto& [name, text] : files()) out.push_back(name);
    return out;
}

Digraph load_fixture(const std::string& name) {
    const auto it = files().find(name + ".d01");
    if (it == files().end()) throw ParameterError("unknown fixture '" + name + "'");
    Digraph g = parse_digraph01(it->second);
    const auto labels = files().find(name + ".labels.json");
    if (labels != files().end()) g.set_labels(labels_from_json(json::parse(labels->second)));
    return g;
}

}  // namespace dsrg
