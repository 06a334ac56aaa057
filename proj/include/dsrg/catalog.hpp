#pragma once

#include <set>
#include <string>
#include <vector>

namespace dsrg {

struct CheckLine {
    bool ok = false;
    std::string text;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool gating = true;
    std::vector<CheckLine> checks;
    double seconds = 0;

    bool passed() const;
};

struct CatalogOptions {
    unsigned jobs = 1;
    // Samples drawn for criterion 10; about 1 s per 20000 on one core.
    unsigned long long stretch_samples = 50000;
    unsigned long long stretch_seed = 20240601;
};

inline constexpr int kCriterionCount = 10;

// Throws ParameterError for ids outside 1..kCriterionCount.
CriterionResult run_criterion(int id, const CatalogOptions& options = {});
std::vector<CriterionResult> run_catalog(const std::set<int>& ids = {}, const CatalogOptions& options = {});

}  // namespace dsrg
