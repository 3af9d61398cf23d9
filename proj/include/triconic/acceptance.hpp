#pragma once

// The ten acceptance criteria, shared by `triconic verify-all` and the
// acceptance test binary.

#include <json.hpp>

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace triconic {

struct CriterionInfo {
    int id;
    std::string_view key;
    std::string_view group;
    std::string_view title;
};

std::span<const CriterionInfo> acceptance_criteria();

struct CriterionResult {
    const CriterionInfo *info;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    std::filesystem::path golden; // the 25-tuple list; defaults to the data dir
    /// Ids, keys or groups to run; empty runs everything.
    std::vector<std::string> filter;
};

std::filesystem::path default_golden_path();

/// Throws Error(Precondition) when the filter selects nothing.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &opts);

/// "PASS  5 families: ..." style line.
std::string format_result(const CriterionResult &r);
nlohmann::json results_to_json(const std::vector<CriterionResult> &results);

} // namespace triconic
