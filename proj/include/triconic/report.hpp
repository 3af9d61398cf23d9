#pragma once

// Full pipeline on one arrangement, rendered as text or one-line JSON.
// Text lines are "key: value" with the same keys as the JSON numbers.

#include "triconic/catalog.hpp"
#include "triconic/freeness.hpp"
#include "triconic/singularity.hpp"

#include <json.hpp>

#include <string>

namespace triconic {

struct AnalysisReport {
    Arrangement arrangement;
    std::uint64_t seed = 0;
    Classification classification;
    FreenessReport freeness;
    /// The family whose tuple matches, if any.
    const FamilyInfo *match = nullptr;
    double classify_ms = 0;
    double freeness_ms = 0;
};

AnalysisReport analyze(const Arrangement &arr, std::uint64_t seed = 0);

const FamilyInfo *catalog_match(const WeakCombinatorics &t);

inline constexpr const char *kReportFormat = "triconic-report/1";

nlohmann::json report_to_json(const AnalysisReport &r);
std::string report_to_text(const AnalysisReport &r);

} // namespace triconic
