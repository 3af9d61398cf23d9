#pragma once

// The six free families, the named fixtures, and the tangent-pencil
// constructor lambda * Q1 + l1 * l2.

#include "triconic/conic.hpp"
#include "triconic/freeness.hpp"
#include "triconic/singularity.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace triconic {

enum class FamilyId { F1, F2, F3, F4, F5, F6, Persson, Pokora, Example2 };

using ParamSet = std::map<std::string, FieldElem>;

struct FamilyInfo {
    FamilyId id;
    std::string_view key;   // "F1" ... "F6", "persson", ...
    std::string_view label; // "(i)" ... for the families
    std::vector<std::string> params;
    /// The parameter determined by solve_constraint, if any.
    std::optional<std::string> solved_param;
    std::string_view constraint;
    WeakCombinatorics expected;
    PairDecomposition expected_pairs;
    bool expected_free;
    bool is_family;
    std::string_view notes;
};

std::span<const FamilyInfo> catalog_entries();
const FamilyInfo &family_info(FamilyId id);
/// Accepts "F1".."F6" and the fixture names, case-insensitively.
std::optional<FamilyId> parse_family(std::string_view key);

/// Throws Error(Precondition) "constraint violated: <clause>" or
/// "missing parameter" / "unknown parameter".
void check_constraints(FamilyId id, const ParamSet &params);

/// Completes the constrained parameter: a for F3 and mu for F5, two roots
/// each. Other families return the input unchanged. Throws
/// Error(Precondition) "no solution in field" when the roots are not in K.
std::vector<ParamSet> solve_constraint(FamilyId id, const ParamSet &free_params, const FieldContext &ctx);

/// The printed equations, unverified.
Arrangement printed_arrangement(FamilyId id, const ParamSet &params, const FieldContext &ctx);

enum class Route { Printed, Constructive };
std::string_view to_string(Route r);

struct Instantiation {
    FamilyId id;
    ParamSet params;
    Arrangement arrangement;
    Route route = Route::Printed;
    std::vector<std::string> log;
    Classification classification;
    FreenessReport report;
};

/// Builds the family member and verifies singularities and freeness. A
/// printed formula that fails verification is replaced by the constructive
/// route when one exists; otherwise Error(Internal) "verification failed".
Instantiation instantiate(FamilyId id, const ParamSet &params, const FieldContext &ctx, std::uint64_t seed = 0);

/// Empty when the arrangement matches the entry, else the first mismatch.
std::optional<std::string> verification_failure(const FamilyInfo &info, const Classification &c,
                                                const FreenessReport &r);

struct KnownArrangement {
    FamilyId id;
    std::string name;
    Arrangement arrangement;
    const FamilyInfo *info;
};

std::vector<KnownArrangement> known_arrangements();

/// Three deterministic parameter samples per family; constrained parameters
/// already solved. Contexts use D = -3 where the family needs it.
struct FamilySample {
    ParamSet params;
    FieldContext context;
};
std::vector<FamilySample> family_samples(FamilyId id, int count = 3);

enum class TangentKind { A5P, T, TT, A7P };

struct TangentData {
    LinearForm l1;
    /// Unused for A7P.
    std::optional<LinearForm> l2;
};

/// lambda * q1 + l1 * l2 (l1^2 for A7P), validated to form `kind` with q1.
Conic build_tangent_conic(const Conic &q1, TangentKind kind, const TangentData &lines, const FieldElem &lambda);

struct PencilSample {
    Arrangement arrangement;
    std::string description;
};

/// A random arrangement built from X^2 - YZ by two tangent-pencil steps.
/// Draws are repeated until the arrangement is valid and classifiable.
PencilSample tangent_pencil_sample(std::uint64_t seed);

std::string format_params(const ParamSet &p);
/// The command-line form "u=1/2,a=0:1" (r:s for r + s*sqrt(D)).
std::string format_params_arg(const ParamSet &p);
nlohmann::json catalog_manifest();

} // namespace triconic
