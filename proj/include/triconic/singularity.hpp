#pragma once

// Singularity taxonomy for arrangements of three smooth conics.
//
// Every singular point of the union lies on at least two conics. Its type is
// fixed by the sorted multiplicities of the pairs meeting there:
//
//   one pair:    (1) A1  (2) A3  (3) A5  (4) A7
//   all pairs:   (1,1,1) D4  (2,1,1) D6  (3,1,1) D8  (4,1,1) D10  (2,2,2) J20
//
// All nine types are quasi-homogeneous, so tau = mu.

#include "triconic/intersect.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace triconic {

enum class SingKind { A1, A3, D4, A5, D6, A7, D8, D10, J20 };

struct SingularityType {
    SingKind kind;
    std::string_view name;
    int mu;
    int tau;
    /// Sum of the pair multiplicities at the point; equals the "multiplicity"
    /// column of the ADE table.
    int pair_budget;
    std::string_view occurrence_symbol;
    /// Sorted (decreasing) per-pair multiplicities.
    std::vector<int> signature;
};

/// The dispatch table, in weak-combinatorics order (n2, t3, n3, t5, d6, t7, d8, d10, j).
std::span<const SingularityType> singularity_table();
const SingularityType &singularity_type(SingKind kind);
int tuple_index(SingKind kind);

/// Throws Error(UnsupportedSingularity) for signatures outside the table.
const SingularityType &classify_signature(std::vector<int> signature);
const SingularityType &classify_point(const PointLocus &locus);

/// (n2, t3, n3, t5, d6, t7, d8, d10, j)
struct WeakCombinatorics {
    std::array<int, 9> counts{};

    int &operator[](SingKind k) { return counts[static_cast<std::size_t>(tuple_index(k))]; }
    int operator[](SingKind k) const { return counts[static_cast<std::size_t>(tuple_index(k))]; }

    int tau() const;
    int budget() const;
    bool has_j() const { return counts[8] > 0; }

    /// "(n2, ..., d10)" when j = 0 and `always_nine` is false, otherwise nine entries.
    std::string to_string(bool always_nine = false) const;

    friend auto operator<=>(const WeakCombinatorics &, const WeakCombinatorics &) = default;
};

WeakCombinatorics make_tuple9(std::array<int, 9> counts);
WeakCombinatorics make_tuple8(std::array<int, 8> counts);

enum class PairType { N, T, TT, A5P, A7P };

std::string_view to_string(PairType t);
/// {1,1,1,1} N, {2,1,1} T, {2,2} TT, {3,1} A5P, {4} A7P
PairType pair_type_of(const MultiplicityPattern &pattern);
/// Sorted multiset.
using PairDecomposition = std::vector<PairType>;
std::string format_decomposition(const PairDecomposition &d);

struct SingularPoint {
    PointLocus locus;
    const SingularityType *type;
};

struct Classification {
    WeakCombinatorics tuple;
    std::vector<SingularPoint> points;
    PairDecomposition pairs;
    int tau_local = 0;
    IntersectionAnalysis analysis;
};

/// Full local classification in a generic frame chosen from `seed`.
Classification weak_combinatorics(const Arrangement &arr, std::uint64_t seed = 0);
PairDecomposition pair_types(const Arrangement &arr, std::uint64_t seed = 0);

/// The pair decomposition reassembled from the classified points' pieces.
PairDecomposition pairs_from_points(const std::vector<SingularPoint> &points);

} // namespace triconic
