#pragma once

// Weak-combinatorics enumeration and pair-assignment feasibility.
//
// A singular point hands one piece to each pair of conics through it:
// A_k gives (k+1)/2 to one pair, D_{2k} gives k-1 to one pair and 1 to the
// other two, J20 gives 2 to all three. Each pair must collect exactly 4.

#include "triconic/catalog.hpp"
#include "triconic/singularity.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace triconic {

struct CountingSystem {
    int d1 = 2;
    bool with_j = false;

    int tau_target() const { return 25 - 5 * d1 + d1 * d1; }
    int budget_target() const { return 12; }
    /// Both equations hold; j = 0 unless with_j.
    bool satisfied_by(const WeakCombinatorics &t) const;
    /// satisfied_by, and d1 = 1 only with a J20 point: ADE points have Arnold
    /// exponent above 1/2, which forces d1 >= 2 when j = 0.
    bool admissible(const WeakCombinatorics &t) const;
};

/// All admissible nonnegative solutions, lexicographically sorted. Throws
/// Error(Precondition) unless d1 is 1 or 2.
std::vector<WeakCombinatorics> enumerate_tuples(const CountingSystem &sys);

struct PointPieces {
    SingKind kind;
    std::array<int, 3> pieces; // indexed like kPairs
};

struct PairAssignment {
    std::vector<PointPieces> points;

    std::array<MultiplicityPattern, 3> patterns() const;
    PairDecomposition decomposition() const;
    std::string to_string() const;
};

/// The distinct ways a point of this kind can hand out its pieces.
std::vector<std::array<int, 3>> piece_distributions(SingKind kind);

enum class Feasibility { CombinatoriallyInfeasible, CombinatoriallyFeasible };
std::string_view to_string(Feasibility f);

/// Why a tuple is excluded, for the tuples with a known verdict.
enum class Refutation {
    PairCount,      // split_a5 with split_a3 force at least four pairs
    NodesWithA7,    // split_nod
    NodeFreePairs,  // split_nod2
    D8NeedsNodes,   // split_d8
    NodeAccounting, // the two nodes joining D6 and D8 cannot coincide
    JExclusion,     // split_noj
    Algebraic,      // coefficient matching in the tangent-pencil ansatz
};
std::string_view to_string(Refutation r);

struct Realizability {
    bool realizable = false;
    std::optional<FamilyId> family;     // when realizable
    std::optional<Refutation> refuted;  // when not
};

/// Recorded verdict for the 25 ADE tuples and the 6 J20 tuples at d1 = 2.
std::optional<Realizability> known_realizability(const WeakCombinatorics &t);

struct FeasibilityVerdict {
    Feasibility status = Feasibility::CombinatoriallyInfeasible;
    std::optional<PairAssignment> witness;
    /// Canonical search states visited; the exhaustion certificate when
    /// there is no witness.
    std::size_t states = 0;
    std::vector<PairDecomposition> decompositions;
    std::optional<Realizability> realizability;
};

/// Exhaustive search up to relabeling the three pairs.
FeasibilityVerdict pair_assignment_search(const WeakCombinatorics &t);

/// Pair-type multisets over all witnesses, sorted and deduplicated.
std::vector<PairDecomposition> decomposition_graphs(const WeakCombinatorics &t);

/// Split-lemma conformance of a verdict; empty when every property holds.
std::vector<std::string> split_property_failures(const WeakCombinatorics &t, const FeasibilityVerdict &v);

/// The J20 list as printed, including its two misprints.
std::span<const WeakCombinatorics> printed_j_list();

struct ListDiscrepancy {
    WeakCombinatorics printed;
    int tau = 0;
    int budget = 0;
    std::optional<WeakCombinatorics> corrected;
};

struct JListCheck {
    std::vector<WeakCombinatorics> enumerated; // j >= 1 solutions at d1 = 2
    std::vector<ListDiscrepancy> discrepancies;
};

JListCheck check_printed_j_list();
/// Human-readable notice, one line per discrepancy.
std::string discrepancy_notice(const JListCheck &check);

/// Golden-file format: one "n2 t3 n3 t5 d6 t7 d8 d10 j" tuple per line.
/// Blank lines and '#' comments are skipped; eight-entry lines mean j = 0.
std::vector<WeakCombinatorics> read_tuples(std::istream &in);
void write_tuples(std::ostream &out, const std::vector<WeakCombinatorics> &tuples);
std::string format_tuple_line(const WeakCombinatorics &t);

} // namespace triconic
