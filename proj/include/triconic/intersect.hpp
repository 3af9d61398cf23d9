#pragma once

// Pairwise intersection analysis by elimination of Z from [0:0:1].
//
// Intersection multiplicities are read off as root multiplicities of
// Res_Z(Qi, Qj). That is only valid in a generic frame: the center must lie
// on no conic and on no line joining two distinct intersection points. Both
// conditions are checked; a failure raises Error(DegenerateCoordinates) and
// analyze_intersections() retries with a fresh random frame.

#include "triconic/conic.hpp"
#include "triconic/quotient.hpp"
#include "triconic/upoly.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace triconic {

/// Binary quartic in (X, Y); coeffs[i] multiplies X^i Y^(4-i).
struct BinaryQuartic {
    std::array<FieldElem, 5> coeffs;

    bool is_zero() const;
    /// Y = 1, as a polynomial in x = X/Y.
    UniPoly dehomogenize() const;
    static BinaryQuartic from_dehomogenized(const UniPoly &p);
};

/// Partition of 4, parts sorted in decreasing order.
using MultiplicityPattern = std::vector<int>;

std::string format_pattern(const MultiplicityPattern &p);

/// Res_Z of the two conics of `pair` (see kPairs). Throws
/// Error(DegenerateCoordinates) when the frame is not generic for the pair.
BinaryQuartic pair_resultant(const Arrangement &arr, int pair);

/// Intersection pattern of two conics, with its own frame retries.
MultiplicityPattern pair_pattern(const Conic &a, const Conic &b, std::uint64_t seed = 0);

/// Root multiplicities of q, including the root [1 : 0] at infinity.
MultiplicityPattern pattern_of(const BinaryQuartic &q);

/// Multiplicity of each pair at a locus, indexed like kPairs.
using PairMultiplicities = std::array<int, 3>;

struct PointLocus {
    /// Monic squarefree polynomial in x = X/Y whose roots are the points.
    UniPoly factor;
    /// Z/Y at each point, as a residue modulo `factor`.
    UniPoly z_residue;
    PairMultiplicities pair_mult{};
    /// Set when the locus is a single point with coordinates in K.
    std::optional<ProjPoint> point;

    int point_count() const { return factor.degree(); }
    /// "[x : y : z]" or "root of <factor> with Z/Y = <residue>".
    std::string describe() const;
};

/// Exact incidence test. `frame` maps frame coordinates to input coordinates
/// and is only used for loci without explicit coordinates.
bool locus_on_line(const PointLocus &locus, const LinearForm &line, const Matrix3 &frame);

/// All intersection loci of an arrangement that is already in a generic
/// frame. Explicit points are in the arrangement's own coordinates.
std::vector<PointLocus> shared_point_analysis(const Arrangement &arr);

inline constexpr int kRetryBudget = 32;

struct IntersectionAnalysis {
    std::vector<PointLocus> loci;               // explicit points in input coordinates
    std::array<MultiplicityPattern, 3> patterns; // per pair
    std::uint64_t seed = 0;                      // frame that succeeded
    Matrix3 frame;                               // input coords = frame * frame coords
    int attempts = 0;
};

/// Tries seeds seed, seed + 1, ... up to kRetryBudget frames. Throws
/// Error(GenericityUnreachable) when every frame is degenerate.
IntersectionAnalysis analyze_intersections(const Arrangement &arr, std::uint64_t seed = 0);

} // namespace triconic
