#pragma once

// Global invariants of the sextic f = Q1 Q2 Q3 by exact linear algebra:
// syzygies of the Jacobian ideal, the Hilbert function of S/J_f and the
// Du Plessis-Wall freeness test.

#include "triconic/conic.hpp"
#include "triconic/forms.hpp"
#include "triconic/singularity.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace triconic {

/// Dense in the 28 degree-6 monomials once expanded; kept as a TernaryForm.
struct SexticForm {
    TernaryForm f;
    FieldContext context;
};

SexticForm sextic_of(const Arrangement &arr);

std::array<TernaryForm, 3> jacobian_partials(const SexticForm &f);

/// Rank over K of the row vectors. Rows are scaled to Z[sqrt D] and reduced
/// fraction-free, dividing every updated row by its integer content.
std::size_t exact_rank(const std::vector<std::vector<FieldElem>> &rows, const FieldContext &ctx);

/// dim { (a, b, c) of degree r : a f_X + b f_Y + c f_Z = 0 } for 0 <= r <= 4.
int syzygy_kernel_dim(const SexticForm &f, int r, MonomialOrder order = MonomialOrder::Lex);

/// dim (S / J_f)_k
int milnor_algebra_dim(const SexticForm &f, int k, MonomialOrder order = MonomialOrder::Lex);

inline constexpr std::array<int, 4> kStabilizationDegrees{12, 13, 14, 15};

struct GlobalTau {
    int tau;
    std::array<int, 4> hilbert; // at kStabilizationDegrees
};

/// Throws Error(Internal) "Hilbert function not stabilized" when the four
/// sampled values differ. The four ranks run concurrently.
GlobalTau global_tau(const SexticForm &f, MonomialOrder order = MonomialOrder::Lex);

/// Smallest r in {1, 2} with a nonzero syzygy; nullopt means mdr > 2.
std::optional<int> mdr(const SexticForm &f, MonomialOrder order = MonomialOrder::Lex);

/// (d - 1)^2 - d1 (d - d1 - 1)
int dpw_lhs(int d, int d1);
/// Throws Error(Precondition) "DP-W inapplicable" unless 2 d1 <= d - 1.
bool dpw_check(int d, int d1, int tau);

struct FreenessReport {
    int d = 6;
    std::optional<int> mdr;  // nullopt: greater than 2
    std::optional<int> d2;   // d - 1 - mdr when free
    int tau_local = 0;
    int tau_global = 0;
    std::array<int, 4> hilbert{};
    std::optional<int> dpw_lhs;
    bool free = false;
    std::string note;
};

/// Cross-checks tau_local against tau_global; a mismatch is Error(Internal).
FreenessReport freeness_report(const Arrangement &arr, const Classification &local,
                               MonomialOrder order = MonomialOrder::Lex);
FreenessReport freeness_report(const Arrangement &arr, std::uint64_t seed = 0,
                               MonomialOrder order = MonomialOrder::Lex);

} // namespace triconic
