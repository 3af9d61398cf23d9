#pragma once

#include "triconic/field.hpp"
#include "triconic/forms.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <string>

namespace triconic {

using Matrix3 = std::array<std::array<FieldElem, 3>, 3>;
using ProjPoint = std::array<FieldElem, 3>;
/// Coefficients (a, b, c) of the line aX + bY + cZ.
using LinearForm = std::array<FieldElem, 3>;

Matrix3 identity_matrix();
Matrix3 operator*(const Matrix3 &a, const Matrix3 &b);
Matrix3 transpose(const Matrix3 &m);
Matrix3 adjugate(const Matrix3 &m);
FieldElem determinant(const Matrix3 &m);
ProjPoint mat_vec(const Matrix3 &m, const ProjPoint &p);

/// Scales so the first nonzero coordinate is 1. The zero vector is rejected.
ProjPoint normalize_point(const ProjPoint &p);
std::string format_point(const ProjPoint &p);
FieldElem eval_line(const LinearForm &l, const ProjPoint &p);
std::string format_line(const LinearForm &l);

/// Monomial slots of the coefficient vector.
enum ConicSlot : int { kXX = 0, kYY = 1, kZZ = 2, kXY = 3, kXZ = 4, kYZ = 5 };

class Conic {
public:
    using Coefficients = std::array<FieldElem, 6>;

    Conic() = default;
    /// Order [X^2, Y^2, Z^2, XY, XZ, YZ]. No validation here; see make_arrangement.
    explicit Conic(const Coefficients &coeffs) : c_(coeffs) {}

    static Conic from_matrix(const Matrix3 &m);
    static Conic from_form(const TernaryForm &f);
    /// l1 * l2 as a (degenerate) conic.
    static Conic from_lines(const LinearForm &l1, const LinearForm &l2);

    const Coefficients &coeffs() const noexcept { return c_; }
    const FieldElem &operator[](int slot) const { return c_[static_cast<std::size_t>(slot)]; }

    /// Symmetric matrix A with Q(v) = v^T A v.
    Matrix3 matrix() const;
    FieldElem discriminant() const { return determinant(matrix()); }
    bool is_smooth() const { return !discriminant().is_zero(); }
    bool is_zero() const;

    TernaryForm to_form() const;
    FieldElem eval(const ProjPoint &p) const;
    /// Polar line of p; the tangent line when p lies on the conic.
    LinearForm polar(const ProjPoint &p) const;
    bool is_tangent(const LinearForm &line) const;
    /// For a tangent line, the point of contact.
    ProjPoint contact_point(const LinearForm &line) const;

    /// Q'(v) = Q(M v).
    Conic transformed(const Matrix3 &m) const;

    Conic operator*(const FieldElem &k) const;
    Conic operator+(const Conic &o) const;

    friend bool operator==(const Conic &, const Conic &) = default;

    std::string to_string() const;

private:
    Coefficients c_{};
};

bool proportional(const Conic &a, const Conic &b);

/// Pair indices: 0 = (Q1, Q2), 1 = (Q1, Q3), 2 = (Q2, Q3).
constexpr std::array<std::array<int, 2>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};

class Arrangement {
public:
    const std::array<Conic, 3> &conics() const noexcept { return conics_; }
    const Conic &conic(int i) const { return conics_[static_cast<std::size_t>(i)]; }
    const FieldContext &context() const noexcept { return ctx_; }

    TernaryForm sextic() const;

private:
    friend Arrangement make_arrangement(const std::array<Conic, 3> &, const FieldContext &);
    std::array<Conic, 3> conics_;
    FieldContext ctx_;
};

/// Validates smoothness, pairwise distinctness and field membership. Throws
/// Error(Validation) with "singular conic" or "duplicate conic".
Arrangement make_arrangement(const std::array<Conic::Coefficients, 3> &coeffs,
                             const FieldContext &ctx);
Arrangement make_arrangement(const std::array<Conic, 3> &conics, const FieldContext &ctx);

/// Seed value that selects the identity change.
inline constexpr std::uint64_t kIdentitySeed = std::numeric_limits<std::uint64_t>::max();

struct CoordinateChange {
    Arrangement arrangement; // conics expressed in the new coordinates
    Matrix3 matrix;          // old coordinates = matrix * new coordinates
    std::uint64_t seed;
};

/// Invertible integer matrix with entries in [-3, 3] drawn from a seeded
/// mt19937_64; rejection-sampled until the determinant is nonzero.
Matrix3 random_change_matrix(std::uint64_t seed);
CoordinateChange random_coordinate_change(const Arrangement &arr, std::uint64_t seed);
Arrangement apply_change(const Arrangement &arr, const Matrix3 &m);

} // namespace triconic
