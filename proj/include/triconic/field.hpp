#pragma once

// Exact arithmetic in K = Q(sqrt(D)) for a square-free integer D.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace triconic {

using Rational = mpq_class;

/// Parses "p/q" (q > 0, gcd(p, q) = 1) or a bare integer. Throws Error(Parse)
/// on anything else, including non-canonical fractions such as "2/4".
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational &q);

bool is_square_free(long d);

/// Carries the discriminant D of the coefficient field. D = 1 means plain Q.
class FieldContext {
public:
    FieldContext() = default;
    explicit FieldContext(long discriminant);

    long discriminant() const noexcept { return d_; }
    bool is_rational() const noexcept { return d_ == 1; }

    friend bool operator==(const FieldContext &, const FieldContext &) = default;

private:
    long d_ = 1;
};

/// r + s*sqrt(D). Elements with s = 0 are rational and mix freely with any D;
/// mixing two irrational elements over different D throws.
class FieldElem {
public:
    FieldElem() : r_(0), s_(0) {}
    FieldElem(long v) : r_(v), s_(0) {} // NOLINT: implicit on purpose
    FieldElem(const Rational &r) : r_(r), s_(0) { r_.canonicalize(); }
    FieldElem(const FieldContext &ctx, const Rational &r, const Rational &s);

    const Rational &r() const noexcept { return r_; }
    const Rational &s() const noexcept { return s_; }
    long discriminant() const noexcept { return d_; }

    bool is_zero() const { return sgn(r_) == 0 && sgn(s_) == 0; }
    bool is_one() const { return r_ == 1 && sgn(s_) == 0; }
    bool is_rational() const { return sgn(s_) == 0; }

    FieldElem inverse() const;
    FieldElem conjugate() const;
    /// r^2 - D s^2.
    Rational norm() const;

    FieldElem &operator+=(const FieldElem &o);
    FieldElem &operator-=(const FieldElem &o);
    FieldElem &operator*=(const FieldElem &o);
    FieldElem &operator/=(const FieldElem &o);

    friend FieldElem operator+(FieldElem a, const FieldElem &b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem &b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem &b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem &b) { return a /= b; }
    FieldElem operator-() const;

    friend bool operator==(const FieldElem &a, const FieldElem &b) {
        return a.r_ == b.r_ && a.s_ == b.s_;
    }

    /// Approximate value; only meaningful when real (D > 0 or s = 0).
    double to_double() const;

    std::string to_string() const;

private:
    long join(const FieldElem &o) const;

    Rational r_;
    Rational s_;
    long d_ = 1;
};

FieldElem pow(FieldElem base, unsigned exponent);

/// A square root inside Q(sqrt(ctx.D)), if one exists.
std::optional<FieldElem> sqrt_in_field(const FieldElem &x, const FieldContext &ctx);

} // namespace triconic
