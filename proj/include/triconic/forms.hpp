#pragma once

// Homogeneous polynomials in X, Y, Z over K.

#include "triconic/field.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace triconic {

using Exponent = std::array<int, 3>;

enum class MonomialOrder {
    Lex,    // X^n, X^(n-1)Y, ..., Z^n
    RevLex, // the reverse sequence
};

/// All exponents of total degree n in the requested order; empty for n < 0.
std::vector<Exponent> monomial_basis(int degree, MonomialOrder order = MonomialOrder::Lex);

/// dim S_n = (n + 1)(n + 2) / 2
int monomial_count(int degree);

class TernaryForm {
public:
    TernaryForm() = default;
    explicit TernaryForm(int degree) : degree_(degree) {}

    static TernaryForm monomial(const Exponent &e, const FieldElem &c = FieldElem(1));

    int degree() const noexcept { return degree_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<Exponent, FieldElem> &terms() const noexcept { return terms_; }

    FieldElem coeff(const Exponent &e) const;
    /// Adds c to the coefficient of e (exponent must match the degree).
    void add_term(const Exponent &e, const FieldElem &c);

    TernaryForm partial(int var) const;
    FieldElem eval(const std::array<FieldElem, 3> &point) const;

    TernaryForm &operator+=(const TernaryForm &o);
    TernaryForm &operator*=(const FieldElem &k);
    friend TernaryForm operator+(TernaryForm a, const TernaryForm &b) { return a += b; }
    friend TernaryForm operator*(TernaryForm a, const FieldElem &k) { return a *= k; }
    friend TernaryForm operator*(const TernaryForm &a, const TernaryForm &b);
    friend bool operator==(const TernaryForm &, const TernaryForm &) = default;

    std::string to_string() const;

private:
    int degree_ = 0;
    std::map<Exponent, FieldElem> terms_;
};

} // namespace triconic
