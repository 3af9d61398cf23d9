#pragma once

#include "triconic/field.hpp"

#include <string>
#include <vector>

namespace triconic {

/// Dense univariate polynomial over K, coefficient i is the degree-i term.
/// Trailing zeros are always stripped, so the zero polynomial is empty.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<FieldElem> coeffs);
    UniPoly(const FieldElem &constant); // NOLINT: constants promote

    /// c * t^k
    static UniPoly monomial(const FieldElem &c, int k);
    /// t - root
    static UniPoly linear_root(const FieldElem &root);

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const FieldElem &lc() const;
    FieldElem coeff(int k) const;
    const std::vector<FieldElem> &coeffs() const noexcept { return c_; }

    FieldElem eval(const FieldElem &t) const;
    UniPoly derivative() const;
    UniPoly monic() const;

    UniPoly &operator+=(const UniPoly &o);
    UniPoly &operator-=(const UniPoly &o);
    UniPoly &operator*=(const FieldElem &k);
    friend UniPoly operator+(UniPoly a, const UniPoly &b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly &b) { return a -= b; }
    friend UniPoly operator*(const UniPoly &a, const UniPoly &b);
    friend UniPoly operator*(UniPoly a, const FieldElem &k) { return a *= k; }
    UniPoly operator-() const;
    friend bool operator==(const UniPoly &, const UniPoly &) = default;

    std::string to_string(const std::string &var = "t") const;

private:
    void trim();

    std::vector<FieldElem> c_;
};

struct DivMod {
    UniPoly quotient;
    UniPoly remainder;
};

DivMod divmod(const UniPoly &f, const UniPoly &g);
UniPoly operator%(const UniPoly &f, const UniPoly &g);
/// Exact division; throws Error(Internal) when g does not divide f.
UniPoly exact_div(const UniPoly &f, const UniPoly &g);
bool divides(const UniPoly &g, const UniPoly &f);

/// lc(g)^(deg f - deg g + 1) * f mod g
UniPoly pseudo_remainder(const UniPoly &f, const UniPoly &g);

/// Monic gcd through the subresultant PRS. gcd(0, 0) is a precondition error.
UniPoly upoly_gcd(const UniPoly &f, const UniPoly &g);

struct ExtendedGcd {
    UniPoly gcd; // monic
    UniPoly s;   // s*f + t*g = gcd
    UniPoly t;
};
ExtendedGcd upoly_xgcd(const UniPoly &f, const UniPoly &g);

/// Resultant with the Sylvester convention: f-rows first. Subresultant
/// algorithm; throws Error(Precondition) for zero input.
FieldElem resultant(const UniPoly &f, const UniPoly &g);

struct SquarefreeFactor {
    UniPoly factor; // monic, squarefree, degree >= 1
    int multiplicity;
};

struct SquarefreeDecomposition {
    FieldElem unit; // leading coefficient of the input
    std::vector<SquarefreeFactor> factors;

    UniPoly expand() const;
};

/// Yun's algorithm. The input must be nonzero ("zero input" otherwise).
SquarefreeDecomposition squarefree_decomposition(const UniPoly &f);

/// Refines pairwise coprime: every input factors over the returned monic
/// squarefree polynomials, which are pairwise coprime. Inputs must be squarefree.
std::vector<UniPoly> gcd_free_basis(const std::vector<UniPoly> &polys);

} // namespace triconic
