#pragma once

// Dynamic evaluation in K[t]/(p): p is never factored up front; it splits
// lazily whenever a zero divisor would have to be inverted.

#include "triconic/upoly.hpp"

#include <variant>
#include <vector>

namespace triconic {

/// A nontrivial factorization modulus = first * second, both monic.
struct Splitting {
    UniPoly first;
    UniPoly second;
};

class QuotientRing {
public:
    /// The modulus is made monic; degree must be at least 1.
    explicit QuotientRing(const UniPoly &modulus);

    const UniPoly &modulus() const noexcept { return p_; }

    UniPoly reduce(const UniPoly &a) const { return a % p_; }
    UniPoly add(const UniPoly &a, const UniPoly &b) const { return reduce(a + b); }
    UniPoly sub(const UniPoly &a, const UniPoly &b) const { return reduce(a - b); }
    UniPoly mul(const UniPoly &a, const UniPoly &b) const { return reduce(a * b); }
    bool is_zero(const UniPoly &a) const { return reduce(a).is_zero(); }

    /// Either the inverse of a, or a splitting of the modulus when a is a
    /// zero divisor. Inverting zero is a precondition error.
    std::variant<UniPoly, Splitting> inverse(const UniPoly &a) const;

private:
    UniPoly p_;
};

/// QuotientElem in the contract: an element reduced mod the ring's modulus.
struct QuotientElem {
    UniPoly representative;
};

/// Polynomial in an outer variable x with coefficients in K[t]/(p);
/// coefficient i multiplies x^i. Kept reduced and trimmed by the helpers.
using QPoly = std::vector<UniPoly>;

QPoly qpoly_normalize(const QuotientRing &ring, QPoly f);

/// Monic gcd over K[t]/(p)[x], or a splitting of p met on the way.
using QuotientGcdResult = std::variant<QPoly, Splitting>;
QuotientGcdResult quotient_gcd(const QuotientRing &ring, const QPoly &f, const QPoly &g);

} // namespace triconic
