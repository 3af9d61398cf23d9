#include "triconic/quotient.hpp"

#include "triconic/error.hpp"

#include <utility>

namespace triconic {

QuotientRing::QuotientRing(const UniPoly &modulus) : p_(modulus.monic()) {
    if (p_.degree() < 1)
        throw Error(ErrorKind::Precondition, "quotient modulus must have degree >= 1");
}

std::variant<UniPoly, Splitting> QuotientRing::inverse(const UniPoly &a) const {
    UniPoly r = reduce(a);
    if (r.is_zero())
        throw Error(ErrorKind::Precondition, "inverse of zero in quotient ring");
    ExtendedGcd eg = upoly_xgcd(r, p_);
    if (eg.gcd.degree() == 0)
        return reduce(eg.s);
    return Splitting{eg.gcd, exact_div(p_, eg.gcd).monic()};
}

QPoly qpoly_normalize(const QuotientRing &ring, QPoly f) {
    for (auto &c : f)
        c = ring.reduce(c);
    while (!f.empty() && f.back().is_zero())
        f.pop_back();
    return f;
}

namespace {

// Makes f monic in x. A nonzero leading coefficient that is a zero divisor
// yields a splitting instead.
std::variant<QPoly, Splitting> make_monic(const QuotientRing &ring, QPoly f) {
    if (f.empty())
        return f;
    auto inv = ring.inverse(f.back());
    if (auto *s = std::get_if<Splitting>(&inv))
        return *s;
    const UniPoly &k = std::get<UniPoly>(inv);
    for (auto &c : f)
        c = ring.mul(c, k);
    return f;
}

// f mod g for monic g.
QPoly qpoly_rem(const QuotientRing &ring, QPoly f, const QPoly &g) {
    int dg = static_cast<int>(g.size()) - 1;
    f = qpoly_normalize(ring, std::move(f));
    while (static_cast<int>(f.size()) - 1 >= dg) {
        int shift = static_cast<int>(f.size()) - 1 - dg;
        UniPoly lead = f.back();
        for (int i = 0; i <= dg; ++i) {
            auto &slot = f[static_cast<std::size_t>(shift + i)];
            slot = ring.sub(slot, ring.mul(lead, g[static_cast<std::size_t>(i)]));
        }
        f = qpoly_normalize(ring, std::move(f));
    }
    return f;
}

} // namespace

QuotientGcdResult quotient_gcd(const QuotientRing &ring, const QPoly &f, const QPoly &g) {
    QPoly a = qpoly_normalize(ring, f);
    QPoly b = qpoly_normalize(ring, g);
    if (a.size() < b.size())
        std::swap(a, b);
    if (a.empty())
        throw Error(ErrorKind::Precondition, "gcd(0, 0) is undefined");
    while (!b.empty()) {
        auto monic_b = make_monic(ring, std::move(b));
        if (auto *s = std::get_if<Splitting>(&monic_b))
            return *s;
        b = std::get<QPoly>(std::move(monic_b));
        QPoly r = qpoly_rem(ring, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(ring, std::move(a));
}

} // namespace triconic
