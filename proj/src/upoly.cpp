#include "triconic/upoly.hpp"

#include "triconic/error.hpp"

#include <algorithm>
#include <utility>

namespace triconic {

UniPoly::UniPoly(std::vector<FieldElem> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const FieldElem &constant) {
    if (!constant.is_zero())
        c_.push_back(constant);
}

UniPoly UniPoly::monomial(const FieldElem &c, int k) {
    std::vector<FieldElem> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const FieldElem &root) { return UniPoly({-root, FieldElem(1)}); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

const FieldElem &UniPoly::lc() const {
    if (c_.empty())
        throw Error(ErrorKind::Precondition, "leading coefficient of the zero polynomial");
    return c_.back();
}

FieldElem UniPoly::coeff(int k) const {
    if (k < 0 || k > degree())
        return FieldElem(0);
    return c_[static_cast<std::size_t>(k)];
}

FieldElem UniPoly::eval(const FieldElem &t) const {
    FieldElem acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1)
        return {};
    std::vector<FieldElem> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * FieldElem(static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero())
        return {};
    if (lc().is_one())
        return *this;
    FieldElem inv = lc().inverse();
    return *this * inv;
}

UniPoly &UniPoly::operator+=(const UniPoly &o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly &UniPoly::operator-=(const UniPoly &o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly &UniPoly::operator*=(const FieldElem &k) {
    if (k.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto &c : c_)
        c *= k;
    return *this;
}

UniPoly operator*(const UniPoly &a, const UniPoly &b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<FieldElem> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (auto &c : out.c_)
        c = -c;
    return out;
}

std::string UniPoly::to_string(const std::string &var) const {
    if (is_zero())
        return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const FieldElem &c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero())
            continue;
        std::string cs = c.to_string();
        bool compound = !c.is_rational() && sgn(c.r()) != 0;
        if (compound)
            cs = "(" + cs + ")";
        bool negative = !compound && !cs.empty() && cs[0] == '-';
        if (!out.empty())
            out += negative ? " - " : " + ";
        else if (negative)
            out += "-";
        if (negative)
            cs.erase(0, 1);
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (k == 0)
            out += cs;
        else if (cs == "1")
            out += mono;
        else
            out += cs + "*" + mono;
    }
    return out;
}

DivMod divmod(const UniPoly &f, const UniPoly &g) {
    if (g.is_zero())
        throw Error(ErrorKind::Precondition, "polynomial division by zero");
    if (f.degree() < g.degree())
        return {UniPoly{}, f};
    std::vector<FieldElem> rem = f.coeffs();
    std::vector<FieldElem> quo(static_cast<std::size_t>(f.degree() - g.degree() + 1));
    FieldElem inv = g.lc().inverse();
    const auto &gc = g.coeffs();
    int dg = g.degree();
    for (int k = f.degree(); k >= dg; --k) {
        FieldElem q = rem[static_cast<std::size_t>(k)] * inv;
        if (q.is_zero())
            continue;
        quo[static_cast<std::size_t>(k - dg)] = q;
        for (int i = 0; i <= dg; ++i)
            rem[static_cast<std::size_t>(k - dg + i)] -= q * gc[static_cast<std::size_t>(i)];
    }
    rem.resize(static_cast<std::size_t>(dg));
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly operator%(const UniPoly &f, const UniPoly &g) { return divmod(f, g).remainder; }

UniPoly exact_div(const UniPoly &f, const UniPoly &g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero())
        throw Error(ErrorKind::Internal, "inexact polynomial division");
    return q;
}

bool divides(const UniPoly &g, const UniPoly &f) { return (f % g).is_zero(); }

UniPoly pseudo_remainder(const UniPoly &f, const UniPoly &g) {
    if (g.is_zero())
        throw Error(ErrorKind::Precondition, "pseudo-division by zero");
    int delta = f.degree() - g.degree();
    if (delta < 0)
        return f;
    // Fraction-free: never divides by lc(g).
    UniPoly r = f;
    const FieldElem &b = g.lc();
    int steps = 0;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        UniPoly shifted = UniPoly::monomial(r.lc(), r.degree() - g.degree()) * g;
        r = r * b - shifted;
        ++steps;
    }
    int missing = delta + 1 - steps;
    if (missing > 0)
        r *= pow(b, static_cast<unsigned>(missing));
    return r;
}

UniPoly upoly_gcd(const UniPoly &f, const UniPoly &g) {
    if (f.is_zero() && g.is_zero())
        throw Error(ErrorKind::Precondition, "gcd(0, 0) is undefined");
    UniPoly a = f, b = g;
    if (a.degree() < b.degree())
        std::swap(a, b);
    if (b.is_zero())
        return a.monic();
    // Subresultant PRS (Brown/Collins).
    FieldElem gg(1), h(1);
    while (true) {
        int delta = a.degree() - b.degree();
        UniPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.is_zero())
            return a.monic();
        if (r.degree() == 0)
            return UniPoly(FieldElem(1));
        b = r * (gg * pow(h, static_cast<unsigned>(delta))).inverse();
        gg = a.lc();
        if (delta == 0)
            continue; // h unchanged
        h = pow(gg, static_cast<unsigned>(delta)) / pow(h, static_cast<unsigned>(delta - 1));
    }
}

ExtendedGcd upoly_xgcd(const UniPoly &f, const UniPoly &g) {
    if (f.is_zero() && g.is_zero())
        throw Error(ErrorKind::Precondition, "gcd(0, 0) is undefined");
    UniPoly r0 = f, r1 = g;
    UniPoly s0(FieldElem(1)), s1;
    UniPoly t0, t1(FieldElem(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    FieldElem inv = r0.lc().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

FieldElem resultant(const UniPoly &f, const UniPoly &g) {
    if (f.is_zero() || g.is_zero())
        throw Error(ErrorKind::Precondition, "resultant of a zero polynomial");
    if (f.degree() == 0)
        return pow(f.lc(), static_cast<unsigned>(g.degree()));
    if (g.degree() == 0)
        return pow(g.lc(), static_cast<unsigned>(f.degree()));

    UniPoly a = f, b = g;
    FieldElem sign(1);
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1))
            sign = FieldElem(-1);
    }
    FieldElem gg(1), h(1);
    while (true) {
        int da = a.degree(), db = b.degree();
        int delta = da - db;
        if ((da & 1) && (db & 1))
            sign = -sign;
        UniPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        FieldElem denom = gg * pow(h, static_cast<unsigned>(delta));
        b = r * denom.inverse();
        gg = a.lc();
        // h <- h^(1 - delta) * g^delta
        h = pow(gg, static_cast<unsigned>(delta)) * pow(h.inverse(), static_cast<unsigned>(delta)) * h;
        if (b.is_zero())
            return FieldElem(0);
        if (b.degree() == 0)
            break;
    }
    int da = a.degree();
    // h <- h^(1 - deg a) * lc(b)^deg a
    FieldElem last = pow(b.lc(), static_cast<unsigned>(da)) *
                     pow(h.inverse(), static_cast<unsigned>(da)) * h;
    return sign * last;
}

UniPoly SquarefreeDecomposition::expand() const {
    UniPoly out(unit);
    for (const auto &[factor, mult] : factors)
        for (int i = 0; i < mult; ++i)
            out = out * factor;
    return out;
}

SquarefreeDecomposition squarefree_decomposition(const UniPoly &f) {
    if (f.is_zero())
        throw Error(ErrorKind::Precondition, "zero input");
    SquarefreeDecomposition out{f.lc(), {}};
    if (f.degree() == 0)
        return out;
    UniPoly p = f.monic();
    UniPoly dp = p.derivative();
    UniPoly a = upoly_gcd(p, dp);
    UniPoly b = exact_div(p, a);
    UniPoly c = exact_div(dp, a);
    UniPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        UniPoly ai = d.is_zero() ? b.monic() : upoly_gcd(b, d);
        if (ai.degree() > 0)
            out.factors.push_back({ai, i});
        b = exact_div(b, ai);
        c = exact_div(d, ai);
        d = c - b.derivative();
    }
    return out;
}

std::vector<UniPoly> gcd_free_basis(const std::vector<UniPoly> &polys) {
    std::vector<UniPoly> basis;
    for (const auto &p : polys)
        if (p.degree() > 0)
            basis.push_back(p.monic());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
                UniPoly g = upoly_gcd(basis[i], basis[j]);
                if (g.degree() < 1)
                    continue;
                UniPoly bi = exact_div(basis[i], g).monic();
                UniPoly bj = exact_div(basis[j], g).monic();
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(j));
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
                for (auto *q : {&g, &bi, &bj})
                    if (q->degree() > 0)
                        basis.push_back(std::move(*q));
                changed = true;
            }
        }
    }
    return basis;
}

} // namespace triconic
