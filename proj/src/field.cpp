#include "triconic/field.hpp"

#include "triconic/error.hpp"

#include <cmath>
#include <cstdlib>

namespace triconic {

const char *to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Validation: return "validation error";
    case ErrorKind::UnsupportedSingularity: return "unsupported singularity";
    case ErrorKind::DegenerateCoordinates: return "degenerate coordinates";
    case ErrorKind::GenericityUnreachable: return "genericity unreachable";
    case ErrorKind::Precondition: return "precondition violated";
    case ErrorKind::Internal: return "internal error";
    }
    return "error";
}

namespace {

bool parse_integer(std::string_view text, mpz_class &out) {
    if (text.empty())
        return false;
    std::size_t i = text[0] == '-' ? 1 : 0;
    if (i == text.size() || (text[i] == '0' && (i == 1 || text.size() > 1)))
        return false;
    for (std::size_t k = i; k < text.size(); ++k)
        if (text[k] < '0' || text[k] > '9')
            return false;
    return out.set_str(std::string(text), 10) == 0;
}

std::optional<Rational> rational_sqrt(const Rational &q) {
    if (sgn(q) < 0)
        return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    Rational out(rn, rd);
    out.canonicalize();
    return out;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    mpz_class num, den(1);
    bool ok = parse_integer(text.substr(0, slash), num);
    if (ok && slash != std::string_view::npos) {
        auto den_text = text.substr(slash + 1);
        ok = !den_text.empty() && den_text[0] != '-' && den_text[0] != '+' &&
             parse_integer(den_text, den) && den > 0;
        if (ok) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            ok = g == 1;
        }
    }
    if (!ok)
        throw Error(ErrorKind::Parse, "malformed rational literal '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational &q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_square_free(long d) {
    if (d == 0)
        return false;
    unsigned long n = static_cast<unsigned long>(std::labs(d));
    for (unsigned long p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0)
            return false;
    return true;
}

FieldContext::FieldContext(long discriminant) : d_(discriminant) {
    if (!is_square_free(discriminant))
        throw Error(ErrorKind::Validation,
                    "field discriminant " + std::to_string(discriminant) + " is not square-free");
}

FieldElem::FieldElem(const FieldContext &ctx, const Rational &r, const Rational &s)
    : r_(r), s_(s), d_(ctx.discriminant()) {
    r_.canonicalize();
    s_.canonicalize();
    if (ctx.is_rational() && sgn(s_) != 0)
        throw Error(ErrorKind::Validation, "sqrt part given over the rational field (D = 1)");
}

long FieldElem::join(const FieldElem &o) const {
    if (d_ == o.d_ || o.is_rational())
        return d_;
    if (is_rational())
        return o.d_;
    throw Error(ErrorKind::Precondition, "mixing elements of Q(sqrt(" + std::to_string(d_) +
                                             ")) and Q(sqrt(" + std::to_string(o.d_) + "))");
}

FieldElem &FieldElem::operator+=(const FieldElem &o) {
    d_ = join(o);
    r_ += o.r_;
    s_ += o.s_;
    return *this;
}

FieldElem &FieldElem::operator-=(const FieldElem &o) {
    d_ = join(o);
    r_ -= o.r_;
    s_ -= o.s_;
    return *this;
}

FieldElem &FieldElem::operator*=(const FieldElem &o) {
    d_ = join(o);
    if (o.is_rational()) {
        r_ *= o.r_;
        s_ *= o.r_;
        return *this;
    }
    Rational r = r_ * o.r_ + Rational(d_) * s_ * o.s_;
    Rational s = r_ * o.s_ + s_ * o.r_;
    r_ = std::move(r);
    s_ = std::move(s);
    return *this;
}

FieldElem &FieldElem::operator/=(const FieldElem &o) {
    if (o.is_rational()) {
        if (sgn(o.r_) == 0)
            throw Error(ErrorKind::Precondition, "division by zero");
        d_ = join(o);
        r_ /= o.r_;
        s_ /= o.r_;
        return *this;
    }
    return *this *= o.inverse();
}

FieldElem FieldElem::operator-() const {
    FieldElem out = *this;
    out.r_ = -out.r_;
    out.s_ = -out.s_;
    return out;
}

Rational FieldElem::norm() const { return r_ * r_ - Rational(d_) * s_ * s_; }

FieldElem FieldElem::conjugate() const {
    FieldElem out = *this;
    out.s_ = -out.s_;
    return out;
}

FieldElem FieldElem::inverse() const {
    if (is_zero())
        throw Error(ErrorKind::Precondition, "inverse of zero");
    Rational n = norm();
    FieldElem out = conjugate();
    out.r_ /= n;
    out.s_ /= n;
    return out;
}

double FieldElem::to_double() const {
    return r_.get_d() + s_.get_d() * std::sqrt(static_cast<double>(d_));
}

std::string FieldElem::to_string() const {
    if (is_rational())
        return format_rational(r_);
    std::string out;
    if (sgn(r_) != 0)
        out = format_rational(r_) + (sgn(s_) > 0 ? " + " : " - ");
    else if (sgn(s_) < 0)
        out = "-";
    Rational mag = abs(s_);
    if (mag != 1)
        out += format_rational(mag) + "*";
    return out + "sqrt(" + std::to_string(d_) + ")";
}

FieldElem pow(FieldElem base, unsigned exponent) {
    FieldElem acc(1);
    while (exponent) {
        if (exponent & 1u)
            acc *= base;
        exponent >>= 1u;
        if (exponent)
            base *= base;
    }
    return acc;
}

std::optional<FieldElem> sqrt_in_field(const FieldElem &x, const FieldContext &ctx) {
    long d = ctx.discriminant();
    if (!x.is_rational() && x.discriminant() != d)
        throw Error(ErrorKind::Precondition, "element not in the context field");
    if (x.is_rational()) {
        if (auto q = rational_sqrt(x.r()))
            return FieldElem(*q);
        if (ctx.is_rational())
            return std::nullopt;
        // x = D * s^2 with s rational
        if (auto s = rational_sqrt(x.r() / Rational(d)))
            return FieldElem(ctx, 0, *s);
        return std::nullopt;
    }
    // (u + v sqrt D)^2 = a + b sqrt D  <=>  u^2 + D v^2 = a, 2uv = b.
    auto w = rational_sqrt(x.norm());
    if (!w)
        return std::nullopt;
    for (const Rational &cand : {Rational((x.r() + *w) / 2), Rational((x.r() - *w) / 2)}) {
        auto u = rational_sqrt(cand);
        if (!u || sgn(*u) == 0)
            continue;
        FieldElem root(ctx, *u, x.s() / (2 * *u));
        if (root * root == x)
            return root;
    }
    return std::nullopt;
}

} // namespace triconic
