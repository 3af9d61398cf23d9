#include "triconic/forms.hpp"

#include "triconic/error.hpp"

#include <algorithm>

namespace triconic {

std::vector<Exponent> monomial_basis(int degree, MonomialOrder order) {
    std::vector<Exponent> out;
    for (int a = degree; a >= 0; --a)
        for (int b = degree - a; b >= 0; --b)
            out.push_back({a, b, degree - a - b});
    if (order == MonomialOrder::RevLex)
        std::reverse(out.begin(), out.end());
    return out;
}

int monomial_count(int degree) { return degree < 0 ? 0 : (degree + 1) * (degree + 2) / 2; }

TernaryForm TernaryForm::monomial(const Exponent &e, const FieldElem &c) {
    TernaryForm f(e[0] + e[1] + e[2]);
    f.add_term(e, c);
    return f;
}

FieldElem TernaryForm::coeff(const Exponent &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElem(0) : it->second;
}

void TernaryForm::add_term(const Exponent &e, const FieldElem &c) {
    if (e[0] + e[1] + e[2] != degree_)
        throw Error(ErrorKind::Precondition, "monomial degree does not match form degree");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

TernaryForm TernaryForm::partial(int var) const {
    TernaryForm out(degree_ > 0 ? degree_ - 1 : 0);
    for (const auto &[e, c] : terms_) {
        if (e[var] == 0)
            continue;
        Exponent d = e;
        --d[var];
        out.add_term(d, c * FieldElem(static_cast<long>(e[var])));
    }
    return out;
}

FieldElem TernaryForm::eval(const std::array<FieldElem, 3> &point) const {
    FieldElem acc(0);
    for (const auto &[e, c] : terms_) {
        FieldElem term = c;
        for (int v = 0; v < 3; ++v)
            term *= pow(point[v], static_cast<unsigned>(e[v]));
        acc += term;
    }
    return acc;
}

TernaryForm &TernaryForm::operator+=(const TernaryForm &o) {
    if (is_zero() && degree_ != o.degree_)
        degree_ = o.degree_;
    for (const auto &[e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

TernaryForm &TernaryForm::operator*=(const FieldElem &k) {
    if (k.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, c] : terms_)
        c *= k;
    return *this;
}

TernaryForm operator*(const TernaryForm &a, const TernaryForm &b) {
    TernaryForm out(a.degree_ + b.degree_);
    for (const auto &[ea, ca] : a.terms_)
        for (const auto &[eb, cb] : b.terms_)
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
}

std::string TernaryForm::to_string() const {
    if (terms_.empty())
        return "0";
    static const char *names[] = {"X", "Y", "Z"};
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[e, c] = *it;
        std::string cs = c.is_rational() ? c.to_string() : "(" + c.to_string() + ")";
        bool negative = c.is_rational() && cs[0] == '-';
        if (negative)
            cs.erase(0, 1);
        if (!out.empty())
            out += negative ? " - " : " + ";
        else if (negative)
            out += "-";
        std::string mono;
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0)
                continue;
            mono += names[v];
            if (e[v] > 1)
                mono += "^" + std::to_string(e[v]);
        }
        if (mono.empty())
            out += cs;
        else if (cs == "1")
            out += mono;
        else
            out += cs + "*" + mono;
    }
    return out;
}

} // namespace triconic
