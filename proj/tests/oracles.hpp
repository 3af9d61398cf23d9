#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the library's polynomial algorithms; only FieldElem arithmetic is shared.

#include "triconic/field.hpp"
#include "triconic/upoly.hpp"

#include <map>
#include <random>
#include <vector>

namespace oracle {

using triconic::FieldElem;
using triconic::Rational;
using triconic::UniPoly;

using Matrix = std::vector<std::vector<FieldElem>>;

inline FieldElem determinant(Matrix m) {
    std::size_t n = m.size();
    FieldElem det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero())
            ++p;
        if (p == n)
            return FieldElem(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        FieldElem inv = m[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            FieldElem k = m[r][c] * inv;
            if (k.is_zero())
                continue;
            for (std::size_t j = c; j < n; ++j)
                m[r][j] -= k * m[c][j];
        }
    }
    return det;
}

inline std::size_t rank(Matrix m) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0, r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        FieldElem inv = m[r][c].inverse();
        for (std::size_t i = r + 1; i < rows; ++i) {
            FieldElem k = m[i][c] * inv;
            if (k.is_zero())
                continue;
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= k * m[r][j];
        }
        ++r;
    }
    return r;
}

// Sylvester matrix with the rows of f first.
inline FieldElem sylvester_resultant(const UniPoly &f, const UniPoly &g) {
    int m = f.degree(), n = g.degree();
    std::size_t size = static_cast<std::size_t>(m + n);
    Matrix s(size, std::vector<FieldElem>(size));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = f.coeff(m - k);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k)
            s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + k)] = g.coeff(n - k);
    return determinant(s);
}

// Synthetic division by (t - r); returns the quotient when r is a root.
inline bool deflate(std::vector<FieldElem> &c, const FieldElem &r) {
    if (c.size() < 2)
        return false;
    std::vector<FieldElem> q(c.size() - 1);
    FieldElem acc(0);
    for (std::size_t i = c.size(); i-- > 1;) {
        acc = acc * r + c[i];
        q[i - 1] = acc;
    }
    if (!(acc * r + c[0]).is_zero())
        return false;
    c = std::move(q);
    return true;
}

// Multiplicity of every rational root a/b with |a| <= bound, 1 <= b <= bound.
inline std::map<Rational, int> rational_root_multiplicities(const UniPoly &f, int bound = 12) {
    std::map<Rational, int> out;
    std::vector<FieldElem> c = f.coeffs();
    for (int b = 1; b <= bound; ++b) {
        for (int a = -bound; a <= bound; ++a) {
            Rational r(a, b);
            r.canonicalize();
            if (out.count(r))
                continue;
            int k = 0;
            while (deflate(c, FieldElem(r)))
                ++k;
            if (k)
                out[r] = k;
        }
    }
    return out;
}

inline FieldElem random_elem(std::mt19937 &gen, const triconic::FieldContext &ctx, int range = 5) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 4);
    Rational r(num(gen), den(gen)), s(num(gen), den(gen));
    r.canonicalize();
    s.canonicalize();
    if (ctx.is_rational())
        return FieldElem(r);
    return FieldElem(ctx, r, s);
}

inline UniPoly from_roots(const std::vector<FieldElem> &roots, const FieldElem &lc = FieldElem(1)) {
    std::vector<FieldElem> c{lc};
    for (const FieldElem &r : roots) {
        std::vector<FieldElem> next(c.size() + 1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return UniPoly(c);
}

} // namespace oracle

#include <doctest.h>

namespace doctest {
template <> struct StringMaker<triconic::FieldElem> {
    static String convert(const triconic::FieldElem &x) { return x.to_string().c_str(); }
};
template <> struct StringMaker<triconic::UniPoly> {
    static String convert(const triconic::UniPoly &p) { return p.to_string().c_str(); }
};
} // namespace doctest
