#include "triconic/conic.hpp"

#include "triconic/error.hpp"

#include <random>

namespace triconic {

Matrix3 identity_matrix() {
    Matrix3 m;
    for (int i = 0; i < 3; ++i)
        m[i][i] = FieldElem(1);
    return m;
}

Matrix3 operator*(const Matrix3 &a, const Matrix3 &b) {
    Matrix3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                out[i][j] += a[i][k] * b[k][j];
    return out;
}

Matrix3 transpose(const Matrix3 &m) {
    Matrix3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out[i][j] = m[j][i];
    return out;
}

Matrix3 adjugate(const Matrix3 &m) {
    Matrix3 out;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            out[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        }
    }
    return out;
}

FieldElem determinant(const Matrix3 &m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

ProjPoint mat_vec(const Matrix3 &m, const ProjPoint &p) {
    ProjPoint out;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            out[i] += m[i][k] * p[k];
    return out;
}

ProjPoint normalize_point(const ProjPoint &p) {
    for (int i = 0; i < 3; ++i) {
        if (p[i].is_zero())
            continue;
        FieldElem inv = p[i].inverse();
        return {p[0] * inv, p[1] * inv, p[2] * inv};
    }
    throw Error(ErrorKind::Precondition, "the zero vector is not a projective point");
}

std::string format_point(const ProjPoint &p) {
    return "[" + p[0].to_string() + " : " + p[1].to_string() + " : " + p[2].to_string() + "]";
}

FieldElem eval_line(const LinearForm &l, const ProjPoint &p) {
    return l[0] * p[0] + l[1] * p[1] + l[2] * p[2];
}

std::string format_line(const LinearForm &l) {
    TernaryForm f(1);
    f.add_term({1, 0, 0}, l[0]);
    f.add_term({0, 1, 0}, l[1]);
    f.add_term({0, 0, 1}, l[2]);
    return f.to_string();
}

namespace {

const FieldElem kHalf(Rational(1, 2));

} // namespace

Matrix3 Conic::matrix() const {
    Matrix3 m;
    m[0][0] = c_[kXX];
    m[1][1] = c_[kYY];
    m[2][2] = c_[kZZ];
    m[0][1] = m[1][0] = c_[kXY] * kHalf;
    m[0][2] = m[2][0] = c_[kXZ] * kHalf;
    m[1][2] = m[2][1] = c_[kYZ] * kHalf;
    return m;
}

Conic Conic::from_matrix(const Matrix3 &m) {
    Coefficients c;
    c[kXX] = m[0][0];
    c[kYY] = m[1][1];
    c[kZZ] = m[2][2];
    c[kXY] = m[0][1] + m[1][0];
    c[kXZ] = m[0][2] + m[2][0];
    c[kYZ] = m[1][2] + m[2][1];
    return Conic(c);
}

Conic Conic::from_form(const TernaryForm &f) {
    if (f.degree() != 2 && !f.is_zero())
        throw Error(ErrorKind::Precondition, "conic from a form of degree != 2");
    Coefficients c;
    c[kXX] = f.coeff({2, 0, 0});
    c[kYY] = f.coeff({0, 2, 0});
    c[kZZ] = f.coeff({0, 0, 2});
    c[kXY] = f.coeff({1, 1, 0});
    c[kXZ] = f.coeff({1, 0, 1});
    c[kYZ] = f.coeff({0, 1, 1});
    return Conic(c);
}

Conic Conic::from_lines(const LinearForm &l1, const LinearForm &l2) {
    Coefficients c;
    c[kXX] = l1[0] * l2[0];
    c[kYY] = l1[1] * l2[1];
    c[kZZ] = l1[2] * l2[2];
    c[kXY] = l1[0] * l2[1] + l1[1] * l2[0];
    c[kXZ] = l1[0] * l2[2] + l1[2] * l2[0];
    c[kYZ] = l1[1] * l2[2] + l1[2] * l2[1];
    return Conic(c);
}

bool Conic::is_zero() const {
    for (const auto &c : c_)
        if (!c.is_zero())
            return false;
    return true;
}

TernaryForm Conic::to_form() const {
    TernaryForm f(2);
    f.add_term({2, 0, 0}, c_[kXX]);
    f.add_term({0, 2, 0}, c_[kYY]);
    f.add_term({0, 0, 2}, c_[kZZ]);
    f.add_term({1, 1, 0}, c_[kXY]);
    f.add_term({1, 0, 1}, c_[kXZ]);
    f.add_term({0, 1, 1}, c_[kYZ]);
    return f;
}

FieldElem Conic::eval(const ProjPoint &p) const {
    const auto &[x, y, z] = p;
    return c_[kXX] * x * x + c_[kYY] * y * y + c_[kZZ] * z * z + c_[kXY] * x * y +
           c_[kXZ] * x * z + c_[kYZ] * y * z;
}

LinearForm Conic::polar(const ProjPoint &p) const { return mat_vec(matrix(), p); }

bool Conic::is_tangent(const LinearForm &line) const {
    // l^T adj(A) l = 0 is the dual conic condition.
    return eval_line(line, mat_vec(adjugate(matrix()), line)).is_zero();
}

ProjPoint Conic::contact_point(const LinearForm &line) const {
    return normalize_point(mat_vec(adjugate(matrix()), line));
}

Conic Conic::transformed(const Matrix3 &m) const {
    return from_matrix(transpose(m) * matrix() * m);
}

Conic Conic::operator*(const FieldElem &k) const {
    Coefficients c = c_;
    for (auto &x : c)
        x *= k;
    return Conic(c);
}

Conic Conic::operator+(const Conic &o) const {
    Coefficients c = c_;
    for (std::size_t i = 0; i < 6; ++i)
        c[i] += o.c_[i];
    return Conic(c);
}

std::string Conic::to_string() const { return to_form().to_string(); }

bool proportional(const Conic &a, const Conic &b) {
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (!(a[i] * b[j] - a[j] * b[i]).is_zero())
                return false;
    return true;
}

TernaryForm Arrangement::sextic() const {
    return conics_[0].to_form() * conics_[1].to_form() * conics_[2].to_form();
}

Arrangement make_arrangement(const std::array<Conic, 3> &conics, const FieldContext &ctx) {
    for (int i = 0; i < 3; ++i) {
        const Conic &q = conics[static_cast<std::size_t>(i)];
        for (const auto &c : q.coeffs())
            if (!c.is_rational() && c.discriminant() != ctx.discriminant())
                throw Error(ErrorKind::Validation,
                            "conic " + std::to_string(i + 1) + " has a coefficient outside Q(sqrt(" +
                                std::to_string(ctx.discriminant()) + "))");
        if (q.is_zero())
            throw Error(ErrorKind::Validation, "conic " + std::to_string(i + 1) + " is identically zero");
        if (!q.is_smooth())
            throw Error(ErrorKind::Validation, "singular conic: Q" + std::to_string(i + 1) + " = " +
                                                   q.to_string());
    }
    for (const auto &[i, j] : kPairs)
        if (proportional(conics[static_cast<std::size_t>(i)], conics[static_cast<std::size_t>(j)]))
            throw Error(ErrorKind::Validation, "duplicate conic: Q" + std::to_string(i + 1) +
                                                   " and Q" + std::to_string(j + 1) +
                                                   " are proportional");
    Arrangement arr;
    arr.conics_ = conics;
    arr.ctx_ = ctx;
    return arr;
}

Arrangement make_arrangement(const std::array<Conic::Coefficients, 3> &coeffs,
                             const FieldContext &ctx) {
    return make_arrangement(std::array<Conic, 3>{Conic(coeffs[0]), Conic(coeffs[1]), Conic(coeffs[2])},
                            ctx);
}

Matrix3 random_change_matrix(std::uint64_t seed) {
    if (seed == kIdentitySeed)
        return identity_matrix();
    std::mt19937_64 gen(seed);
    while (true) {
        Matrix3 m;
        for (auto &row : m)
            for (auto &x : row)
                x = FieldElem(static_cast<long>(gen() % 7) - 3);
        if (!determinant(m).is_zero())
            return m;
    }
}

Arrangement apply_change(const Arrangement &arr, const Matrix3 &m) {
    if (determinant(m).is_zero())
        throw Error(ErrorKind::Precondition, "coordinate change must be invertible");
    std::array<Conic, 3> out;
    for (int i = 0; i < 3; ++i)
        out[static_cast<std::size_t>(i)] = arr.conic(i).transformed(m);
    return make_arrangement(out, arr.context());
}

CoordinateChange random_coordinate_change(const Arrangement &arr, std::uint64_t seed) {
    Matrix3 m = random_change_matrix(seed);
    return {apply_change(arr, m), m, seed};
}

} // namespace triconic
