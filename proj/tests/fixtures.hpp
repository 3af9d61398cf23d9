#pragma once

#include "triconic/conic.hpp"

#include <array>

namespace fixture {

using triconic::Arrangement;
using triconic::Conic;
using triconic::FieldContext;
using triconic::FieldElem;

// Coefficients in the order X^2, Y^2, Z^2, XY, XZ, YZ.
inline Conic conic(std::array<long, 6> c) {
    Conic::Coefficients out;
    for (std::size_t i = 0; i < 6; ++i)
        out[i] = FieldElem(c[i]);
    return Conic(out);
}

inline Arrangement triple(std::array<long, 6> a, std::array<long, 6> b, std::array<long, 6> c) {
    return triconic::make_arrangement(std::array<Conic, 3>{conic(a), conic(b), conic(c)}, FieldContext(1));
}

inline Arrangement persson() {
    return triple({1, 1, -1, 0, 0, 0}, {2, 1, 0, 0, 2, 0}, {2, 1, 0, 0, -2, 0});
}

inline Arrangement pokora() {
    return triple({-3, 0, 0, 1, 1, 1}, {0, -3, 0, 1, 1, 1}, {0, 0, -3, 1, 1, 1});
}

// 4(X+Z)^2 - 6(XZ+Z^2) + 3Y^2 expands to 4X^2 + 3Y^2 - 2Z^2 + 2XZ.
inline Arrangement example2() {
    return triple({1, 1, -1, 0, 0, 0}, {4, 1, -1, 0, 0, 0}, {4, 3, -2, 0, 2, 0});
}

} // namespace fixture
