#pragma once

// SVG of the real points of an arrangement in an affine chart.
//
// The chart is given as "V = a*U + b*W + c" with V one of X, Y, Z and c != 0;
// the plot axes are U (horizontal) and W (vertical) in XYZ order. Output is
// a pure function of its inputs.

#include "triconic/singularity.hpp"

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace triconic {

struct Slice {
    int solved = 2;                 // 0 = X, 1 = Y, 2 = Z
    std::array<int, 2> axes{0, 1};  // the remaining variables, in order
    std::array<Rational, 2> coeff;  // of axes[0], axes[1]
    Rational constant = 1;
};

/// Throws Error(Parse) on bad syntax and Error(Precondition) when the
/// constant term is zero or the solved variable appears on the right.
Slice parse_slice(std::string_view text);
std::string format_slice(const Slice &s);

struct Window {
    double x0 = -4, x1 = 4, y0 = -4, y1 = 4;
};
/// "x0,x1,y0,y1" with x0 < x1 and y0 < y1.
Window parse_window(std::string_view text);

struct PlotOptions {
    Slice slice;
    std::optional<Window> window; // fitted to the real singular points if unset
    int size = 600;               // canvas is size x size pixels
};

/// Numerical coordinates of each point of a locus, in input coordinates.
std::vector<std::array<std::complex<double>, 3>> locus_points(const PointLocus &locus, const Matrix3 &frame);

std::string render_svg(const Arrangement &arr, const Classification &c, const PlotOptions &opts);

} // namespace triconic
