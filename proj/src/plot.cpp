#include "triconic/plot.hpp"

#include "triconic/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace triconic {

namespace {

using cplx = std::complex<double>;

int var_index(char c) {
    switch (c) {
    case 'X': case 'x': return 0;
    case 'Y': case 'y': return 1;
    case 'Z': case 'z': return 2;
    }
    return -1;
}

const char *kVarNames[] = {"X", "Y", "Z"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    return s == "-0.00" ? "0.00" : s;
}

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

cplx to_complex(const FieldElem &x, long d) {
    double r = x.r().get_d(), s = x.s().get_d();
    if (d > 0)
        return {r + s * std::sqrt(static_cast<double>(d)), 0};
    return {r, s * std::sqrt(static_cast<double>(-d))};
}

// Durand-Kerner on the monic normalization, then a few Newton steps.
std::vector<cplx> poly_roots(std::vector<cplx> c) {
    while (!c.empty() && std::abs(c.back()) == 0)
        c.pop_back();
    int n = static_cast<int>(c.size()) - 1;
    if (n < 1)
        return {};
    cplx lead = c.back();
    for (auto &x : c)
        x /= lead;
    auto eval = [&](cplx z) {
        cplx acc = 0;
        for (int i = n; i >= 0; --i)
            acc = acc * z + c[static_cast<std::size_t>(i)];
        return acc;
    };
    auto deriv = [&](cplx z) {
        cplx acc = 0;
        for (int i = n; i >= 1; --i)
            acc = acc * z + c[static_cast<std::size_t>(i)] * static_cast<double>(i);
        return acc;
    };
    double radius = 1;
    for (int i = 0; i < n; ++i)
        radius = std::max(radius, 1 + std::abs(c[static_cast<std::size_t>(i)]));
    std::vector<cplx> z(static_cast<std::size_t>(n));
    cplx seed(0.4, 0.9);
    for (int k = 0; k < n; ++k)
        z[static_cast<std::size_t>(k)] = std::pow(seed, k) * (radius / 2);
    for (int it = 0; it < 800; ++it) {
        double change = 0;
        for (std::size_t k = 0; k < z.size(); ++k) {
            cplx denom = 1;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != k)
                    denom *= z[k] - z[j];
            if (std::abs(denom) == 0)
                denom = 1e-12;
            cplx step = eval(z[k]) / denom;
            z[k] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-15)
            break;
    }
    for (auto &r : z)
        for (int it = 0; it < 3; ++it)
            if (cplx d = deriv(r); std::abs(d) > 1e-300)
                r -= eval(r) / d;
    return z;
}

// Conic in chart coordinates (u, w): coefficients of u^2, w^2, 1, uw, u, w.
std::array<double, 6> chart_conic(const Conic &q, const Slice &s) {
    // Columns of L send (u, w, 1) to a point of the chart.
    Matrix3 l{};
    l[static_cast<std::size_t>(s.axes[0])][0] = FieldElem(1);
    l[static_cast<std::size_t>(s.axes[1])][1] = FieldElem(1);
    l[static_cast<std::size_t>(s.solved)] = {FieldElem(s.coeff[0]), FieldElem(s.coeff[1]), FieldElem(s.constant)};
    Conic t = q.transformed(l);
    std::array<double, 6> out{};
    for (int k = 0; k < 6; ++k)
        out[static_cast<std::size_t>(k)] = t[k].to_double();
    return out;
}

// Real roots in w of the conic restricted to a vertical line u = const, or
// in u on a horizontal line when `swap` is set.
std::vector<double> line_roots(const std::array<double, 6> &c, double v, bool swap) {
    double a, b, k;
    if (!swap) {
        a = c[1];
        b = c[3] * v + c[5];
        k = c[0] * v * v + c[4] * v + c[2];
    } else {
        a = c[0];
        b = c[3] * v + c[4];
        k = c[1] * v * v + c[5] * v + c[2];
    }
    double scale = std::max({std::abs(a), std::abs(b), std::abs(k), 1e-300});
    if (std::abs(a) < 1e-12 * scale) {
        if (std::abs(b) < 1e-12 * scale)
            return {};
        return {-k / b};
    }
    double disc = b * b - 4 * a * k;
    if (disc < 0)
        return {};
    double r = std::sqrt(disc);
    // Stable form of the two roots.
    double qv = -0.5 * (b + (b >= 0 ? r : -r));
    std::vector<double> roots{qv / a, qv != 0 ? k / qv : qv / a};
    std::sort(roots.begin(), roots.end());
    return roots;
}

struct Canvas {
    Window w;
    int size;
    double px(double u) const { return (u - w.x0) / (w.x1 - w.x0) * size; }
    double py(double v) const { return size - (v - w.y0) / (w.y1 - w.y0) * size; }
    bool near(double u, double v) const {
        double mu = (w.x1 - w.x0) / 2, mv = (w.y1 - w.y0) / 2;
        return u > w.x0 - mu && u < w.x1 + mu && v > w.y0 - mv && v < w.y1 + mv;
    }
    bool inside(double u, double v) const { return u >= w.x0 && u <= w.x1 && v >= w.y0 && v <= w.y1; }
};

// Polylines traced by sweeping columns (or rows) and joining same-index roots.
std::vector<std::vector<std::pair<double, double>>> trace(const std::array<double, 6> &c, const Canvas &cv, bool swap) {
    std::vector<std::vector<std::pair<double, double>>> done;
    std::vector<std::vector<std::pair<double, double>>> open(2);
    std::size_t prev_count = 0;
    int samples = 2 * cv.size;
    double lo = swap ? cv.w.y0 : cv.w.x0, hi = swap ? cv.w.y1 : cv.w.x1;
    auto flush = [&](std::size_t i) {
        if (open[i].size() >= 2)
            done.push_back(open[i]);
        open[i].clear();
    };
    for (int s = 0; s <= samples; ++s) {
        double v = lo + (hi - lo) * s / samples;
        auto roots = line_roots(c, v, swap);
        if (roots.size() != prev_count)
            for (std::size_t i = 0; i < 2; ++i)
                flush(i);
        prev_count = roots.size();
        for (std::size_t i = 0; i < roots.size(); ++i) {
            double u = swap ? roots[i] : v, w = swap ? v : roots[i];
            if (!cv.near(u, w)) {
                flush(i);
                continue;
            }
            std::pair<double, double> p{cv.px(u), cv.py(w)};
            if (!open[i].empty()) {
                auto [x, y] = open[i].back();
                if (std::hypot(p.first - x, p.second - y) > 0.2 * cv.size)
                    flush(i);
            }
            open[i].push_back(p);
        }
    }
    for (std::size_t i = 0; i < 2; ++i)
        flush(i);
    return done;
}

struct Marker {
    std::string label;
    std::optional<std::pair<double, double>> chart; // real and finite in the chart
    std::string status;
};

} // namespace

Slice parse_slice(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    auto eq = s.find('=');
    if (eq != 1 || var_index(s[0]) < 0 || eq + 1 >= s.size())
        throw Error(ErrorKind::Parse, "slice must look like 'Z = X + Y + 1', got '" + std::string(text) + "'");
    Slice out;
    out.solved = var_index(s[0]);
    int k = 0;
    for (int v = 0; v < 3; ++v)
        if (v != out.solved)
            out.axes[static_cast<std::size_t>(k++)] = v;
    out.coeff = {Rational(0), Rational(0)};
    out.constant = 0;
    std::string rhs = s.substr(eq + 1);
    std::size_t i = 0;
    while (i < rhs.size()) {
        int sign = 1;
        if (rhs[i] == '+' || rhs[i] == '-') {
            sign = rhs[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw Error(ErrorKind::Parse, "slice: expected '+' or '-' in '" + rhs + "'");
        }
        std::size_t j = i;
        while (j < rhs.size() && (std::isdigit(static_cast<unsigned char>(rhs[j])) || rhs[j] == '/'))
            ++j;
        Rational c = j > i ? parse_rational(rhs.substr(i, j - i)) : Rational(1);
        if (j < rhs.size() && rhs[j] == '*')
            ++j;
        int var = j < rhs.size() ? var_index(rhs[j]) : -1;
        if (var < 0 && j == i)
            throw Error(ErrorKind::Parse, "slice: empty term in '" + rhs + "'");
        if (var >= 0)
            ++j;
        c *= sign;
        if (var < 0)
            out.constant += c;
        else if (var == out.solved)
            throw Error(ErrorKind::Precondition, "slice: " + std::string(kVarNames[var]) + " appears on both sides");
        else
            out.coeff[var == out.axes[0] ? 0 : 1] += c;
        i = j;
    }
    if (sgn(out.constant) == 0)
        throw Error(ErrorKind::Precondition, "slice: constant term must be nonzero for an affine chart");
    return out;
}

std::string format_slice(const Slice &s) {
    std::string out = std::string(kVarNames[s.solved]) + " = ";
    bool first = true;
    auto term = [&](const Rational &c, const std::string &var) {
        if (sgn(c) == 0)
            return;
        out += first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
        if (abs(c) != 1 || var.empty())
            out += format_rational(abs(c));
        out += var;
        first = false;
    };
    term(s.coeff[0], kVarNames[s.axes[0]]);
    term(s.coeff[1], kVarNames[s.axes[1]]);
    term(s.constant, "");
    return out;
}

Window parse_window(std::string_view text) {
    std::stringstream ss{std::string(text)};
    std::string tok;
    std::vector<double> v;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        double x = 0;
        try {
            x = std::stod(tok, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != tok.size() || !std::isfinite(x))
            throw Error(ErrorKind::Parse, "window: bad number '" + tok + "'");
        v.push_back(x);
    }
    if (v.size() != 4 || !(v[0] < v[1]) || !(v[2] < v[3]))
        throw Error(ErrorKind::Parse, "window must be x0,x1,y0,y1 with x0 < x1 and y0 < y1");
    return {v[0], v[1], v[2], v[3]};
}

std::vector<std::array<cplx, 3>> locus_points(const PointLocus &locus, const Matrix3 &frame) {
    long d = 1;
    auto track = [&](const FieldElem &x) {
        if (!x.is_rational())
            d = x.discriminant();
    };
    for (const auto &row : frame)
        for (const auto &x : row)
            track(x);
    for (const auto &x : locus.factor.coeffs())
        track(x);
    for (const auto &x : locus.z_residue.coeffs())
        track(x);
    if (locus.point)
        for (const auto &x : *locus.point)
            track(x);

    std::vector<std::array<cplx, 3>> out;
    if (locus.point) {
        out.push_back({to_complex((*locus.point)[0], d), to_complex((*locus.point)[1], d),
                       to_complex((*locus.point)[2], d)});
        return out;
    }
    std::vector<cplx> fc;
    for (const auto &x : locus.factor.coeffs())
        fc.push_back(to_complex(x, d));
    for (cplx x : poly_roots(fc)) {
        cplx z = 0;
        const auto &zc = locus.z_residue.coeffs();
        for (std::size_t i = zc.size(); i-- > 0;)
            z = z * x + to_complex(zc[i], d);
        std::array<cplx, 3> v{x, 1, z}, p{};
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t k = 0; k < 3; ++k)
                p[r] += to_complex(frame[r][k], d) * v[k];
        out.push_back(p);
    }
    return out;
}

std::string render_svg(const Arrangement &arr, const Classification &c, const PlotOptions &opts) {
    const Slice &sl = opts.slice;
    long d = arr.context().discriminant();
    bool real_field = true;
    for (const auto &q : arr.conics())
        for (const auto &x : q.coeffs())
            real_field = real_field && (x.is_rational() || d > 0);

    std::vector<Marker> markers;
    double a = sl.coeff[0].get_d(), b = sl.coeff[1].get_d(), k = sl.constant.get_d();
    for (const auto &pt : c.points) {
        for (const auto &p : locus_points(pt.locus, c.analysis.frame)) {
            Marker m{std::string(pt.type->name), std::nullopt, ""};
            double big = std::max({std::abs(p[0]), std::abs(p[1]), std::abs(p[2])});
            bool real = true;
            std::array<double, 3> re{};
            // Rotate so the largest coordinate is real before testing.
            cplx unit = big > 0 ? std::abs(p[0]) == big ? p[0] : std::abs(p[1]) == big ? p[1] : p[2] : cplx(1);
            for (std::size_t i = 0; i < 3; ++i) {
                cplx v = p[i] / unit;
                real = real && std::abs(v.imag()) < 1e-7;
                re[i] = v.real();
            }
            if (!real) {
                m.status = "complex";
            } else {
                double t = re[static_cast<std::size_t>(sl.solved)] - a * re[static_cast<std::size_t>(sl.axes[0])] -
                           b * re[static_cast<std::size_t>(sl.axes[1])];
                if (std::abs(t) < 1e-9) {
                    m.status = "at infinity of the chart";
                } else {
                    m.chart = std::make_pair(k * re[static_cast<std::size_t>(sl.axes[0])] / t,
                                             k * re[static_cast<std::size_t>(sl.axes[1])] / t);
                }
            }
            markers.push_back(m);
        }
    }

    Window w;
    if (opts.window) {
        w = *opts.window;
    } else {
        double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
        for (const auto &m : markers)
            if (m.chart) {
                x0 = std::min(x0, m.chart->first);
                x1 = std::max(x1, m.chart->first);
                y0 = std::min(y0, m.chart->second);
                y1 = std::max(y1, m.chart->second);
            }
        if (x0 <= x1) {
            double cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
            double half = std::max({(x1 - x0) / 2, (y1 - y0) / 2, 1.0}) * 1.4 + 0.5;
            w = {cx - half, cx + half, cy - half, cy + half};
        }
    }
    Canvas cv{w, opts.size};
    for (auto &m : markers)
        if (m.chart && !cv.inside(m.chart->first, m.chart->second)) {
            m.status = "outside window at (" + fmt(m.chart->first) + ", " + fmt(m.chart->second) + ")";
            m.chart.reset();
        }

    const char *colors[] = {"#1f77b4", "#d62728", "#2ca02c"};
    const int legend = 300, header = 40;
    int width = opts.size + legend, height = opts.size + header;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    svg << "<text x=\"8\" y=\"16\" font-family=\"monospace\" font-size=\"12\">chart " << escape(format_slice(sl))
        << ", window [" << fmt(w.x0) << ", " << fmt(w.x1) << "] x [" << fmt(w.y0) << ", " << fmt(w.y1)
        << "], axes " << kVarNames[sl.axes[0]] << " / " << kVarNames[sl.axes[1]] << "</text>\n";
    svg << "<defs><clipPath id=\"canvas\"><rect x=\"0\" y=\"0\" width=\"" << opts.size << "\" height=\""
        << opts.size << "\"/></clipPath></defs>\n";
    svg << "<g transform=\"translate(0," << header << ")\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << opts.size << "\" height=\"" << opts.size
        << "\" fill=\"none\" stroke=\"#999\"/>\n";
    svg << "<g clip-path=\"url(#canvas)\">\n";
    if (w.x0 < 0 && w.x1 > 0)
        svg << "<line x1=\"" << fmt(cv.px(0)) << "\" y1=\"0\" x2=\"" << fmt(cv.px(0)) << "\" y2=\"" << opts.size
            << "\" stroke=\"#ddd\"/>\n";
    if (w.y0 < 0 && w.y1 > 0)
        svg << "<line x1=\"0\" y1=\"" << fmt(cv.py(0)) << "\" x2=\"" << opts.size << "\" y2=\"" << fmt(cv.py(0))
            << "\" stroke=\"#ddd\"/>\n";
    std::size_t drawn = 0;
    if (real_field) {
        for (int i = 0; i < 3; ++i) {
            auto coeffs = chart_conic(arr.conic(i), sl);
            for (bool swap : {false, true}) {
                for (const auto &line : trace(coeffs, cv, swap)) {
                    svg << "<polyline class=\"Q" << i + 1 << "\" fill=\"none\" stroke=\"" << colors[i]
                        << "\" stroke-width=\"1.5\" points=\"";
                    for (std::size_t j = 0; j < line.size(); ++j)
                        svg << (j ? " " : "") << fmt(line[j].first) << "," << fmt(line[j].second);
                    svg << "\"/>\n";
                    for (const auto &[x, y] : line)
                        drawn += x >= 0 && x <= opts.size && y >= 0 && y <= opts.size;
                }
            }
        }
    }
    for (const auto &m : markers)
        if (m.chart)
            svg << "<circle class=\"singular\" cx=\"" << fmt(cv.px(m.chart->first)) << "\" cy=\""
                << fmt(cv.py(m.chart->second)) << "\" r=\"5\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n"
                << "<text x=\"" << fmt(cv.px(m.chart->first) + 7) << "\" y=\"" << fmt(cv.py(m.chart->second) - 7)
                << "\" font-family=\"monospace\" font-size=\"12\">" << m.label << "</text>\n";
    svg << "</g>\n";
    if (!real_field)
        svg << "<text class=\"annotation\" x=\"12\" y=\"24\" font-family=\"monospace\" font-size=\"13\">"
               "coefficients are not real (D &lt; 0): no real slice</text>\n";
    else if (drawn == 0)
        svg << "<text class=\"annotation\" x=\"12\" y=\"24\" font-family=\"monospace\" font-size=\"13\">"
               "empty real slice: no real curve points in the window</text>\n";
    svg << "</g>\n";

    int y = header + 16;
    auto legend_line = [&](const std::string &text, const char *color = "black") {
        svg << "<text class=\"legend\" x=\"" << opts.size + 12 << "\" y=\"" << y
            << "\" font-family=\"monospace\" font-size=\"11\" fill=\"" << color << "\">" << escape(text)
            << "</text>\n";
        y += 15;
    };
    for (int i = 0; i < 3; ++i)
        legend_line("Q" + std::to_string(i + 1) + ": " + arr.conic(i).to_string(), colors[i]);
    y += 10;
    legend_line("singular points off the canvas:");
    std::size_t off = 0;
    for (const auto &m : markers)
        if (!m.chart) {
            legend_line("  " + m.label + " " + m.status);
            ++off;
        }
    if (off == 0)
        legend_line("  none");
    svg << "</svg>\n";
    return svg.str();
}

} // namespace triconic
