#include "triconic/intersect.hpp"

#include "triconic/error.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace triconic {

bool BinaryQuartic::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const FieldElem &c) { return c.is_zero(); });
}

UniPoly BinaryQuartic::dehomogenize() const {
    return UniPoly(std::vector<FieldElem>(coeffs.begin(), coeffs.end()));
}

BinaryQuartic BinaryQuartic::from_dehomogenized(const UniPoly &p) {
    if (p.degree() > 4)
        throw Error(ErrorKind::Precondition, "binary quartic from a polynomial of degree > 4");
    BinaryQuartic q;
    for (int i = 0; i <= p.degree(); ++i)
        q.coeffs[static_cast<std::size_t>(i)] = p.coeff(i);
    return q;
}

std::string format_pattern(const MultiplicityPattern &p) {
    std::string out;
    for (int m : p)
        out += (out.empty() ? "" : "+") + std::to_string(m);
    return out;
}

namespace {

[[noreturn]] void degenerate(const std::string &why) {
    throw Error(ErrorKind::DegenerateCoordinates, "degenerate coordinates: " + why);
}

// Q(x, 1, Z) as a polynomial in Z with coefficients in K[x].
QPoly fiber(const Conic &q) {
    return {UniPoly({q[kYY], q[kXY], q[kXX]}), UniPoly({q[kYZ], q[kXZ]}), UniPoly(q[kZZ])};
}

void require_center_off(const Arrangement &arr, int i) {
    if (arr.conic(i)[kZZ].is_zero())
        degenerate("elimination center [0:0:1] lies on Q" + std::to_string(i + 1));
}

UniPoly resultant_in_x(const Conic &p, const Conic &q) {
    // p = a Z^2 + b Z + c, q = d Z^2 + e Z + h
    QPoly fp = fiber(p), fq = fiber(q);
    const UniPoly &c = fp[0], &b = fp[1], &a = fp[2];
    const UniPoly &h = fq[0], &e = fq[1], &d = fq[2];
    UniPoly u = a * h - c * d;
    return u * u - (a * e - b * d) * (b * h - c * e);
}

// Confirms that above every root of `modulus` the two fibers share exactly
// one Z value. Returns the common Z as residues, one per final modulus.
std::vector<std::pair<UniPoly, UniPoly>> single_common_point(const UniPoly &modulus,
                                                             const std::vector<QPoly> &fibers) {
    std::vector<std::pair<UniPoly, UniPoly>> done;
    std::deque<UniPoly> work{modulus};
    while (!work.empty()) {
        UniPoly m = work.front();
        work.pop_front();
        QuotientRing ring(m);
        QPoly acc = fibers.front();
        bool split = false;
        for (std::size_t k = 1; k < fibers.size() && !split; ++k) {
            auto g = quotient_gcd(ring, acc, fibers[k]);
            if (auto *s = std::get_if<Splitting>(&g)) {
                work.push_back(s->first);
                work.push_back(s->second);
                split = true;
                break;
            }
            acc = std::get<QPoly>(std::move(g));
            if (acc.size() != 2)
                degenerate(acc.size() > 2 ? "two intersection points share a projection"
                                          : "loci share a projection but not a point");
        }
        if (!split)
            done.emplace_back(m, ring.reduce(-acc[0]));
    }
    return done;
}

struct Candidate {
    UniPoly factor;
    PairMultiplicities mult;
};

} // namespace

namespace {

BinaryQuartic checked_resultant(const Conic &a, const Conic &b) {
    UniPoly r = resultant_in_x(a, b);
    if (r.is_zero())
        throw Error(ErrorKind::Internal, "conics share a component");
    if (r.degree() != 4)
        degenerate("an intersection point lies on the line Y = 0");
    QPoly fa = fiber(a), fb = fiber(b);
    for (const auto &sf : squarefree_decomposition(r).factors)
        single_common_point(sf.factor, {fa, fb});
    return BinaryQuartic::from_dehomogenized(r);
}

} // namespace

BinaryQuartic pair_resultant(const Arrangement &arr, int pair) {
    if (pair < 0 || pair > 2)
        throw Error(ErrorKind::Precondition, "pair index must be 0, 1 or 2");
    auto [i, j] = kPairs[static_cast<std::size_t>(pair)];
    require_center_off(arr, i);
    require_center_off(arr, j);
    return checked_resultant(arr.conic(i), arr.conic(j));
}

MultiplicityPattern pair_pattern(const Conic &a, const Conic &b, std::uint64_t seed) {
    if (!a.is_smooth() || !b.is_smooth())
        throw Error(ErrorKind::Validation, "pair pattern needs smooth conics");
    if (proportional(a, b))
        throw Error(ErrorKind::Validation, "duplicate conic: the pair is proportional");
    std::string last;
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        Matrix3 m = random_change_matrix(seed + static_cast<std::uint64_t>(attempt));
        Conic ta = a.transformed(m), tb = b.transformed(m);
        try {
            if (ta[kZZ].is_zero() || tb[kZZ].is_zero())
                degenerate("elimination center lies on a conic");
            return pattern_of(checked_resultant(ta, tb));
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::DegenerateCoordinates)
                throw;
            last = e.what();
        }
    }
    throw Error(ErrorKind::GenericityUnreachable,
                "genericity unreachable after " + std::to_string(kRetryBudget) + " frames (" + last + ")");
}

MultiplicityPattern pattern_of(const BinaryQuartic &q) {
    if (q.is_zero())
        throw Error(ErrorKind::Precondition, "pattern of the zero quartic");
    UniPoly p = q.dehomogenize();
    MultiplicityPattern out;
    if (p.degree() < 4)
        out.push_back(4 - p.degree());
    for (const auto &[factor, mult] : squarefree_decomposition(p).factors)
        for (int k = 0; k < factor.degree(); ++k)
            out.push_back(mult);
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::string PointLocus::describe() const {
    if (point)
        return format_point(*point);
    return "root of " + factor.to_string("x") + " with [X:Y] = [x:1], Z/Y = " +
           z_residue.to_string("x");
}

std::vector<PointLocus> shared_point_analysis(const Arrangement &arr) {
    std::array<SquarefreeDecomposition, 3> sqf;
    std::vector<UniPoly> all_factors;
    for (int k = 0; k < 3; ++k) {
        sqf[static_cast<std::size_t>(k)] = squarefree_decomposition(pair_resultant(arr, k).dehomogenize());
        for (const auto &sf : sqf[static_cast<std::size_t>(k)].factors)
            all_factors.push_back(sf.factor);
    }

    std::deque<Candidate> work;
    for (const UniPoly &h : gcd_free_basis(all_factors)) {
        Candidate c{h, {0, 0, 0}};
        for (int k = 0; k < 3; ++k)
            for (const auto &sf : sqf[static_cast<std::size_t>(k)].factors)
                if (divides(h, sf.factor))
                    c.mult[static_cast<std::size_t>(k)] = sf.multiplicity;
        work.push_back(std::move(c));
    }

    std::array<QPoly, 3> fibers{fiber(arr.conic(0)), fiber(arr.conic(1)), fiber(arr.conic(2))};
    std::vector<PointLocus> loci;
    for (const Candidate &c : work) {
        int involved = static_cast<int>(std::count_if(c.mult.begin(), c.mult.end(), [](int m) { return m > 0; }));
        std::vector<std::pair<UniPoly, UniPoly>> resolved;
        if (involved == 1) {
            int pair = static_cast<int>(std::find_if(c.mult.begin(), c.mult.end(), [](int m) { return m > 0; }) -
                                        c.mult.begin());
            auto [i, j] = kPairs[static_cast<std::size_t>(pair)];
            resolved = single_common_point(c.factor, {fibers[static_cast<std::size_t>(i)],
                                                      fibers[static_cast<std::size_t>(j)]});
        } else if (involved == 3) {
            // Each pair separately first, so two points over one x are caught.
            for (const auto &[i, j] : kPairs)
                single_common_point(c.factor, {fibers[static_cast<std::size_t>(i)],
                                               fibers[static_cast<std::size_t>(j)]});
            resolved = single_common_point(c.factor, {fibers[0], fibers[1], fibers[2]});
        } else {
            degenerate("points of different pairs share a projection");
        }
        for (auto &[factor, z] : resolved)
            loci.push_back({factor, z, c.mult, std::nullopt});
    }

    // Quadratic loci whose roots lie in K become two explicit points.
    std::vector<PointLocus> out;
    for (auto &locus : loci) {
        if (locus.factor.degree() == 2) {
            const UniPoly &h = locus.factor;
            FieldElem disc = h.coeff(1) * h.coeff(1) - FieldElem(4) * h.coeff(0);
            if (auto root = sqrt_in_field(disc, arr.context())) {
                for (const FieldElem &sign : {FieldElem(1), FieldElem(-1)}) {
                    FieldElem x = (-h.coeff(1) + sign * *root) / FieldElem(2);
                    out.push_back({UniPoly::linear_root(x), UniPoly(locus.z_residue.eval(x)), locus.pair_mult,
                                   std::nullopt});
                }
                continue;
            }
        }
        out.push_back(std::move(locus));
    }
    for (auto &locus : out) {
        if (locus.factor.degree() != 1)
            continue;
        FieldElem x = -locus.factor.coeff(0);
        locus.point = normalize_point({x, FieldElem(1), locus.z_residue.eval(x)});
    }
    std::sort(out.begin(), out.end(), [](const PointLocus &a, const PointLocus &b) {
        return std::make_tuple(a.pair_mult, a.factor.to_string()) > std::make_tuple(b.pair_mult, b.factor.to_string());
    });
    return out;
}

IntersectionAnalysis analyze_intersections(const Arrangement &arr, std::uint64_t seed) {
    std::string last;
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
        CoordinateChange cc = random_coordinate_change(arr, s);
        try {
            IntersectionAnalysis out;
            out.loci = shared_point_analysis(cc.arrangement);
            for (int k = 0; k < 3; ++k)
                out.patterns[static_cast<std::size_t>(k)] = pattern_of(pair_resultant(cc.arrangement, k));
            for (auto &locus : out.loci)
                if (locus.point)
                    locus.point = normalize_point(mat_vec(cc.matrix, *locus.point));
            out.seed = s;
            out.frame = cc.matrix;
            out.attempts = attempt + 1;
            return out;
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::DegenerateCoordinates)
                throw;
            last = e.what();
        }
    }
    throw Error(ErrorKind::GenericityUnreachable,
                "genericity unreachable after " + std::to_string(kRetryBudget) + " frames (" + last + ")");
}

bool locus_on_line(const PointLocus &locus, const LinearForm &line, const Matrix3 &frame) {
    if (locus.point)
        return eval_line(line, *locus.point).is_zero();
    // l . (M v) = (M^T l) . v with v = (x, 1, z(x))
    ProjPoint l = mat_vec(transpose(frame), line);
    UniPoly on = UniPoly::monomial(l[0], 1) + UniPoly(l[1]) + locus.z_residue * l[2];
    return (on % locus.factor).is_zero();
}

} // namespace triconic
