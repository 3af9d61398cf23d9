#include "triconic/singularity.hpp"

#include "triconic/error.hpp"

#include <algorithm>

namespace triconic {

std::span<const SingularityType> singularity_table() {
    static const std::vector<SingularityType> table{
        {SingKind::A1, "A1", 1, 1, 1, "n2", {1}},
        {SingKind::A3, "A3", 3, 3, 2, "t3", {2}},
        {SingKind::D4, "D4", 4, 4, 3, "n3", {1, 1, 1}},
        {SingKind::A5, "A5", 5, 5, 3, "t5", {3}},
        {SingKind::D6, "D6", 6, 6, 4, "d6", {2, 1, 1}},
        {SingKind::A7, "A7", 7, 7, 4, "t7", {4}},
        {SingKind::D8, "D8", 8, 8, 5, "d8", {3, 1, 1}},
        {SingKind::D10, "D10", 10, 10, 6, "d10", {4, 1, 1}},
        {SingKind::J20, "J20", 10, 10, 6, "j", {2, 2, 2}},
    };
    return table;
}

int tuple_index(SingKind kind) {
    auto table = singularity_table();
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i].kind == kind)
            return static_cast<int>(i);
    throw Error(ErrorKind::Internal, "singularity kind missing from table");
}

const SingularityType &singularity_type(SingKind kind) {
    return singularity_table()[static_cast<std::size_t>(tuple_index(kind))];
}

const SingularityType &classify_signature(std::vector<int> signature) {
    std::sort(signature.rbegin(), signature.rend());
    for (const auto &row : singularity_table())
        if (row.signature == signature)
            return row;
    std::string sig;
    for (int m : signature)
        sig += (sig.empty() ? "" : ",") + std::to_string(m);
    throw Error(ErrorKind::UnsupportedSingularity,
                "unsupported singularity: pair multiplicities (" + sig + ") are outside the taxonomy");
}

const SingularityType &classify_point(const PointLocus &locus) {
    std::vector<int> sig;
    for (int m : locus.pair_mult)
        if (m > 0)
            sig.push_back(m);
    return classify_signature(std::move(sig));
}

int WeakCombinatorics::tau() const {
    int t = 0;
    auto table = singularity_table();
    for (std::size_t i = 0; i < counts.size(); ++i)
        t += counts[i] * table[i].tau;
    return t;
}

int WeakCombinatorics::budget() const {
    int b = 0;
    auto table = singularity_table();
    for (std::size_t i = 0; i < counts.size(); ++i)
        b += counts[i] * table[i].pair_budget;
    return b;
}

std::string WeakCombinatorics::to_string(bool always_nine) const {
    std::size_t n = (always_nine || has_j()) ? 9 : 8;
    std::string out = "(";
    for (std::size_t i = 0; i < n; ++i)
        out += (i ? ", " : "") + std::to_string(counts[i]);
    return out + ")";
}

WeakCombinatorics make_tuple9(std::array<int, 9> counts) { return WeakCombinatorics{counts}; }

WeakCombinatorics make_tuple8(std::array<int, 8> counts) {
    WeakCombinatorics w;
    std::copy(counts.begin(), counts.end(), w.counts.begin());
    return w;
}

std::string_view to_string(PairType t) {
    switch (t) {
    case PairType::N: return "N";
    case PairType::T: return "T";
    case PairType::TT: return "TT";
    case PairType::A5P: return "A5P";
    case PairType::A7P: return "A7P";
    }
    return "?";
}

PairType pair_type_of(const MultiplicityPattern &pattern) {
    MultiplicityPattern p = pattern;
    std::sort(p.rbegin(), p.rend());
    if (p == MultiplicityPattern{1, 1, 1, 1})
        return PairType::N;
    if (p == MultiplicityPattern{2, 1, 1})
        return PairType::T;
    if (p == MultiplicityPattern{2, 2})
        return PairType::TT;
    if (p == MultiplicityPattern{3, 1})
        return PairType::A5P;
    if (p == MultiplicityPattern{4})
        return PairType::A7P;
    throw Error(ErrorKind::Precondition, "not a partition of 4: " + format_pattern(p));
}

std::string format_decomposition(const PairDecomposition &d) {
    std::string out = "{";
    for (std::size_t i = 0; i < d.size(); ++i)
        out += (i ? ", " : "") + std::string(to_string(d[i]));
    return out + "}";
}

PairDecomposition pairs_from_points(const std::vector<SingularPoint> &points) {
    std::array<MultiplicityPattern, 3> pieces;
    for (const auto &p : points)
        for (int k = 0; k < 3; ++k)
            if (int m = p.locus.pair_mult[static_cast<std::size_t>(k)]; m > 0)
                for (int c = 0; c < p.locus.point_count(); ++c)
                    pieces[static_cast<std::size_t>(k)].push_back(m);
    PairDecomposition out;
    for (auto &piece : pieces)
        out.push_back(pair_type_of(piece));
    std::sort(out.begin(), out.end());
    return out;
}

Classification weak_combinatorics(const Arrangement &arr, std::uint64_t seed) {
    Classification out;
    out.analysis = analyze_intersections(arr, seed);
    for (const auto &locus : out.analysis.loci) {
        const SingularityType &type = classify_point(locus);
        out.points.push_back({locus, &type});
        out.tuple[type.kind] += locus.point_count();
        out.tau_local += type.tau * locus.point_count();
    }
    for (const auto &pattern : out.analysis.patterns)
        out.pairs.push_back(pair_type_of(pattern));
    std::sort(out.pairs.begin(), out.pairs.end());
    if (out.tuple.budget() != 12)
        throw Error(ErrorKind::Internal, "intersection budget " + std::to_string(out.tuple.budget()) + " != 12");
    if (pairs_from_points(out.points) != out.pairs)
        throw Error(ErrorKind::Internal, "pair decomposition disagrees with the classified points");
    return out;
}

PairDecomposition pair_types(const Arrangement &arr, std::uint64_t seed) {
    IntersectionAnalysis a = analyze_intersections(arr, seed);
    PairDecomposition out;
    for (const auto &pattern : a.patterns)
        out.push_back(pair_type_of(pattern));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace triconic
