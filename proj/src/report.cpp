#include "triconic/report.hpp"

#include "triconic/io.hpp"

#include <chrono>
#include <sstream>

namespace triconic {

using nlohmann::json;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

json opt(const std::optional<int> &v) { return v ? json(*v) : json(nullptr); }

std::string opt_text(const std::optional<int> &v, const char *none) { return v ? std::to_string(*v) : none; }

std::string field_name(const FieldContext &ctx) {
    return ctx.is_rational() ? "Q" : "Q(sqrt(" + std::to_string(ctx.discriminant()) + "))";
}

std::string mults(const PairMultiplicities &m) {
    return "(" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," + std::to_string(m[2]) + ")";
}

} // namespace

const FamilyInfo *catalog_match(const WeakCombinatorics &t) {
    for (const auto &e : catalog_entries())
        if (e.is_family && e.expected == t)
            return &e;
    return nullptr;
}

AnalysisReport analyze(const Arrangement &arr, std::uint64_t seed) {
    AnalysisReport r{arr, seed, {}, {}, nullptr, 0, 0};
    auto t0 = std::chrono::steady_clock::now();
    r.classification = weak_combinatorics(arr, seed);
    r.classify_ms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    r.freeness = freeness_report(arr, r.classification);
    r.freeness_ms = ms_since(t0);
    r.match = catalog_match(r.classification.tuple);
    return r;
}

json report_to_json(const AnalysisReport &r) {
    const auto &c = r.classification;
    const auto &f = r.freeness;
    json points = json::array();
    for (const auto &p : c.points) {
        json point = nullptr;
        if (p.locus.point) {
            point = json::array();
            for (const auto &x : *p.locus.point)
                point.push_back(field_elem_to_json(x));
        }
        points.push_back({{"type", p.type->name},
                          {"mu", p.type->mu},
                          {"tau", p.type->tau},
                          {"count", p.locus.point_count()},
                          {"location", p.locus.describe()},
                          {"point", point},
                          {"pair_multiplicities", p.locus.pair_mult}});
    }
    json matrix = json::array();
    for (const auto &row : c.analysis.frame) {
        json jr = json::array();
        for (const auto &x : row)
            jr.push_back(field_elem_to_json(x));
        matrix.push_back(jr);
    }
    json pairs = json::array();
    for (PairType p : c.pairs)
        pairs.push_back(to_string(p));
    json out = arrangement_to_json(r.arrangement);
    out["format"] = kReportFormat;
    out["frame"] = {{"seed", c.analysis.seed}, {"attempts", c.analysis.attempts}, {"matrix", matrix}};
    out["singular_points"] = points;
    out["weak_combinatorics"] = c.tuple.counts;
    out["pair_decomposition"] = pairs;
    out["pair_patterns"] = c.analysis.patterns;
    out["tau_local"] = f.tau_local;
    out["tau_global"] = f.tau_global;
    out["hilbert"] = f.hilbert;
    out["mdr"] = opt(f.mdr);
    out["d2"] = opt(f.d2);
    out["dpw_lhs"] = opt(f.dpw_lhs);
    out["dpw_rhs"] = f.tau_global;
    out["free"] = f.free;
    out["note"] = f.note;
    out["catalog_match"] =
        r.match ? json{{"family", r.match->key}, {"label", r.match->label}} : json(nullptr);
    out["timing_ms"] = {{"classification", r.classify_ms}, {"freeness", r.freeness_ms}};
    return out;
}

std::string report_to_text(const AnalysisReport &r) {
    const auto &c = r.classification;
    const auto &f = r.freeness;
    std::ostringstream out;
    out << "field: " << field_name(r.arrangement.context()) << "\n";
    for (int i = 0; i < 3; ++i)
        out << "Q" << i + 1 << ": " << r.arrangement.conic(i).to_string() << "\n";
    out << "frame seed: " << c.analysis.seed << " (attempts " << c.analysis.attempts << ")\n";
    for (const auto &p : c.points) {
        out << "point: " << p.type->name;
        if (p.locus.point_count() > 1)
            out << " x" << p.locus.point_count();
        out << " at " << p.locus.describe() << ", pairs " << mults(p.locus.pair_mult) << "\n";
    }
    out << "weak combinatorics: " << c.tuple.to_string(true) << "\n";
    out << "pair decomposition: " << format_decomposition(c.pairs) << "\n";
    out << "tau_local: " << f.tau_local << "\n";
    out << "tau_global: " << f.tau_global << "\n";
    out << "hilbert: " << f.hilbert[0] << " " << f.hilbert[1] << " " << f.hilbert[2] << " " << f.hilbert[3] << "\n";
    out << "mdr: " << opt_text(f.mdr, ">2") << "\n";
    out << "d2: " << opt_text(f.d2, "-") << "\n";
    out << "dpw_lhs: " << opt_text(f.dpw_lhs, "-") << "\n";
    out << "dpw_rhs: " << f.tau_global << "\n";
    out << "free: " << (f.free ? "true" : "false") << "\n";
    if (!f.note.empty())
        out << "note: " << f.note << "\n";
    out << "catalog match: ";
    if (r.match)
        out << r.match->key << " " << r.match->label << "\n";
    else
        out << "none\n";
    out << "time: classification " << static_cast<long>(r.classify_ms) << " ms, freeness "
        << static_cast<long>(r.freeness_ms) << " ms\n";
    return out.str();
}

} // namespace triconic
