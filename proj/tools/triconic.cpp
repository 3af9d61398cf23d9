// triconic: analyze, enumerate, catalog, verify-all, plot.
//
// Exit codes: 0 ok, 1 other failure, 2 parse error, 3 validation error,
// 4 unsupported singularity.

#include "triconic/acceptance.hpp"
#include "triconic/catalog.hpp"
#include "triconic/combinatorics.hpp"
#include "triconic/error.hpp"
#include "triconic/io.hpp"
#include "triconic/plot.hpp"
#include "triconic/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace triconic;
using nlohmann::json;

namespace {

int exit_code(ErrorKind k) {
    switch (k) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::Validation: return 3;
    case ErrorKind::UnsupportedSingularity: return 4;
    default: return 1;
    }
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::Precondition, "cannot write " + path);
    out << text;
}

PlotOptions plot_options(const std::string &slice, const std::string &window) {
    PlotOptions o;
    o.slice = parse_slice(slice);
    if (!window.empty())
        o.window = parse_window(window);
    return o;
}

struct AnalyzeArgs {
    std::string path, plot, slice = "Z = 1", window;
    bool json = false;
    std::uint64_t seed = 0;
};

int cmd_analyze(const AnalyzeArgs &a) {
    Arrangement arr = read_arrangement_file(a.path);
    PlotOptions po = plot_options(a.slice, a.window);
    AnalysisReport r = analyze(arr, a.seed);
    if (a.json)
        std::cout << report_to_json(r).dump() << "\n";
    else
        std::cout << report_to_text(r);
    if (!a.plot.empty())
        write_file(a.plot, render_svg(arr, r.classification, po));
    return 0;
}

struct EnumerateArgs {
    int d1 = 2;
    bool with_j = false, feasibility = false;
};

std::string verdict_text(const FeasibilityVerdict &v) {
    std::string out = v.status == Feasibility::CombinatoriallyFeasible ? "feasible" : "infeasible";
    for (const auto &d : v.decompositions)
        out += " " + format_decomposition(d);
    if (v.realizability) {
        if (v.realizability->realizable)
            out += " | realizable: " + std::string(family_info(*v.realizability->family).key);
        else
            out += " | not realizable: " + std::string(to_string(*v.realizability->refuted));
    }
    return out;
}

int cmd_enumerate(const EnumerateArgs &a) {
    CountingSystem sys{a.d1, a.with_j};
    for (const auto &t : enumerate_tuples(sys)) {
        std::cout << format_tuple_line(t);
        if (a.feasibility)
            std::cout << "  " << verdict_text(pair_assignment_search(t));
        std::cout << "\n";
    }
    if (a.with_j && a.d1 == 2)
        std::cerr << discrepancy_notice(check_printed_j_list());
    return 0;
}

int cmd_catalog_list(bool as_json) {
    json m = catalog_manifest();
    if (as_json) {
        std::cout << m.dump(2) << "\n";
        return 0;
    }
    for (const auto &e : catalog_entries()) {
        std::cout << e.key << (e.label.empty() ? "" : " " + std::string(e.label)) << ": "
                  << e.expected.to_string(true) << " " << format_decomposition(e.expected_pairs)
                  << (e.expected_free ? " free" : " not free");
        if (!e.params.empty()) {
            std::cout << "; params";
            for (const auto &p : e.params)
                std::cout << " " << p;
        }
        if (!e.constraint.empty())
            std::cout << "; " << e.constraint;
        std::cout << "\n";
    }
    return 0;
}

struct InstantiateArgs {
    std::string family, params, out;
    std::optional<long> field;
    std::size_t root = 0;
    std::uint64_t seed = 0;
};

int cmd_catalog_instantiate(const InstantiateArgs &a) {
    auto id = parse_family(a.family);
    if (!id)
        throw Error(ErrorKind::Parse, "unknown family '" + a.family + "'");
    const FamilyInfo &info = family_info(*id);
    FieldContext ctx(a.field ? *a.field : (info.solved_param ? -3 : 1));
    ParamSet params = a.params.empty() ? ParamSet{} : parse_params(a.params, ctx);
    json roots = json::array();
    if (info.solved_param && !params.count(*info.solved_param)) {
        auto sols = solve_constraint(*id, params, ctx);
        for (const auto &s : sols)
            roots.push_back(field_elem_to_json(s.at(*info.solved_param)));
        if (a.root >= sols.size())
            throw Error(ErrorKind::Precondition, "--root " + std::to_string(a.root) + " but only " +
                                                     std::to_string(sols.size()) + " solutions");
        params = sols[a.root];
        std::cerr << "solved " << *info.solved_param << ": " << roots.dump() << ", using root " << a.root << "\n";
    }
    Instantiation inst = instantiate(*id, params, ctx, a.seed);
    for (const auto &line : inst.log)
        std::cerr << line << "\n";
    json doc = arrangement_to_json(inst.arrangement);
    doc["family"] = info.key;
    json p = json::object();
    for (const auto &[k, v] : inst.params)
        p[k] = field_elem_to_json(v);
    doc["params"] = p;
    doc["route"] = to_string(inst.route);
    if (!inst.log.empty())
        doc["log"] = inst.log;
    if (!roots.empty())
        doc["roots"] = roots;
    std::string text = doc.dump(2) + "\n";
    if (a.out.empty())
        std::cout << text;
    else
        write_file(a.out, text);
    return 0;
}

int cmd_catalog_fixtures(const std::string &dir) {
    for (const auto &k : known_arrangements()) {
        json doc = arrangement_to_json(k.arrangement);
        doc["fixture"] = k.name;
        if (dir.empty()) {
            std::cout << doc.dump() << "\n";
        } else {
            std::filesystem::create_directories(dir);
            auto path = std::filesystem::path(dir) / (k.name + ".conics.json");
            write_file(path.string(), doc.dump(2) + "\n");
            std::cout << path.string() << "\n";
        }
    }
    return 0;
}

struct VerifyArgs {
    std::string filter, golden;
    bool json = false;
};

int cmd_verify_all(const VerifyArgs &a) {
    AcceptanceOptions opts;
    opts.golden = a.golden;
    std::stringstream ss(a.filter);
    for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty())
            opts.filter.push_back(tok);
    auto results = run_acceptance(opts);
    bool ok = true;
    for (const auto &r : results)
        ok = ok && r.passed;
    if (a.json) {
        std::cout << results_to_json(results).dump() << "\n";
    } else {
        for (const auto &r : results)
            std::cout << format_result(r) << "\n";
        std::cout << (ok ? "all passed" : "FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

struct PlotArgs {
    std::string path, out, slice = "Z = 1", window;
    std::uint64_t seed = 0;
};

int cmd_plot(const PlotArgs &a) {
    Arrangement arr = read_arrangement_file(a.path);
    PlotOptions po = plot_options(a.slice, a.window);
    Classification c = weak_combinatorics(arr, a.seed);
    write_file(a.out, render_svg(arr, c, po));
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact analysis of arrangements of three smooth conics"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    auto *analyze_cmd = app.add_subcommand("analyze", "classify singularities and decide freeness");
    analyze_cmd->add_option("path", analyze_args.path, "arrangement file (.conics.json)")->required();
    analyze_cmd->add_flag("--json", analyze_args.json, "one-line JSON report");
    analyze_cmd->add_option("--plot", analyze_args.plot, "also write an SVG of the real slice");
    analyze_cmd->add_option("--slice", analyze_args.slice, "affine chart for --plot, e.g. 'Z = X + Y + 1'");
    analyze_cmd->add_option("--window", analyze_args.window, "plot window x0,x1,y0,y1");
    analyze_cmd->add_option("--seed", analyze_args.seed, "first coordinate-change seed");

    EnumerateArgs enum_args;
    auto *enum_cmd = app.add_subcommand("enumerate", "solve the counting system");
    enum_cmd->add_option("--d1", enum_args.d1, "minimal degree of a Jacobian syzygy")->check(CLI::IsMember({1, 2}));
    enum_cmd->add_flag("--with-j", enum_args.with_j, "allow J20 points");
    enum_cmd->add_flag("--feasibility", enum_args.feasibility, "append pair-assignment verdicts");

    auto *cat_cmd = app.add_subcommand("catalog", "families and fixtures");
    cat_cmd->require_subcommand(1);
    bool list_json = false;
    auto *list_cmd = cat_cmd->add_subcommand("list", "families, parameters and expected tuples");
    list_cmd->add_flag("--json", list_json, "print the manifest");
    InstantiateArgs inst_args;
    auto *inst_cmd = cat_cmd->add_subcommand("instantiate", "emit a verified family member");
    inst_cmd->add_option("family", inst_args.family, "F1 ... F6")->required();
    inst_cmd->add_option("--params", inst_args.params, "name=value list; value r or r:s for r + s*sqrt(D)");
    inst_cmd->add_option("--field", inst_args.field, "discriminant D (default -3 for F3 and F5, else 1)");
    inst_cmd->add_option("--root", inst_args.root, "which solution of the constraint to use");
    inst_cmd->add_option("-o,--out", inst_args.out, "output file (default stdout)");
    inst_cmd->add_option("--seed", inst_args.seed, "first coordinate-change seed");
    std::string fixtures_dir;
    auto *fix_cmd = cat_cmd->add_subcommand("fixtures", "emit the named arrangements");
    fix_cmd->add_option("--out-dir", fixtures_dir, "write <name>.conics.json files here");

    VerifyArgs verify_args;
    auto *verify_cmd = app.add_subcommand("verify-all", "run the acceptance criteria");
    verify_cmd->add_option("--filter", verify_args.filter, "comma-separated ids, keys or groups");
    verify_cmd->add_option("--golden", verify_args.golden, "golden tuple file");
    verify_cmd->add_flag("--json", verify_args.json, "one-line JSON summary");

    PlotArgs plot_args;
    auto *plot_cmd = app.add_subcommand("plot", "SVG of the real points in an affine chart");
    plot_cmd->add_option("path", plot_args.path, "arrangement file")->required();
    plot_cmd->add_option("-o,--out", plot_args.out, "SVG file")->required();
    plot_cmd->add_option("--slice", plot_args.slice, "chart, e.g. 'Z = X + Y + 1'");
    plot_cmd->add_option("--window", plot_args.window, "x0,x1,y0,y1");
    plot_cmd->add_option("--seed", plot_args.seed, "first coordinate-change seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze_cmd)
            return cmd_analyze(analyze_args);
        if (*enum_cmd)
            return cmd_enumerate(enum_args);
        if (*list_cmd)
            return cmd_catalog_list(list_json);
        if (*inst_cmd)
            return cmd_catalog_instantiate(inst_args);
        if (*fix_cmd)
            return cmd_catalog_fixtures(fixtures_dir);
        if (*verify_cmd)
            return cmd_verify_all(verify_args);
        if (*plot_cmd)
            return cmd_plot(plot_args);
    } catch (const Error &e) {
        std::cerr << "triconic: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception &e) {
        std::cerr << "triconic: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
