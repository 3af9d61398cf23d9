#include "triconic/acceptance.hpp"

#include "triconic/catalog.hpp"
#include "triconic/combinatorics.hpp"
#include "triconic/error.hpp"
#include "triconic/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace triconic {

namespace {

const std::vector<CriterionInfo> kCriteria{
    {1, "enumeration", "enumeration", "d1 = 2 yields exactly the 25 golden tuples"},
    {2, "j-extension", "enumeration", "J20 extension: empty at d1 = 1, 25 + 6 at d1 = 2, misprints flagged"},
    {3, "feasibility", "enumeration", "16 infeasible / 9 feasible, agreeing with unreduced brute force"},
    {4, "split-lemmas", "enumeration", "split-lemma properties on all 31 tuples"},
    {5, "families", "catalog", "six families x 3 samples: tuple, tau 19, mdr 2, DP-W, free"},
    {6, "fixtures", "catalog", "Persson and Pokora free; example tuple, pairs, tau 18, not free"},
    {7, "dual-tau", "freeness", "tau_local = tau_global on fixtures, samples and 25 pencils"},
    {8, "invariance", "freeness", "verdicts stable under 10 coordinate changes and conic scaling"},
    {9, "colinearity", "catalog", "family (iv): A7 and A3 points on X - pZ = 0"},
    {10, "no-free-j20", "catalog", "no free arrangement in the corpus carries J20"},
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Failure {
    std::string what;
};

void require(bool ok, const std::string &what) {
    if (!ok)
        throw Failure{what};
}

std::string show(const WeakCombinatorics &t) { return t.to_string(true); }

struct Analysed {
    std::string name;
    Arrangement arrangement;
    Classification classification;
    FreenessReport freeness;
};

Analysed analysed(std::string name, const Arrangement &arr) {
    Classification c = weak_combinatorics(arr);
    FreenessReport f = freeness_report(arr, c);
    return {std::move(name), arr, std::move(c), std::move(f)};
}

FieldElem Q(long p, long q = 1) { return FieldElem(Rational(p, q)); }

Arrangement rational_triple(std::array<std::array<long, 6>, 3> rows) {
    std::array<Conic::Coefficients, 3> c;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 6; ++k)
            c[i][k] = FieldElem(rows[i][k]);
    return make_arrangement(c, FieldContext(1));
}

// Results reused across criteria.
class Corpus {
public:
    const std::vector<Analysed> &fixtures() {
        if (fixtures_.empty())
            for (const auto &k : known_arrangements())
                fixtures_.push_back(analysed(k.name, k.arrangement));
        return fixtures_;
    }

    const std::vector<Instantiation> &family_members() {
        if (members_.empty())
            for (const auto &e : catalog_entries())
                if (e.is_family)
                    for (const auto &s : family_samples(e.id, 3))
                        members_.push_back(instantiate(e.id, s.params, s.context));
        return members_;
    }

    const std::vector<Analysed> &pencils() {
        if (pencils_.empty())
            for (std::uint64_t seed = 0; seed < 25; ++seed) {
                PencilSample s = tangent_pencil_sample(seed);
                pencils_.push_back(analysed(s.description, s.arrangement));
            }
        return pencils_;
    }

    const std::vector<Analysed> &j20_examples() {
        if (j20_.empty()) {
            j20_.push_back(analysed("J20 at [0:0:1]",
                                    rational_triple({{{1, 1, 0, 0, 1, 0}, {1, 2, 0, 0, 1, 0}, {2, 3, 0, 1, 1, 0}}})));
            j20_.push_back(analysed("pencil X^2 + kY^2 + XZ, k = 1, 2, 3",
                                    rational_triple({{{1, 1, 0, 0, 1, 0}, {1, 2, 0, 0, 1, 0}, {1, 3, 0, 0, 1, 0}}})));
        }
        return j20_;
    }

private:
    std::vector<Analysed> fixtures_;
    std::vector<Instantiation> members_;
    std::vector<Analysed> pencils_;
    std::vector<Analysed> j20_;
};

// Every placement of every point's pieces on the labelled pairs.
std::set<PairDecomposition> unreduced_decompositions(const WeakCombinatorics &t) {
    std::vector<std::vector<std::array<int, 3>>> choices;
    auto table = singularity_table();
    for (std::size_t i = 0; i < table.size(); ++i)
        for (int c = 0; c < t.counts[i]; ++c)
            choices.push_back(piece_distributions(table[i].kind));
    std::set<PairDecomposition> out;
    std::array<MultiplicityPattern, 3> pairs;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == choices.size()) {
            PairDecomposition d;
            for (const auto &p : pairs) {
                int sum = 0;
                for (int x : p)
                    sum += x;
                if (sum != 4)
                    return;
                d.push_back(pair_type_of(p));
            }
            std::sort(d.begin(), d.end());
            out.insert(d);
            return;
        }
        for (const auto &a : choices[i]) {
            for (std::size_t k = 0; k < 3; ++k)
                if (a[k])
                    pairs[k].push_back(a[k]);
            rec(i + 1);
            for (std::size_t k = 0; k < 3; ++k)
                if (a[k])
                    pairs[k].pop_back();
        }
    };
    rec(0);
    return out;
}

int tau_of(const WeakCombinatorics &t) {
    const int mu[] = {1, 3, 4, 5, 6, 7, 8, 10, 10};
    int s = 0;
    for (std::size_t i = 0; i < 9; ++i)
        s += mu[i] * t.counts[i];
    return s;
}

int budget_of(const WeakCombinatorics &t) {
    const int m[] = {1, 2, 3, 3, 4, 4, 5, 6, 6};
    int s = 0;
    for (std::size_t i = 0; i < 9; ++i)
        s += m[i] * t.counts[i];
    return s;
}

std::string c1_enumeration(const AcceptanceOptions &opts, Corpus &) {
    auto t0 = Clock::now();
    auto got = enumerate_tuples({2, false});
    double secs = seconds_since(t0);
    std::ifstream in(opts.golden);
    require(in.good(), "cannot read golden file " + opts.golden.string());
    std::vector<WeakCombinatorics> want;
    try {
        want = read_tuples(in);
    } catch (const Error &e) {
        throw Failure{"golden file " + opts.golden.string() + ": " + e.what()};
    }
    std::sort(want.begin(), want.end());
    std::string diff;
    for (const auto &t : want)
        if (!std::binary_search(got.begin(), got.end(), t))
            diff += " missing " + show(t) + ";";
    for (const auto &t : got)
        if (!std::binary_search(want.begin(), want.end(), t))
            diff += " extra " + show(t) + ";";
    require(want.size() == 25, "golden file has " + std::to_string(want.size()) + " tuples, expected 25");
    require(diff.empty(), "diff against golden file:" + diff);
    require(secs < 1.0, "enumeration took " + std::to_string(secs) + " s");
    return "25 tuples, zero diffs";
}

std::string c2_j_extension(const AcceptanceOptions &, Corpus &) {
    require(enumerate_tuples({1, true}).empty(), "d1 = 1 with J20 is not empty");
    auto all = enumerate_tuples({2, true});
    auto ade = enumerate_tuples({2, false});
    std::vector<WeakCombinatorics> with_j;
    for (const auto &t : all) {
        if (t.has_j())
            with_j.push_back(t);
        else
            require(std::binary_search(ade.begin(), ade.end(), t), "unexpected j = 0 tuple " + show(t));
    }
    require(all.size() == 31 && with_j.size() == 6,
            "expected 25 + 6 tuples, got " + std::to_string(all.size()) + " with " + std::to_string(with_j.size()) +
                " J20 tuples");
    for (const auto &t : with_j)
        require(tau_of(t) == 19 && budget_of(t) == 12, "J20 tuple fails re-substitution: " + show(t));
    JListCheck check = check_printed_j_list();
    const std::vector<std::pair<WeakCombinatorics, WeakCombinatorics>> expected{
        {make_tuple9({0, 1, 0, 0, 0, 1, 0, 0, 1}), make_tuple9({0, 1, 0, 0, 1, 0, 0, 0, 1})},
        {make_tuple9({2, 0, 0, 0, 1, 0, 0, 0, 1}), make_tuple9({2, 0, 0, 0, 0, 1, 0, 0, 1})},
    };
    require(check.discrepancies.size() == expected.size(),
            "expected 2 discrepancy notices, got " + std::to_string(check.discrepancies.size()));
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const auto &d = check.discrepancies[i];
        require(d.printed == expected[i].first && d.corrected == expected[i].second,
                "unexpected discrepancy for " + show(d.printed));
        require(tau_of(d.printed) != 19 && tau_of(*d.corrected) == 19 && budget_of(*d.corrected) == 12,
                "re-substitution does not separate " + show(d.printed));
    }
    return "0 tuples at d1 = 1; 31 at d1 = 2; 2 misprints flagged";
}

std::string c3_feasibility(const AcceptanceOptions &, Corpus &) {
    auto t0 = Clock::now();
    std::map<Refutation, int> by_kind;
    std::vector<WeakCombinatorics> feasible;
    for (const auto &t : enumerate_tuples({2, false})) {
        auto v = pair_assignment_search(t);
        std::set<PairDecomposition> mine(v.decompositions.begin(), v.decompositions.end());
        require(mine == unreduced_decompositions(t), "search and brute force disagree on " + show(t));
        require(v.realizability.has_value(), "no recorded verdict for " + show(t));
        if (v.status == Feasibility::CombinatoriallyFeasible) {
            feasible.push_back(t);
        } else {
            require(v.realizability->refuted && *v.realizability->refuted != Refutation::Algebraic,
                    show(t) + " is infeasible but not among the combinatorial refutations");
            ++by_kind[*v.realizability->refuted];
        }
    }
    double secs = seconds_since(t0);
    int infeasible = 0;
    for (const auto &[k, n] : by_kind)
        infeasible += n;
    require(infeasible == 16 && feasible.size() == 9,
            std::to_string(infeasible) + " infeasible / " + std::to_string(feasible.size()) + " feasible");
    require(by_kind[Refutation::PairCount] == 2 && by_kind[Refutation::NodesWithA7] == 10 &&
                by_kind[Refutation::NodeFreePairs] == 2 && by_kind[Refutation::D8NeedsNodes] == 1 &&
                by_kind[Refutation::NodeAccounting] == 1,
            "infeasible tuples do not split 2 + 10 + 2 + 1 + 1 over the refutations");
    int families = 0;
    std::vector<WeakCombinatorics> others;
    for (const auto &t : feasible) {
        auto r = known_realizability(t);
        if (r->realizable)
            ++families;
        else
            others.push_back(t);
    }
    const std::vector<WeakCombinatorics> expect_others{make_tuple8({0, 1, 0, 2, 1, 0, 0, 0}),
                                                       make_tuple8({0, 4, 0, 0, 0, 1, 0, 0}),
                                                       make_tuple8({1, 2, 0, 1, 0, 1, 0, 0})};
    require(families == 6 && others == expect_others, "feasible set is not the six families plus the three refuted");
    require(secs < 5.0, "feasibility search took " + std::to_string(secs) + " s");
    return "16 infeasible (2 + 10 + 2 + 1 + 1), 9 feasible (6 families + 3), brute force agrees";
}

std::string c4_split_lemmas(const AcceptanceOptions &, Corpus &) {
    int witnesses = 0;
    for (const auto &t : enumerate_tuples({2, true})) {
        auto v = pair_assignment_search(t);
        auto failures = split_property_failures(t, v);
        require(failures.empty(), show(t) + ": " + (failures.empty() ? "" : failures.front()));
        witnesses += static_cast<int>(v.decompositions.size());
    }
    return "31 tuples, " + std::to_string(witnesses) + " feasible decompositions checked";
}

std::string c5_families(const AcceptanceOptions &, Corpus &corpus) {
    auto t0 = Clock::now();
    const auto &members = corpus.family_members();
    std::map<FamilyId, int> count;
    bool constructive = false;
    for (const auto &m : members) {
        const FamilyInfo &info = family_info(m.id);
        std::string who = std::string(info.key) + " " + format_params(m.params);
        require(m.classification.tuple == info.expected, who + ": tuple " + show(m.classification.tuple));
        require(m.report.tau_local == 19 && m.report.tau_global == 19, who + ": tau not 19");
        require(m.report.mdr == 2, who + ": mdr not 2");
        require(m.report.dpw_lhs == m.report.tau_global, who + ": DP-W fails");
        require(m.report.free, who + ": not free");
        if (m.id == FamilyId::F3 || m.id == FamilyId::F5)
            require(m.arrangement.context().discriminant() == -3, who + ": not over Q(sqrt(-3))");
        if (m.route == Route::Constructive) {
            constructive = true;
            require(!m.log.empty(), who + ": constructive route without a logged discrepancy");
        }
        ++count[m.id];
    }
    require(count.size() == 6, "missing families");
    for (const auto &[id, n] : count)
        require(n >= 3, std::string(family_info(id).key) + " has fewer than 3 samples");
    require(constructive, "no printed-formula failure was exercised");
    double secs = seconds_since(t0);
    require(secs < 30.0, "family verification took " + std::to_string(secs) + " s");
    return std::to_string(members.size()) + " members verified; F2 via the constructive route";
}

std::string c6_fixtures(const AcceptanceOptions &, Corpus &corpus) {
    for (const auto &f : corpus.fixtures()) {
        if (f.name == "persson" || f.name == "pokora") {
            require(f.freeness.free, f.name + " not free");
        } else {
            require(f.classification.tuple == make_tuple9({2, 3, 0, 0, 0, 1, 0, 0, 0}),
                    "example tuple " + show(f.classification.tuple));
            require(f.classification.pairs == PairDecomposition{PairType::T, PairType::TT, PairType::A7P},
                    "example pairs " + format_decomposition(f.classification.pairs));
            require(f.freeness.tau_global == 18 && f.freeness.tau_local == 18, "example tau not 18");
            require(dpw_lhs(6, 1) != 18 && dpw_lhs(6, 2) != 18, "18 satisfies DP-W");
            require(!f.freeness.free, "example reported free");
        }
    }
    return "Persson free, Pokora free, example (2,3,0,0,0,1,0,0,0) {T, TT, A7P} tau 18 not free";
}

std::string c7_dual_tau(const AcceptanceOptions &, Corpus &corpus) {
    int n = 0;
    auto check = [&](const std::string &name, int local, const FreenessReport &f) {
        require(local == f.tau_global, name + ": tau_local " + std::to_string(local) + " != tau_global " +
                                           std::to_string(f.tau_global));
        require(std::all_of(f.hilbert.begin(), f.hilbert.end(), [&](int h) { return h == f.hilbert[0]; }),
                name + ": Hilbert values differ");
        ++n;
    };
    for (const auto &f : corpus.fixtures())
        check(f.name, f.classification.tau_local, f.freeness);
    for (const auto &m : corpus.family_members())
        check(std::string(family_info(m.id).key) + " " + format_params(m.params), m.classification.tau_local,
              m.report);
    for (const auto &p : corpus.pencils())
        check(p.name, p.classification.tau_local, p.freeness);
    return std::to_string(n) + " arrangements, 25 of them tangent-pencil constructions";
}

std::string c8_invariance(const AcceptanceOptions &, Corpus &corpus) {
    int n = 0;
    std::mt19937_64 gen(2024);
    for (const auto &f : corpus.fixtures()) {
        auto same = [&](const Arrangement &arr, const std::string &how) {
            Analysed a = analysed(f.name, arr);
            require(a.classification.tuple == f.classification.tuple, f.name + " " + how + ": tuple changed");
            require(a.classification.pairs == f.classification.pairs, f.name + " " + how + ": pairs changed");
            require(a.freeness.free == f.freeness.free, f.name + " " + how + ": freeness changed");
            ++n;
        };
        for (std::uint64_t seed = 1; seed <= 10; ++seed)
            same(random_coordinate_change(f.arrangement, seed).arrangement, "seed " + std::to_string(seed));
        std::array<Conic, 3> scaled = f.arrangement.conics();
        for (auto &q : scaled) {
            long p = 0;
            while (p == 0)
                p = static_cast<long>(gen() % 19) - 9;
            q = q * Q(p, 1 + static_cast<long>(gen() % 7));
        }
        same(make_arrangement(scaled, f.arrangement.context()), "scaled");
    }
    return std::to_string(n) + " transformed copies of the 3 fixtures";
}

std::string c9_colinearity(const AcceptanceOptions &, Corpus &) {
    int checked = 0;
    for (const auto &s : family_samples(FamilyId::F4, 5)) {
        Instantiation m = instantiate(FamilyId::F4, s.params, s.context);
        LinearForm line{Q(1), Q(0), -s.params.at("p")};
        int points = 0;
        for (const auto &pt : m.classification.points) {
            if (pt.type->kind != SingKind::A7 && pt.type->kind != SingKind::A3)
                continue;
            require(locus_on_line(pt.locus, line, m.classification.analysis.frame),
                    "F4 " + format_params(s.params) + ": " + std::string(pt.type->name) + " off the line");
            points += pt.locus.point_count();
        }
        require(points == 3, "F4 " + format_params(s.params) + ": " + std::to_string(points) + " A7/A3 points");
        ++checked;
    }
    require(checked == 5, "fewer than 5 samples");
    return "5 samples, 15 points on X - pZ = 0";
}

std::string c10_no_free_j20(const AcceptanceOptions &, Corpus &corpus) {
    int total = 0, free_count = 0, with_j = 0;
    auto check = [&](const std::string &name, const WeakCombinatorics &t, bool free) {
        ++total;
        free_count += free;
        with_j += t.has_j();
        require(!(free && t.has_j()), name + " is free and carries J20");
    };
    for (const auto &f : corpus.fixtures())
        check(f.name, f.classification.tuple, f.freeness.free);
    for (const auto &m : corpus.family_members())
        check(std::string(family_info(m.id).key), m.classification.tuple, m.report.free);
    for (const auto &p : corpus.pencils())
        check(p.name, p.classification.tuple, p.freeness.free);
    for (const auto &e : corpus.j20_examples())
        check(e.name, e.classification.tuple, e.freeness.free);
    require(with_j > 0, "corpus has no J20 arrangement");
    return std::to_string(total) + " arrangements, " + std::to_string(free_count) + " free, " +
           std::to_string(with_j) + " with J20";
}

using Runner = std::string (*)(const AcceptanceOptions &, Corpus &);
const Runner kRunners[] = {c1_enumeration, c2_j_extension, c3_feasibility, c4_split_lemmas, c5_families,
                           c6_fixtures,    c7_dual_tau,    c8_invariance,  c9_colinearity,  c10_no_free_j20};

bool selected(const CriterionInfo &c, const std::vector<std::string> &filter) {
    if (filter.empty())
        return true;
    for (const auto &f : filter)
        if (f == c.key || f == c.group || f == std::to_string(c.id))
            return true;
    return false;
}

} // namespace

std::span<const CriterionInfo> acceptance_criteria() { return kCriteria; }

std::filesystem::path default_golden_path() { return std::filesystem::path(TRICONIC_DATA_DIR) / "ade_d1_2.tuples.txt"; }

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &opts) {
    AcceptanceOptions o = opts;
    if (o.golden.empty())
        o.golden = default_golden_path();
    Corpus corpus;
    std::vector<CriterionResult> out;
    for (std::size_t i = 0; i < kCriteria.size(); ++i) {
        if (!selected(kCriteria[i], o.filter))
            continue;
        CriterionResult r{&kCriteria[i], false, "", 0};
        auto t0 = Clock::now();
        try {
            r.detail = kRunners[i](o, corpus);
            r.passed = true;
        } catch (const Failure &f) {
            r.detail = f.what;
        } catch (const std::exception &e) {
            r.detail = std::string("error: ") + e.what();
        }
        r.seconds = seconds_since(t0);
        out.push_back(std::move(r));
    }
    if (out.empty())
        throw Error(ErrorKind::Precondition, "filter selects no acceptance criterion");
    return out;
}

std::string format_result(const CriterionResult &r) {
    char time[32];
    std::snprintf(time, sizeof time, "%.2f s", r.seconds);
    return std::string(r.passed ? "PASS" : "FAIL") + " " + (r.info->id < 10 ? " " : "") +
           std::to_string(r.info->id) + " " + std::string(r.info->key) + ": " + r.detail + " (" + time + ")";
}

nlohmann::json results_to_json(const std::vector<CriterionResult> &results) {
    nlohmann::json arr = nlohmann::json::array();
    bool all = true;
    for (const auto &r : results) {
        all = all && r.passed;
        arr.push_back({{"id", r.info->id},
                       {"key", r.info->key},
                       {"group", r.info->group},
                       {"title", r.info->title},
                       {"passed", r.passed},
                       {"detail", r.detail},
                       {"seconds", r.seconds}});
    }
    return {{"passed", all}, {"criteria", arr}};
}

} // namespace triconic
