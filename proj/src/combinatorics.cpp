#include "triconic/combinatorics.hpp"

#include "triconic/error.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace triconic {

bool CountingSystem::satisfied_by(const WeakCombinatorics &t) const {
    return t.tau() == tau_target() && t.budget() == budget_target() && (with_j || !t.has_j());
}

bool CountingSystem::admissible(const WeakCombinatorics &t) const {
    return satisfied_by(t) && (t.has_j() || d1 >= 2);
}

std::vector<WeakCombinatorics> enumerate_tuples(const CountingSystem &sys) {
    if (sys.d1 != 1 && sys.d1 != 2)
        throw Error(ErrorKind::Precondition, "d1 must be 1 or 2, got " + std::to_string(sys.d1));
    auto table = singularity_table();
    std::size_t n = sys.with_j ? table.size() : table.size() - 1;
    std::vector<WeakCombinatorics> out;
    WeakCombinatorics cur;
    auto rec = [&](auto &&self, std::size_t i, int tau_left, int budget_left) -> void {
        if (i == n) {
            if (tau_left == 0 && budget_left == 0 && sys.admissible(cur))
                out.push_back(cur);
            return;
        }
        const auto &row = table[i];
        for (int c = 0; c * row.tau <= tau_left && c * row.pair_budget <= budget_left; ++c) {
            cur.counts[i] = c;
            self(self, i + 1, tau_left - c * row.tau, budget_left - c * row.pair_budget);
        }
        cur.counts[i] = 0;
    };
    rec(rec, 0, sys.tau_target(), sys.budget_target());
    std::sort(out.begin(), out.end());
    return out;
}

std::array<MultiplicityPattern, 3> PairAssignment::patterns() const {
    std::array<MultiplicityPattern, 3> out;
    for (const auto &p : points)
        for (std::size_t k = 0; k < 3; ++k)
            if (p.pieces[k] > 0)
                out[k].push_back(p.pieces[k]);
    for (auto &pat : out)
        std::sort(pat.rbegin(), pat.rend());
    return out;
}

PairDecomposition PairAssignment::decomposition() const {
    PairDecomposition out;
    for (const auto &pat : patterns())
        out.push_back(pair_type_of(pat));
    std::sort(out.begin(), out.end());
    return out;
}

std::string PairAssignment::to_string() const {
    std::string out;
    for (const auto &p : points) {
        out += out.empty() ? "" : " ";
        out += std::string(singularity_type(p.kind).name) + "(" + std::to_string(p.pieces[0]) + "," +
               std::to_string(p.pieces[1]) + "," + std::to_string(p.pieces[2]) + ")";
    }
    return out;
}

std::vector<std::array<int, 3>> piece_distributions(SingKind kind) {
    const auto &sig = singularity_type(kind).signature;
    std::array<int, 3> d{};
    std::copy(sig.begin(), sig.end(), d.begin());
    std::sort(d.begin(), d.end());
    std::vector<std::array<int, 3>> out;
    do
        out.push_back(d);
    while (std::next_permutation(d.begin(), d.end()));
    std::reverse(out.begin(), out.end());
    return out;
}

std::string_view to_string(Feasibility f) {
    return f == Feasibility::CombinatoriallyFeasible ? "combinatorially feasible" : "combinatorially infeasible";
}

std::string_view to_string(Refutation r) {
    switch (r) {
    case Refutation::PairCount: return "A5P and T/TT pair counts exceed three pairs";
    case Refutation::NodesWithA7: return "A7 or D10 excludes D4, D6 and D8";
    case Refutation::NodeFreePairs: return "two node-free pairs exclude D6, D8 and D10";
    case Refutation::D8NeedsNodes: return "D8 needs a node on every pair";
    case Refutation::NodeAccounting: return "D6 and D8 cannot share the nodes of the T pair";
    case Refutation::JExclusion: return "A5, A7, D8 or D10 excludes J20";
    case Refutation::Algebraic: return "tangent-pencil ansatz forces a reducible conic";
    }
    return "?";
}

namespace {

WeakCombinatorics t8(std::array<int, 8> c) { return make_tuple8(c); }

const std::vector<std::pair<WeakCombinatorics, Refutation>> &refutations() {
    using R = Refutation;
    static const std::vector<std::pair<WeakCombinatorics, Refutation>> table{
        {t8({0, 3, 0, 2, 0, 0, 0, 0}), R::PairCount},
        {t8({1, 1, 0, 3, 0, 0, 0, 0}), R::PairCount},
        {t8({0, 1, 1, 1, 0, 1, 0, 0}), R::NodesWithA7},
        {t8({0, 2, 0, 0, 1, 1, 0, 0}), R::NodesWithA7},
        {t8({1, 0, 0, 1, 1, 1, 0, 0}), R::NodesWithA7},
        {t8({0, 0, 0, 0, 2, 1, 0, 0}), R::NodesWithA7},
        {t8({1, 0, 1, 0, 0, 2, 0, 0}), R::NodesWithA7},
        {t8({1, 1, 0, 0, 0, 1, 1, 0}), R::NodesWithA7},
        {t8({0, 0, 1, 0, 0, 1, 1, 0}), R::NodesWithA7},
        {t8({0, 0, 1, 1, 0, 0, 0, 1}), R::NodesWithA7},
        {t8({0, 1, 0, 0, 1, 0, 0, 1}), R::NodesWithA7},
        {t8({1, 0, 0, 0, 0, 0, 1, 1}), R::NodesWithA7},
        {t8({2, 0, 0, 0, 0, 1, 0, 1}), R::NodeFreePairs},
        {t8({0, 3, 0, 0, 0, 0, 0, 1}), R::NodeFreePairs},
        {t8({0, 2, 0, 1, 0, 0, 1, 0}), R::D8NeedsNodes},
        {t8({0, 0, 0, 1, 1, 0, 1, 0}), R::NodeAccounting},
        {t8({0, 4, 0, 0, 0, 1, 0, 0}), R::Algebraic},
        {t8({1, 2, 0, 1, 0, 1, 0, 0}), R::Algebraic},
        {t8({0, 1, 0, 2, 1, 0, 0, 0}), R::Algebraic},
        {make_tuple9({1, 1, 0, 1, 0, 0, 0, 0, 1}), R::JExclusion},
        {make_tuple9({0, 0, 1, 1, 0, 0, 0, 0, 1}), R::JExclusion},
        {make_tuple9({2, 0, 0, 0, 0, 1, 0, 0, 1}), R::JExclusion},
        {make_tuple9({1, 0, 0, 0, 0, 0, 1, 0, 1}), R::JExclusion},
        {make_tuple9({0, 1, 0, 0, 1, 0, 0, 0, 1}), R::NodeFreePairs},
        {make_tuple9({0, 3, 0, 0, 0, 0, 0, 0, 1}), R::Algebraic},
    };
    return table;
}

// Pieces received by each pair, each list sorted decreasingly.
using Loads = std::array<std::vector<int>, 3>;

int load(const std::vector<int> &pieces) { return std::accumulate(pieces.begin(), pieces.end(), 0); }

Loads canonical(Loads l) {
    std::sort(l.begin(), l.end());
    return l;
}

class Search {
public:
    explicit Search(const WeakCombinatorics &t) {
        auto table = singularity_table();
        // Large pieces first, so overfull pairs are pruned early.
        for (std::size_t i = table.size(); i-- > 0;)
            for (int c = 0; c < t.counts[i]; ++c)
                kinds_.push_back(table[i].kind);
        for (SingKind k : kinds_)
            if (!dist_.count(k))
                dist_[k] = piece_distributions(k);
    }

    const std::set<PairDecomposition> &explore(std::size_t i, const Loads &loads) {
        auto key = std::make_pair(i, loads);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        std::set<PairDecomposition> found;
        if (i == kinds_.size()) {
            if (std::all_of(loads.begin(), loads.end(), [](const auto &p) { return load(p) == 4; })) {
                PairDecomposition d;
                for (const auto &p : loads)
                    d.push_back(pair_type_of(p));
                std::sort(d.begin(), d.end());
                found.insert(d);
            }
        } else {
            for (const auto &d : dist_.at(kinds_[i]))
                if (auto next = place(loads, d)) {
                    const auto &sub = explore(i + 1, canonical(*next));
                    found.insert(sub.begin(), sub.end());
                }
        }
        return memo_.emplace(std::move(key), std::move(found)).first->second;
    }

    PairAssignment witness() {
        PairAssignment out;
        Loads loads;
        for (std::size_t i = 0; i < kinds_.size(); ++i) {
            for (const auto &d : dist_.at(kinds_[i])) {
                auto next = place(loads, d);
                if (next && !explore(i + 1, canonical(*next)).empty()) {
                    out.points.push_back({kinds_[i], d});
                    loads = *next;
                    break;
                }
            }
        }
        return out;
    }

    std::size_t states() const { return memo_.size(); }

private:
    static std::optional<Loads> place(const Loads &loads, const std::array<int, 3> &d) {
        Loads next = loads;
        for (std::size_t k = 0; k < 3; ++k) {
            if (d[k] == 0)
                continue;
            auto &p = next[k];
            p.insert(std::upper_bound(p.begin(), p.end(), d[k], std::greater<>()), d[k]);
            if (load(p) > 4)
                return std::nullopt;
        }
        return next;
    }

    std::vector<SingKind> kinds_;
    std::map<SingKind, std::vector<std::array<int, 3>>> dist_;
    std::map<std::pair<std::size_t, Loads>, std::set<PairDecomposition>> memo_;
};

} // namespace

std::optional<Realizability> known_realizability(const WeakCombinatorics &t) {
    for (const auto &e : catalog_entries())
        if (e.is_family && e.expected == t)
            return Realizability{true, e.id, std::nullopt};
    for (const auto &[tuple, why] : refutations())
        if (tuple == t)
            return Realizability{false, std::nullopt, why};
    return std::nullopt;
}

FeasibilityVerdict pair_assignment_search(const WeakCombinatorics &t) {
    if (t.budget() != 12)
        throw Error(ErrorKind::Precondition,
                    "pair budget of " + t.to_string() + " is " + std::to_string(t.budget()) + ", not 12");
    Search search(t);
    const auto &found = search.explore(0, Loads{});
    FeasibilityVerdict v;
    v.decompositions.assign(found.begin(), found.end());
    if (!found.empty()) {
        v.status = Feasibility::CombinatoriallyFeasible;
        v.witness = search.witness();
    }
    v.states = search.states();
    v.realizability = known_realizability(t);
    return v;
}

std::vector<PairDecomposition> decomposition_graphs(const WeakCombinatorics &t) {
    return pair_assignment_search(t).decompositions;
}

std::vector<std::string> split_property_failures(const WeakCombinatorics &t, const FeasibilityVerdict &v) {
    std::vector<std::string> out;
    auto c = [&](SingKind k) { return t[k]; };
    bool feasible = v.status == Feasibility::CombinatoriallyFeasible;
    if (feasible != !v.decompositions.empty() || feasible != v.witness.has_value())
        out.push_back("verdict, witness and decompositions disagree");
    if (v.witness && std::find(v.decompositions.begin(), v.decompositions.end(), v.witness->decomposition()) ==
                         v.decompositions.end())
        out.push_back("witness decomposition not listed");
    if (v.realizability && v.realizability->realizable && !feasible)
        out.push_back("realizable tuple reported infeasible");
    if (feasible && c(SingKind::A7) + c(SingKind::D10) > 0 && c(SingKind::D4) + c(SingKind::D6) + c(SingKind::D8) > 0)
        out.push_back("A7/D10 together with D4/D6/D8");
    if (feasible && t.has_j() && c(SingKind::A5) + c(SingKind::A7) + c(SingKind::D8) + c(SingKind::D10) > 0)
        out.push_back("J20 together with A5/A7/D8/D10");
    for (const auto &d : v.decompositions) {
        auto n = [&](PairType p) { return static_cast<int>(std::count(d.begin(), d.end(), p)); };
        std::string tag = " in " + format_decomposition(d);
        if (n(PairType::A7P) != c(SingKind::A7) + c(SingKind::D10))
            out.push_back("A7P count != t7 + d10" + tag);
        if (n(PairType::A5P) != c(SingKind::A5) + c(SingKind::D8))
            out.push_back("A5P count != t5 + d8" + tag);
        // Each J20 leaves a tangency on all three pairs.
        if (n(PairType::T) + 2 * n(PairType::TT) != c(SingKind::A3) + c(SingKind::D6) + 3 * c(SingKind::J20))
            out.push_back("T + 2 TT != t3 + d6 + 3 j" + tag);
        int node_free = n(PairType::A7P) + n(PairType::TT);
        if (node_free >= 2 && c(SingKind::D6) + c(SingKind::D8) + c(SingKind::D10) > 0)
            out.push_back("two node-free pairs alongside D6/D8/D10" + tag);
        if (c(SingKind::D8) > 0 && node_free > 0)
            out.push_back("D8 with a node-free pair" + tag);
    }
    return out;
}

std::span<const WeakCombinatorics> printed_j_list() {
    static const std::vector<WeakCombinatorics> list{
        make_tuple9({0, 0, 1, 1, 0, 0, 0, 0, 1}), make_tuple9({0, 1, 0, 0, 0, 1, 0, 0, 1}),
        make_tuple9({0, 3, 0, 0, 0, 0, 0, 0, 1}), make_tuple9({1, 0, 0, 0, 0, 0, 1, 0, 1}),
        make_tuple9({1, 1, 0, 1, 0, 0, 0, 0, 1}), make_tuple9({2, 0, 0, 0, 1, 0, 0, 0, 1}),
    };
    return list;
}

JListCheck check_printed_j_list() {
    CountingSystem sys{2, true};
    JListCheck out;
    for (const auto &t : enumerate_tuples(sys))
        if (t.has_j())
            out.enumerated.push_back(t);
    auto printed = printed_j_list();
    std::vector<WeakCombinatorics> unlisted;
    for (const auto &t : out.enumerated)
        if (std::find(printed.begin(), printed.end(), t) == printed.end())
            unlisted.push_back(t);
    for (const auto &p : printed) {
        if (sys.satisfied_by(p))
            continue;
        ListDiscrepancy d{p, p.tau(), p.budget(), std::nullopt};
        int best = 1 << 30, ties = 0;
        for (const auto &u : unlisted) {
            int dist = 0;
            for (std::size_t i = 0; i < 9; ++i)
                dist += std::abs(u.counts[i] - p.counts[i]);
            if (dist < best) {
                best = dist;
                ties = 0;
                d.corrected = u;
            }
            ties += dist == best;
        }
        if (ties != 1)
            d.corrected.reset();
        out.discrepancies.push_back(d);
    }
    return out;
}

std::string discrepancy_notice(const JListCheck &check) {
    CountingSystem sys{2, true};
    std::string out;
    for (const auto &d : check.discrepancies) {
        out += "notice: printed J20 tuple " + d.printed.to_string(true) + " fails the counting system (tau " +
               std::to_string(d.tau) + " vs " + std::to_string(sys.tau_target()) + ", budget " +
               std::to_string(d.budget) + " vs " + std::to_string(sys.budget_target()) + ")";
        if (d.corrected)
            out += "; enumerated solution " + d.corrected->to_string(true) + " takes its place";
        out += "\n";
    }
    return out;
}

std::vector<WeakCombinatorics> read_tuples(std::istream &in) {
    std::vector<WeakCombinatorics> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ss(line);
        std::vector<int> v;
        std::string tok;
        while (ss >> tok) {
            std::size_t used = 0;
            int x = -1;
            try {
                x = std::stoi(tok, &used);
            } catch (const std::exception &) {
            }
            if (used != tok.size() || x < 0)
                throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad count '" + tok + "'");
            v.push_back(x);
        }
        if (v.empty())
            continue;
        if (v.size() != 8 && v.size() != 9)
            throw Error(ErrorKind::Parse,
                        "line " + std::to_string(lineno) + ": expected 8 or 9 counts, got " + std::to_string(v.size()));
        WeakCombinatorics t;
        std::copy(v.begin(), v.end(), t.counts.begin());
        out.push_back(t);
    }
    return out;
}

std::string format_tuple_line(const WeakCombinatorics &t) {
    std::string out;
    for (std::size_t i = 0; i < t.counts.size(); ++i)
        out += (i ? " " : "") + std::to_string(t.counts[i]);
    return out;
}

void write_tuples(std::ostream &out, const std::vector<WeakCombinatorics> &tuples) {
    for (const auto &t : tuples)
        out << format_tuple_line(t) << '\n';
}

} // namespace triconic
