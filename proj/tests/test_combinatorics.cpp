#include "triconic/combinatorics.hpp"
#include "triconic/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

using namespace triconic;

namespace {

WeakCombinatorics t8(std::array<int, 8> c) { return make_tuple8(c); }
WeakCombinatorics t9(std::array<int, 9> c) { return make_tuple9(c); }

// Unreduced brute force: every point tries every placement of its pieces on
// the labelled pairs. Pieces per type in (n2, t3, n3, t5, d6, t7, d8, d10, j) order.
struct BruteForce {
    std::vector<std::vector<int>> point_pieces; // sorted pieces of each point
    std::set<std::multiset<std::string>> decompositions;
    long leaves = 0;

    static std::string type_of(std::vector<int> p) {
        std::sort(p.rbegin(), p.rend());
        if (p == std::vector<int>{1, 1, 1, 1}) return "N";
        if (p == std::vector<int>{2, 1, 1}) return "T";
        if (p == std::vector<int>{2, 2}) return "TT";
        if (p == std::vector<int>{3, 1}) return "A5P";
        if (p == std::vector<int>{4}) return "A7P";
        return "?";
    }

    explicit BruteForce(const WeakCombinatorics &t) {
        const std::vector<std::vector<int>> pieces{{1}, {2}, {1, 1, 1}, {3}, {2, 1, 1}, {4}, {3, 1, 1}, {4, 1, 1}, {2, 2, 2}};
        for (std::size_t i = 0; i < 9; ++i)
            for (int c = 0; c < t.counts[i]; ++c)
                point_pieces.push_back(pieces[i]);
        std::array<std::vector<int>, 3> pairs;
        run(0, pairs);
    }

    void run(std::size_t i, std::array<std::vector<int>, 3> &pairs) {
        if (i == point_pieces.size()) {
            ++leaves;
            std::multiset<std::string> d;
            for (const auto &p : pairs) {
                int sum = 0;
                for (int x : p)
                    sum += x;
                if (sum != 4)
                    return;
                d.insert(type_of(p));
            }
            decompositions.insert(d);
            return;
        }
        auto pc = point_pieces[i];
        std::vector<std::array<int, 3>> placements;
        if (pc.size() == 1) {
            for (int k = 0; k < 3; ++k) {
                std::array<int, 3> a{};
                a[k] = pc[0];
                placements.push_back(a);
            }
        } else {
            std::array<int, 3> a{pc[0], pc[1], pc[2]};
            std::sort(a.begin(), a.end());
            do
                placements.push_back(a);
            while (std::next_permutation(a.begin(), a.end()));
        }
        for (const auto &a : placements) {
            for (int k = 0; k < 3; ++k)
                if (a[k])
                    pairs[k].push_back(a[k]);
            run(i + 1, pairs);
            for (int k = 0; k < 3; ++k)
                if (a[k])
                    pairs[k].pop_back();
        }
    }
};

std::multiset<std::string> as_names(const PairDecomposition &d) {
    std::multiset<std::string> out;
    for (PairType p : d)
        out.insert(std::string(to_string(p)));
    return out;
}

std::vector<WeakCombinatorics> all_31() {
    std::vector<WeakCombinatorics> out;
    for (const auto &t : enumerate_tuples({2, true}))
        out.push_back(t);
    return out;
}

std::vector<WeakCombinatorics> golden() {
    std::ifstream in(std::string(TRICONIC_DATA_DIR) + "/ade_d1_2.tuples.txt");
    REQUIRE(in.good());
    return read_tuples(in);
}

} // namespace

TEST_CASE("counting system targets") {
    CHECK(CountingSystem{2, false}.tau_target() == 19);
    CHECK(CountingSystem{1, false}.tau_target() == 21);
    CHECK_THROWS_AS(enumerate_tuples({3, false}), Error);
    CHECK_THROWS_AS(enumerate_tuples({0, true}), Error);
}

TEST_CASE("ADE enumeration matches the golden list") {
    auto e = enumerate_tuples({2, false});
    CHECK(e.size() == 25);
    CHECK(e == golden());
    CHECK(std::is_sorted(e.begin(), e.end()));
    for (const auto &t : e) {
        CHECK_FALSE(t.has_j());
        // Re-substitution with the table values written out.
        const int tau[] = {1, 3, 4, 5, 6, 7, 8, 10, 10}, budget[] = {1, 2, 3, 3, 4, 4, 5, 6, 6};
        int a = 0, b = 0;
        for (std::size_t i = 0; i < 9; ++i) {
            a += tau[i] * t.counts[i];
            b += budget[i] * t.counts[i];
        }
        CHECK(a == 19);
        CHECK(b == 12);
    }
}

TEST_CASE("enumeration against a naive bounded scan") {
    for (int d1 : {1, 2}) {
        for (bool with_j : {false, true}) {
            CountingSystem sys{d1, with_j};
            std::vector<WeakCombinatorics> naive;
            // Every count is bounded by the budget 12 over its per-point budget.
            const int bound[] = {12, 6, 4, 4, 3, 3, 2, 2, 2};
            std::array<int, 9> c{};
            auto rec = [&](auto &&self, std::size_t i) -> void {
                if (i == 9) {
                    int tau = c[0] + 3 * c[1] + 4 * c[2] + 5 * c[3] + 6 * c[4] + 7 * c[5] + 8 * c[6] + 10 * c[7] + 10 * c[8];
                    int budget = c[0] + 2 * c[1] + 3 * c[2] + 3 * c[3] + 4 * c[4] + 4 * c[5] + 5 * c[6] + 6 * c[7] + 6 * c[8];
                    if (tau == 25 - 5 * d1 + d1 * d1 && budget == 12 && (d1 == 2 || c[8] > 0))
                        naive.push_back(make_tuple9(c));
                    return;
                }
                for (c[i] = 0; c[i] <= (i == 8 && !with_j ? 0 : bound[i]); ++c[i])
                    self(self, i + 1);
                c[i] = 0;
            };
            rec(rec, 0);
            std::sort(naive.begin(), naive.end());
            CHECK(enumerate_tuples(sys) == naive);
        }
    }
}

TEST_CASE("J20 extension") {
    CHECK(enumerate_tuples({1, true}).empty());
    CHECK(enumerate_tuples({1, false}).empty());
    // The bare equations at d1 = 1 are solvable, but only without J20, where
    // the Arnold exponent bound already demands d1 = 2.
    CountingSystem one{1, true};
    CHECK(one.satisfied_by(t8({0, 0, 0, 0, 0, 3, 0, 0})));
    CHECK_FALSE(one.admissible(t8({0, 0, 0, 0, 0, 3, 0, 0})));
    auto e = enumerate_tuples({2, true});
    CHECK(e.size() == 31);
    std::vector<WeakCombinatorics> with_j;
    for (const auto &t : e)
        if (t.has_j())
            with_j.push_back(t);
    std::vector<WeakCombinatorics> expect{
        t9({0, 0, 1, 1, 0, 0, 0, 0, 1}), t9({0, 1, 0, 0, 1, 0, 0, 0, 1}), t9({0, 3, 0, 0, 0, 0, 0, 0, 1}),
        t9({1, 0, 0, 0, 0, 0, 1, 0, 1}), t9({1, 1, 0, 1, 0, 0, 0, 0, 1}), t9({2, 0, 0, 0, 0, 1, 0, 0, 1}),
    };
    CHECK(with_j == expect);
}

TEST_CASE("printed J20 list discrepancies") {
    JListCheck c = check_printed_j_list();
    CHECK(c.enumerated.size() == 6);
    REQUIRE(c.discrepancies.size() == 2);
    CHECK(c.discrepancies[0].printed == t9({0, 1, 0, 0, 0, 1, 0, 0, 1}));
    CHECK(c.discrepancies[0].tau == 20);
    CHECK(c.discrepancies[0].corrected == t9({0, 1, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(c.discrepancies[1].printed == t9({2, 0, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(c.discrepancies[1].tau == 18);
    CHECK(c.discrepancies[1].corrected == t9({2, 0, 0, 0, 0, 1, 0, 0, 1}));
    std::string notice = discrepancy_notice(c);
    CHECK(std::count(notice.begin(), notice.end(), '\n') == 2);
    CHECK(notice.find("tau 20 vs 19") != std::string::npos);
}

TEST_CASE("pinned feasibility examples") {
    CHECK(pair_assignment_search(t8({0, 3, 0, 2, 0, 0, 0, 0})).status == Feasibility::CombinatoriallyInfeasible);
    CHECK(pair_assignment_search(t8({0, 0, 0, 1, 1, 0, 1, 0})).status == Feasibility::CombinatoriallyInfeasible);
    auto v = pair_assignment_search(t8({0, 4, 0, 0, 0, 1, 0, 0}));
    CHECK(v.status == Feasibility::CombinatoriallyFeasible);
    REQUIRE(v.witness);
    CHECK(v.witness->decomposition() == PairDecomposition{PairType::TT, PairType::TT, PairType::A7P});
    REQUIRE(v.realizability);
    CHECK_FALSE(v.realizability->realizable);
    CHECK(v.realizability->refuted == Refutation::Algebraic);
}

TEST_CASE("decomposition graphs") {
    using P = PairType;
    CHECK(decomposition_graphs(t8({0, 1, 0, 0, 0, 0, 2, 0})) == std::vector<PairDecomposition>{{P::T, P::A5P, P::A5P}});
    CHECK(decomposition_graphs(t8({0, 0, 1, 3, 0, 0, 0, 0})) ==
          std::vector<PairDecomposition>{{P::A5P, P::A5P, P::A5P}});
    CHECK(decomposition_graphs(t8({1, 1, 0, 1, 0, 0, 0, 1})) == std::vector<PairDecomposition>{{P::T, P::A5P, P::A7P}});
    CHECK(decomposition_graphs(t8({0, 3, 0, 2, 0, 0, 0, 0})).empty());
}

TEST_CASE("witnesses are valid assignments") {
    for (const auto &t : all_31()) {
        auto v = pair_assignment_search(t);
        if (!v.witness)
            continue;
        WeakCombinatorics recount;
        for (const auto &p : v.witness->points) {
            recount[p.kind] += 1;
            auto sorted = std::vector<int>{};
            for (int x : p.pieces)
                if (x)
                    sorted.push_back(x);
            std::sort(sorted.rbegin(), sorted.rend());
            CHECK(sorted == singularity_type(p.kind).signature);
        }
        CHECK(recount == t);
        for (const auto &pat : v.witness->patterns()) {
            int sum = 0;
            for (int x : pat)
                sum += x;
            CHECK(sum == 4);
        }
    }
}

TEST_CASE("search agrees with the unreduced brute force") {
    for (const auto &t : all_31()) {
        CAPTURE(t.to_string(true));
        BruteForce bf(t);
        std::set<std::multiset<std::string>> got;
        for (const auto &d : decomposition_graphs(t))
            got.insert(as_names(d));
        CHECK(got == bf.decompositions);
    }
}

TEST_CASE("feasibility partition of the ADE tuples") {
    int infeasible = 0;
    std::vector<WeakCombinatorics> feasible;
    for (const auto &t : enumerate_tuples({2, false})) {
        auto v = pair_assignment_search(t);
        REQUIRE(v.realizability);
        if (v.status == Feasibility::CombinatoriallyInfeasible) {
            ++infeasible;
            CHECK(v.realizability->refuted.has_value());
            CHECK(v.realizability->refuted != Refutation::Algebraic);
        } else {
            feasible.push_back(t);
        }
    }
    CHECK(infeasible == 16);
    std::vector<WeakCombinatorics> expect{
        t8({0, 0, 1, 3, 0, 0, 0, 0}), t8({0, 1, 0, 0, 0, 0, 2, 0}), t8({0, 1, 0, 2, 1, 0, 0, 0}),
        t8({0, 4, 0, 0, 0, 1, 0, 0}), t8({1, 0, 0, 2, 0, 0, 1, 0}), t8({1, 1, 0, 1, 0, 0, 0, 1}),
        t8({1, 2, 0, 1, 0, 1, 0, 0}), t8({2, 0, 0, 2, 0, 1, 0, 0}), t8({2, 1, 0, 0, 0, 2, 0, 0}),
    };
    CHECK(feasible == expect);
    int realizable = 0;
    for (const auto &t : feasible)
        realizable += known_realizability(t)->realizable;
    CHECK(realizable == 6);
}

TEST_CASE("J20 tuples") {
    int feasible = 0;
    for (const auto &t : all_31()) {
        if (!t.has_j())
            continue;
        auto v = pair_assignment_search(t);
        REQUIRE(v.realizability);
        CHECK_FALSE(v.realizability->realizable);
        if (v.status == Feasibility::CombinatoriallyFeasible) {
            ++feasible;
            CHECK(t == t9({0, 3, 0, 0, 0, 0, 0, 0, 1}));
            CHECK(v.decompositions == std::vector<PairDecomposition>{{PairType::TT, PairType::TT, PairType::TT}});
        }
    }
    CHECK(feasible == 1);
}

TEST_CASE("split-lemma properties over all 31 tuples") {
    for (const auto &t : all_31()) {
        CAPTURE(t.to_string(true));
        auto v = pair_assignment_search(t);
        CHECK(split_property_failures(t, v).empty());
    }
    // The checker itself notices a tampered verdict.
    auto t = t8({0, 4, 0, 0, 0, 1, 0, 0});
    auto v = pair_assignment_search(t);
    v.decompositions = {{PairType::T, PairType::TT, PairType::A7P}};
    CHECK_FALSE(split_property_failures(t, v).empty());
}

TEST_CASE("symmetry reduction shrinks the search") {
    auto t = t8({0, 3, 0, 2, 0, 0, 0, 0});
    BruteForce bf(t);
    CHECK(pair_assignment_search(t).states < static_cast<std::size_t>(bf.leaves));
}

TEST_CASE("search precondition") {
    CHECK_THROWS_AS(pair_assignment_search(t8({1, 0, 0, 0, 0, 0, 0, 0})), Error);
}

TEST_CASE("tuple files") {
    std::istringstream in("# header\n0 1 0 0 0 0 2 0\n\n2 1 0 0 0 2 0 0 0  # trailing\n");
    auto ts = read_tuples(in);
    REQUIRE(ts.size() == 2);
    CHECK(ts[0] == t8({0, 1, 0, 0, 0, 0, 2, 0}));
    std::ostringstream out;
    write_tuples(out, ts);
    CHECK(out.str() == "0 1 0 0 0 0 2 0 0\n2 1 0 0 0 2 0 0 0\n");
    for (const char *bad : {"1 2 3\n", "0 1 0 0 0 0 2 x\n", "0 -1 0 0 0 0 2 0\n"}) {
        std::istringstream b(bad);
        CHECK_THROWS_AS(read_tuples(b), Error);
    }
}
