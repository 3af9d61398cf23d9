#include "fixtures.hpp"

#include "triconic/error.hpp"
#include "triconic/io.hpp"
#include "triconic/plot.hpp"
#include "triconic/report.hpp"

#include <doctest.h>

using namespace triconic;
using nlohmann::json;

namespace {

template <class F> std::optional<ErrorKind> kind_of(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    return std::nullopt;
}

#define CHECK_THROWS_AS_KIND(expr, k) CHECK(kind_of([&] { (void)(expr); }) == (k))

json doc(long d, json conics) { return {{"field", {{"D", d}}}, {"conics", conics}}; }

json unit_circles() {
    return json::array({json::array({"1", "1", "-1", "0", "0", "0"}), json::array({"1", "2", "-1", "0", "0", "0"}),
                        json::array({"1", "3", "-5", "1", "0", "0"})});
}

int count(const std::string &hay, const std::string &needle) {
    int n = 0;
    for (auto at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1))
        ++n;
    return n;
}

} // namespace

TEST_CASE("arrangement json round trip") {
    for (const Arrangement &arr : {fixture::persson(), fixture::pokora(), fixture::example2()}) {
        Arrangement back = arrangement_from_json(arrangement_to_json(arr));
        CHECK(back.context().discriminant() == arr.context().discriminant());
        for (int i = 0; i < 3; ++i)
            CHECK(back.conic(i) == arr.conic(i));
    }
    FieldContext k(-3);
    FieldElem x(k, Rational(1, 2), Rational(-3));
    CHECK(field_elem_from_json(field_elem_to_json(x), k) == x);
    CHECK(field_elem_to_json(FieldElem(Rational(-3, 4))) == "-3/4");
}

TEST_CASE("strict rational literals") {
    for (const char *bad : {"2/4", "+1", "1.5", "01", "-0", "1/-2", "1/0", "", " 1", "1e3"}) {
        CAPTURE(bad);
        json d = doc(1, unit_circles());
        d["conics"][0][0] = bad;
        CHECK_THROWS_AS_KIND(arrangement_from_json(d), ErrorKind::Parse);
    }
    json d = doc(1, unit_circles());
    d["conics"][0][0] = 1;
    CHECK_THROWS_AS_KIND(arrangement_from_json(d), ErrorKind::Parse);
}

TEST_CASE("arrangement documents") {
    CHECK_NOTHROW(arrangement_from_json(doc(1, unit_circles())));
    json extra = doc(1, unit_circles());
    extra["name"] = "anything";
    CHECK_NOTHROW(arrangement_from_json(extra));

    json two = doc(1, unit_circles());
    two["conics"].erase(2);
    CHECK_THROWS_AS_KIND(arrangement_from_json(two), ErrorKind::Validation);
    CHECK_THROWS_AS_KIND(arrangement_from_json(doc(8, unit_circles())), ErrorKind::Validation);
    json sqrt_over_q = doc(1, unit_circles());
    sqrt_over_q["conics"][0][0] = {{"r", "1"}, {"s", "1"}};
    CHECK_THROWS_AS_KIND(arrangement_from_json(sqrt_over_q), ErrorKind::Validation);
    json singular = doc(1, unit_circles());
    singular["conics"][0] = json::array({"1", "0", "0", "0", "0", "0"});
    CHECK_THROWS_AS_KIND(arrangement_from_json(singular), ErrorKind::Validation);
    CHECK_THROWS_AS_KIND(arrangement_from_json(json::array()), ErrorKind::Parse);
    CHECK_THROWS_AS_KIND(read_arrangement_file("/nonexistent/x.conics.json"), ErrorKind::Parse);
}

TEST_CASE("parameter lists") {
    FieldContext k(-3);
    ParamSet p = parse_params("u=1/2,a=0:1", k);
    REQUIRE(p.size() == 2);
    CHECK(p.at("u") == FieldElem(Rational(1, 2)));
    CHECK(p.at("a") == FieldElem(k, 0, 1));
    CHECK(format_params_arg(p) == "a=0:1,u=1/2");
    CHECK(parse_params(format_params_arg(p), k) == p);
    CHECK(parse_params("", k).empty());
    for (const char *bad : {"u", "u=", "=1", "u=1,u=2", "u=1;v=2", "u=1:"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS_KIND(parse_params(bad, k), ErrorKind::Parse);
    }
    CHECK_THROWS_AS_KIND(parse_field_elem("1:1", FieldContext(1)), ErrorKind::Validation);
}

TEST_CASE("report text and json agree") {
    for (const Arrangement &arr : {fixture::persson(), fixture::example2()}) {
        AnalysisReport r = analyze(arr);
        json j = report_to_json(r);
        std::string text = report_to_text(r);
        CHECK(j["format"] == kReportFormat);
        CHECK(j["tau_local"] == r.classification.tau_local);
        CHECK(text.find("tau_global: " + std::to_string(j["tau_global"].get<int>()) + "\n") != std::string::npos);
        CHECK(text.find("free: " + std::string(j["free"].get<bool>() ? "true" : "false")) != std::string::npos);
        CHECK(text.find("weak combinatorics: " + r.classification.tuple.to_string(true)) != std::string::npos);
        CHECK(j.dump().find('\n') == std::string::npos);
    }
    AnalysisReport persson = analyze(fixture::persson());
    REQUIRE(persson.match != nullptr);
    CHECK(persson.match->key == "F4");
    CHECK(analyze(fixture::example2()).match == nullptr);
    CHECK(report_to_json(analyze(fixture::example2()))["mdr"].is_null());
}

TEST_CASE("slices") {
    Slice s = parse_slice("Z = X + Y + 1");
    CHECK(s.solved == 2);
    CHECK(s.axes == std::array<int, 2>{0, 1});
    CHECK(format_slice(s) == "Z = X + Y + 1");
    Slice t = parse_slice("Y=-1/2*X+3");
    CHECK(t.solved == 1);
    CHECK(t.coeff[0] == Rational(-1, 2));
    CHECK(t.coeff[1] == 0);
    CHECK(t.constant == 3);
    CHECK(parse_slice(format_slice(t)).coeff == t.coeff);
    CHECK_THROWS_AS_KIND(parse_slice("Z = X + Y"), ErrorKind::Precondition);
    CHECK_THROWS_AS_KIND(parse_slice("Z = Z + 1"), ErrorKind::Precondition);
    for (const char *bad : {"Z", "W = X + 1", "Z = X +", "Z = 2*Q + 1", "= X + 1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS_KIND(parse_slice(bad), ErrorKind::Parse);
    }
    Window w = parse_window("-1,2,-3,4");
    CHECK(w.x0 == -1);
    CHECK(w.y1 == 4);
    CHECK_THROWS_AS_KIND(parse_window("1,0,0,1"), ErrorKind::Parse);
}

TEST_CASE("svg output") {
    Arrangement arr = fixture::persson();
    Classification c = weak_combinatorics(arr);
    PlotOptions opts{parse_slice("Z = X + Y + 1"), std::nullopt, 400};
    std::string a = render_svg(arr, c, opts), b = render_svg(arr, c, opts);
    CHECK(a == b);
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(count(a, "class=\"Q1\"") > 0);
    CHECK(count(a, "class=\"Q2\"") > 0);
    CHECK(count(a, "class=\"Q3\"") > 0);

    int real_finite = 0, total = 0;
    for (const auto &p : c.points)
        for (const auto &pt : locus_points(p.locus, c.analysis.frame)) {
            ++total;
            bool real = true;
            for (const auto &z : pt)
                real = real && std::abs(z.imag()) < 1e-9;
            std::complex<double> h = pt[0] + pt[1] + pt[2] * -1.0;
            if (real && std::abs(h) > 1e-9)
                ++real_finite;
        }
    int expected_total = 0;
    for (int n : c.tuple.counts)
        expected_total += n;
    CHECK(total == expected_total);
    CHECK(count(a, "class=\"singular\"") + count(a, "<text class=\"legend\"") - 1 >= real_finite);

    json definite = json::array({json::array({"1", "1", "1", "0", "0", "0"}),
                                 json::array({"1", "2", "1", "0", "0", "0"}),
                                 json::array({"1", "3", "5", "1", "0", "0"})});
    Arrangement empty = arrangement_from_json(doc(1, definite));
    std::string e = render_svg(empty, weak_combinatorics(empty), {parse_slice("Z = 1"), Window{}, 300});
    CHECK(e.find("empty real slice") != std::string::npos);
    CHECK(count(e, "class=\"singular\"") == 0);
}
