#include "triconic/catalog.hpp"

#include "triconic/error.hpp"

#include <algorithm>
#include <cctype>
#include <random>

namespace triconic {

namespace {

using PT = PairType;

FieldElem Q(long p, long q = 1) { return FieldElem(Rational(p, q)); }

const std::vector<FamilyInfo> &entries() {
    static const std::vector<FamilyInfo> table{
        {FamilyId::F1, "F1", "(i)", {"u"}, std::nullopt, "u != 0",
         make_tuple8({0, 1, 0, 0, 0, 0, 2, 0}), {PT::T, PT::A5P, PT::A5P}, true, true, ""},
        {FamilyId::F2, "F2", "(ii)", {"b", "c"}, std::nullopt, "c != 0",
         make_tuple8({0, 0, 1, 3, 0, 0, 0, 0}), {PT::A5P, PT::A5P, PT::A5P}, true, true,
         "stated Q3 has two XY terms and does not verify; Q3 is rebuilt as lambda*Q1 + l1*l2 with "
         "q = -b/c + c/3, lambda = -c^3/27"},
        {FamilyId::F3, "F3", "(iii)", {"m", "p", "a"}, "a", "m != p and a^2 = -3(m-p)^4",
         make_tuple8({2, 0, 0, 2, 0, 1, 0, 0}), {PT::A5P, PT::A5P, PT::A7P}, true, true, "needs D = -3"},
        {FamilyId::F4, "F4", "(iv)", {"p", "r"}, std::nullopt, "p != r",
         make_tuple8({2, 1, 0, 0, 0, 2, 0, 0}), {PT::T, PT::A7P, PT::A7P}, true, true,
         "the two A7 points and the A3 point lie on X - pZ = 0"},
        {FamilyId::F5, "F5", "(v)", {"p", "q", "mu"}, "mu", "p != q, mu != 0 and (p-q)^2 + 3mu(p-q+mu) = 0",
         make_tuple8({1, 0, 0, 2, 0, 0, 1, 0}), {PT::A5P, PT::A5P, PT::A5P}, true, true, "needs D = -3"},
        {FamilyId::F6, "F6", "(vi)", {"p", "q"}, std::nullopt, "p != q",
         make_tuple8({1, 1, 0, 1, 0, 0, 0, 1}), {PT::T, PT::A5P, PT::A7P}, true, true, ""},
        {FamilyId::Persson, "persson", "", {}, std::nullopt, "",
         make_tuple8({2, 1, 0, 0, 0, 2, 0, 0}), {PT::T, PT::A7P, PT::A7P}, true, false,
         "free; singularity tuple pinned by computation"},
        {FamilyId::Pokora, "pokora", "", {}, std::nullopt, "",
         make_tuple8({0, 0, 1, 3, 0, 0, 0, 0}), {PT::A5P, PT::A5P, PT::A5P}, true, false,
         "free; lower-case y, z read as Y, Z; tuple pinned by computation"},
        {FamilyId::Example2, "example2", "", {}, std::nullopt, "",
         make_tuple8({2, 3, 0, 0, 0, 1, 0, 0}), {PT::T, PT::TT, PT::A7P}, false, false,
         "not free: tau = 18 fails the Du Plessis-Wall identity for mdr in {1, 2}"},
    };
    return table;
}

const FieldElem &param(const ParamSet &p, const std::string &name) {
    auto it = p.find(name);
    if (it == p.end())
        throw Error(ErrorKind::Precondition, "missing parameter '" + name + "'");
    return it->second;
}

[[noreturn]] void violated(const std::string &clause) {
    throw Error(ErrorKind::Precondition, "constraint violated: " + clause);
}

Conic make(const FieldElem &xx, const FieldElem &yy, const FieldElem &zz, const FieldElem &xy, const FieldElem &xz,
           const FieldElem &yz) {
    return Conic(Conic::Coefficients{xx, yy, zz, xy, xz, yz});
}

// X^2 - YZ
Conic standard_conic() { return make(1, 0, 0, 0, 0, -1); }

std::optional<Conic> constructive_q3(FamilyId id, const ParamSet &params) {
    switch (id) {
    case FamilyId::F1: {
        // u Q1 + (Z)(2X): Z is tangent to Q1 at [0:1:0] and X passes through it.
        const FieldElem &u = param(params, "u");
        return build_tangent_conic(standard_conic(), TangentKind::A5P, {{0, 0, 1}, LinearForm{2, 0, 0}}, u);
    }
    case FamilyId::F2: {
        const FieldElem &b = param(params, "b"), &c = param(params, "c");
        FieldElem q = -b / c + c / FieldElem(3);
        FieldElem lambda = -(c * c * c) / FieldElem(27);
        LinearForm l1{FieldElem(2) * q, -(q * q), FieldElem(-1)};
        LinearForm l2{b - c * q, -(b * q), c};
        return build_tangent_conic(standard_conic(), TangentKind::A5P, {l1, l2}, lambda);
    }
    default:
        return std::nullopt;
    }
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (char &ch : out)
        ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return out;
}

} // namespace

std::span<const FamilyInfo> catalog_entries() { return entries(); }

const FamilyInfo &family_info(FamilyId id) {
    for (const auto &e : entries())
        if (e.id == id)
            return e;
    throw Error(ErrorKind::Internal, "unknown family id");
}

std::optional<FamilyId> parse_family(std::string_view key) {
    std::string k = lower(key);
    for (const auto &e : entries())
        if (lower(e.key) == k)
            return e.id;
    return std::nullopt;
}

std::string format_params(const ParamSet &p) {
    std::string out;
    for (const auto &[name, value] : p)
        out += (out.empty() ? "" : ", ") + name + " = " + value.to_string();
    return out;
}

std::string format_params_arg(const ParamSet &p) {
    std::string out;
    for (const auto &[name, value] : p) {
        out += (out.empty() ? "" : ",") + name + "=" + format_rational(value.r());
        if (!value.is_rational())
            out += ":" + format_rational(value.s());
    }
    return out;
}

void check_constraints(FamilyId id, const ParamSet &params) {
    const FamilyInfo &info = family_info(id);
    for (const auto &[name, value] : params)
        if (std::find(info.params.begin(), info.params.end(), name) == info.params.end())
            throw Error(ErrorKind::Precondition,
                        "unknown parameter '" + name + "' for " + std::string(info.key));
    for (const auto &name : info.params)
        param(params, name);
    switch (id) {
    case FamilyId::F1:
        if (param(params, "u").is_zero())
            violated("u != 0");
        break;
    case FamilyId::F2:
        if (param(params, "c").is_zero())
            violated("c != 0");
        break;
    case FamilyId::F3: {
        FieldElem d = param(params, "m") - param(params, "p");
        if (d.is_zero())
            violated("m != p");
        const FieldElem &a = param(params, "a");
        if (a * a != FieldElem(-3) * pow(d, 4))
            violated("a^2 = -3(m-p)^4");
        break;
    }
    case FamilyId::F4:
        if (param(params, "p") == param(params, "r"))
            violated("p != r");
        break;
    case FamilyId::F5: {
        FieldElem d = param(params, "p") - param(params, "q");
        const FieldElem &mu = param(params, "mu");
        if (d.is_zero())
            violated("p != q");
        if (mu.is_zero())
            violated("mu != 0");
        if (!(d * d + FieldElem(3) * mu * (d + mu)).is_zero())
            violated("(p-q)^2 + 3mu(p-q+mu) = 0");
        break;
    }
    case FamilyId::F6:
        if (param(params, "p") == param(params, "q"))
            violated("p != q");
        break;
    default:
        break;
    }
}

std::vector<ParamSet> solve_constraint(FamilyId id, const ParamSet &free_params, const FieldContext &ctx) {
    auto with_roots = [&](const std::string &name, const FieldElem &center, const FieldElem &disc,
                          const FieldElem &denom) {
        auto root = sqrt_in_field(disc, ctx);
        if (!root)
            throw Error(ErrorKind::Precondition, "no solution in field Q(sqrt(" +
                                                     std::to_string(ctx.discriminant()) + ")) for " + name);
        std::vector<ParamSet> out;
        for (const FieldElem &sign : {FieldElem(1), FieldElem(-1)}) {
            ParamSet p = free_params;
            p[name] = (center + sign * *root) / denom;
            out.push_back(std::move(p));
        }
        return out;
    };
    switch (id) {
    case FamilyId::F3: {
        FieldElem d = param(free_params, "m") - param(free_params, "p");
        if (d.is_zero())
            violated("m != p");
        return with_roots("a", 0, FieldElem(-3) * pow(d, 4), 1);
    }
    case FamilyId::F5: {
        // 3 mu^2 + 3 (p-q) mu + (p-q)^2 = 0
        FieldElem d = param(free_params, "p") - param(free_params, "q");
        if (d.is_zero())
            violated("p != q");
        return with_roots("mu", FieldElem(-3) * d, FieldElem(-3) * d * d, 6);
    }
    default:
        return {free_params};
    }
}

namespace {

std::array<Conic, 3> stated_conics(FamilyId id, const ParamSet &params) {
    Conic q1 = standard_conic();
    switch (id) {
    case FamilyId::F1: {
        const FieldElem &u = param(params, "u");
        return std::array<Conic, 3>{q1, make(1, 0, 0, FieldElem(-2) * u, 0, -1),
                                                     make(u, 0, 0, 0, 2, -u)};
    }
    case FamilyId::F2: {
        const FieldElem &b = param(params, "b"), &c = param(params, "c");
        FieldElem c2 = c * c, c3 = c2 * c, c4 = c2 * c2, b2 = b * b, t = c2 - FieldElem(3) * b;
        // Both stated XY terms are kept, as printed.
        FieldElem xy = -(c * (c2 - FieldElem(12) * b) * t * t) - FieldElem(27) * c3 * (c2 - FieldElem(4) * b);
        Conic q3 = make(c2 * (FieldElem(7) * c4 - FieldElem(54) * b * c2 + FieldElem(108) * b2), -(b * t * t * t),
                        FieldElem(27) * c4, xy, 0,
                        c2 * (FieldElem(2) * c4 - FieldElem(27) * b * c3 + FieldElem(54) * b2));
        return std::array<Conic, 3>{q1, make(1, b, 0, c, 0, -1), q3};
    }
    case FamilyId::F3: {
        const FieldElem &m = param(params, "m"), &p = param(params, "p"), &a = param(params, "a");
        FieldElem d = m - p, s = m + p, third = Q(2, 3);
        FieldElem xx = s * pow(d, 3) / a + a * s / d - third * (m * m - FieldElem(8) * m * p + p * p);
        FieldElem zz = FieldElem(2) * a * pow(p, 3) / (FieldElem(3) * d) + FieldElem(2) * m * pow(p, 3) - pow(p, 4);
        FieldElem xy = -(FieldElem(2) * a / (FieldElem(3) * d) + FieldElem(2) * m + FieldElem(2) * p);
        FieldElem xz = -(FieldElem(2) * a * p * p / d + FieldElem(6) * m * p * p - FieldElem(2) * pow(p, 3));
        FieldElem yz = -(s * pow(d, 3) / a + a - third * (m * m + m * p + p * p));
        return std::array<Conic, 3>{q1, make(1, 0, a, 0, 0, -1), make(xx, 1, zz, xy, xz, yz)};
    }
    case FamilyId::F4: {
        const FieldElem &p = param(params, "p"), &r = param(params, "r");
        FieldElem d = p - r;
        Conic q2 = make(1, 0, -(d * d) / FieldElem(2), 0, 0, -1);
        Conic q3 = make(FieldElem(7) * p * p + FieldElem(2) * p * r - r * r, 2, FieldElem(2) * pow(p, 4),
                        FieldElem(-8) * p, FieldElem(-8) * pow(p, 3),
                        FieldElem(5) * p * p - FieldElem(2) * p * r + r * r);
        return std::array<Conic, 3>{q1, q2, q3};
    }
    case FamilyId::F5: {
        const FieldElem &p = param(params, "p"), &q = param(params, "q"), &mu = param(params, "mu");
        FieldElem d = p - q;
        Conic q2 = make(1, FieldElem(-3) * d * (p + mu), 0, FieldElem(3) * d, 0, -1);
        Conic q3 = make(FieldElem(3) * p - q + mu, pow(p, 3), 0, FieldElem(-3) * p * p, -1, q - mu);
        return std::array<Conic, 3>{q1, q2, q3};
    }
    case FamilyId::F6: {
        const FieldElem &p = param(params, "p"), &q = param(params, "q");
        FieldElem d = p - q;
        Conic q2 = make(1, 0, FieldElem(-3) * d * d, 0, 0, -1);
        Conic q3 = make(FieldElem(-8) * p + FieldElem(2) * q, 0, FieldElem(-3) * pow(p, 3), 3,
                        FieldElem(9) * p * p, -p - FieldElem(2) * q);
        return std::array<Conic, 3>{q1, q2, q3};
    }
    case FamilyId::Persson:
        return std::array<Conic, 3>{make(1, 1, -1, 0, 0, 0), make(2, 1, 0, 0, 2, 0), make(2, 1, 0, 0, -2, 0)};
    case FamilyId::Pokora:
        return std::array<Conic, 3>{make(-3, 0, 0, 1, 1, 1), make(0, -3, 0, 1, 1, 1), make(0, 0, -3, 1, 1, 1)};
    case FamilyId::Example2:
        // 4(X+Z)^2 - 6(XZ+Z^2) + 3Y^2
        return std::array<Conic, 3>{make(1, 1, -1, 0, 0, 0), make(4, 1, -1, 0, 0, 0), make(4, 3, -2, 0, 2, 0)};
    }
    throw Error(ErrorKind::Internal, "unknown family id");
}

} // namespace

Arrangement printed_arrangement(FamilyId id, const ParamSet &params, const FieldContext &ctx) {
    check_constraints(id, params);
    return make_arrangement(stated_conics(id, params), ctx);
}

std::string_view to_string(Route r) { return r == Route::Printed ? "stated" : "constructive"; }

std::optional<std::string> verification_failure(const FamilyInfo &info, const Classification &c,
                                                const FreenessReport &r) {
    if (c.tuple != info.expected)
        return "singularities " + c.tuple.to_string(true) + " instead of " + info.expected.to_string(true);
    if (c.pairs != info.expected_pairs)
        return "pair decomposition " + format_decomposition(c.pairs) + " instead of " +
               format_decomposition(info.expected_pairs);
    if (r.tau_local != r.tau_global)
        return "local tau " + std::to_string(r.tau_local) + " != global tau " + std::to_string(r.tau_global);
    if (r.free != info.expected_free)
        return std::string(r.free ? "free" : "not free") + " against expectation";
    if (info.expected_free && (r.tau_global != 19 || r.mdr != 2 || r.dpw_lhs != r.tau_global))
        return "free member without tau = 19, mdr = 2 and the DP-W equality";
    return std::nullopt;
}

Instantiation instantiate(FamilyId id, const ParamSet &params, const FieldContext &ctx, std::uint64_t seed) {
    const FamilyInfo &info = family_info(id);
    check_constraints(id, params);
    Instantiation out{id, params, {}, Route::Printed, {}, {}, {}};
    auto attempt = [&](const Arrangement &arr) -> std::optional<std::string> {
        try {
            Classification c = weak_combinatorics(arr, seed);
            FreenessReport r = freeness_report(arr, c);
            if (auto fail = verification_failure(info, c, r))
                return fail;
            out.arrangement = arr;
            out.classification = std::move(c);
            out.report = std::move(r);
            return std::nullopt;
        } catch (const Error &e) {
            if (e.kind() == ErrorKind::GenericityUnreachable)
                throw;
            return std::string(e.what());
        }
    };

    std::optional<std::string> fail;
    std::optional<Arrangement> printed;
    try {
        printed = printed_arrangement(id, params, ctx);
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::Validation)
            throw;
        fail = std::string(e.what());
    }
    if (printed)
        fail = attempt(*printed);
    if (!fail) {
        out.log.push_back(std::string(info.key) + ": stated equations verified");
        return out;
    }
    out.log.push_back(std::string(info.key) + ": stated equations failed verification (" + *fail + ")");
    std::optional<Conic> q3 = constructive_q3(id, params);
    if (!q3)
        throw Error(ErrorKind::Internal, "verification failed for " + std::string(info.key) + " at " +
                                             format_params(params) + ": " + *fail);
    std::array<Conic, 3> conics = stated_conics(id, params);
    out.log.push_back(std::string(info.key) + ": stated Q3 = " + conics[2].to_string());
    out.log.push_back(std::string(info.key) + ": constructive Q3 = " + q3->to_string());
    conics[2] = *q3;
    if (auto again = attempt(make_arrangement(conics, ctx)))
        throw Error(ErrorKind::Internal, "verification failed for " + std::string(info.key) + " at " +
                                             format_params(params) + ": " + *again);
    out.route = Route::Constructive;
    out.log.push_back(std::string(info.key) + ": constructive route verified");
    return out;
}

std::vector<KnownArrangement> known_arrangements() {
    std::vector<KnownArrangement> out;
    for (FamilyId id : {FamilyId::Persson, FamilyId::Pokora, FamilyId::Example2}) {
        const FamilyInfo &info = family_info(id);
        out.push_back({id, std::string(info.key), printed_arrangement(id, {}, FieldContext(1)), &info});
    }
    return out;
}

std::vector<FamilySample> family_samples(FamilyId id, int count) {
    std::vector<std::pair<ParamSet, FieldContext>> raw;
    FieldContext q(1), k(-3);
    auto add = [&](ParamSet p, FieldContext ctx) { raw.emplace_back(std::move(p), ctx); };
    switch (id) {
    case FamilyId::F1:
        for (const FieldElem &u : {Q(1, 2), Q(1), Q(-3), Q(2, 5), Q(-7, 3)})
            add({{"u", u}}, q);
        break;
    case FamilyId::F2:
        for (auto [b, c] : {std::pair{Q(1), Q(1)}, {Q(2), Q(3)}, {Q(-1), Q(2)}, {Q(0), Q(1)}, {Q(3, 2), Q(-1)}})
            add({{"b", b}, {"c", c}}, q);
        break;
    case FamilyId::F3:
        for (auto [m, p] : {std::pair{Q(1), Q(0)}, {Q(2), Q(1)}, {Q(3), Q(1)}, {Q(0), Q(-1, 2)}, {Q(-2), Q(1)}})
            for (auto &sol : solve_constraint(id, {{"m", m}, {"p", p}}, k)) {
                add(sol, k);
                break;
            }
        break;
    case FamilyId::F4:
        for (auto [p, r] : {std::pair{Q(0), Q(1)}, {Q(1), Q(-1)}, {Q(2), Q(1, 2)}, {Q(-1), Q(3)}, {Q(1, 3), Q(2)}})
            add({{"p", p}, {"r", r}}, q);
        break;
    case FamilyId::F5:
        for (auto [p, qq] : {std::pair{Q(0), Q(3)}, {Q(1), Q(0)}, {Q(-1), Q(1)}, {Q(2), Q(-1)}, {Q(1, 2), Q(2)}})
            for (auto &sol : solve_constraint(id, {{"p", p}, {"q", qq}}, k)) {
                add(sol, k);
                break;
            }
        break;
    case FamilyId::F6:
        for (auto [p, qq] : {std::pair{Q(0), Q(1)}, {Q(1), Q(-1)}, {Q(2), Q(3)}, {Q(-1), Q(1, 2)}, {Q(1, 2), Q(0)}})
            add({{"p", p}, {"q", qq}}, q);
        break;
    default:
        add({}, q);
        break;
    }
    std::vector<FamilySample> out;
    for (auto &[p, ctx] : raw) {
        if (static_cast<int>(out.size()) == count)
            break;
        out.push_back({std::move(p), ctx});
    }
    return out;
}

Conic build_tangent_conic(const Conic &q1, TangentKind kind, const TangentData &lines, const FieldElem &lambda) {
    if (lambda.is_zero())
        throw Error(ErrorKind::Precondition, "λ = 0");
    if (!q1.is_smooth())
        throw Error(ErrorKind::Precondition, "tangent construction needs a smooth conic");
    auto require_tangent = [&](const LinearForm &l) {
        if (!q1.is_tangent(l))
            throw Error(ErrorKind::Precondition, "line not tangent: " + format_line(l));
    };
    auto second = [&]() -> const LinearForm & {
        if (!lines.l2)
            throw Error(ErrorKind::Precondition, "second line missing");
        return *lines.l2;
    };
    require_tangent(lines.l1);
    ProjPoint contact = q1.contact_point(lines.l1);
    PairType want = PairType::A7P;
    Conic out;
    switch (kind) {
    case TangentKind::A5P:
        if (!eval_line(second(), contact).is_zero())
            throw Error(ErrorKind::Precondition, "line misses the contact point " + format_point(contact));
        want = PairType::A5P;
        out = q1 * lambda + Conic::from_lines(lines.l1, second());
        break;
    case TangentKind::T:
        if (eval_line(second(), contact).is_zero())
            throw Error(ErrorKind::Precondition, "chord passes through the contact point " + format_point(contact));
        want = PairType::T;
        out = q1 * lambda + Conic::from_lines(lines.l1, second());
        break;
    case TangentKind::TT:
        require_tangent(second());
        want = PairType::TT;
        out = q1 * lambda + Conic::from_lines(lines.l1, second());
        break;
    case TangentKind::A7P:
        out = q1 * lambda + Conic::from_lines(lines.l1, lines.l1);
        break;
    }
    if (!out.is_smooth())
        throw Error(ErrorKind::Precondition, "resulting conic singular: " + out.to_string());
    PairType got = pair_type_of(pair_pattern(q1, out));
    if (got != want)
        throw Error(ErrorKind::Precondition, "pair type mismatch: built " + std::string(to_string(got)) +
                                                 ", requested " + std::string(to_string(want)));
    return out;
}

PencilSample tangent_pencil_sample(std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    auto small = [&](int lo, int hi) { return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1)); };
    const FieldElem lambdas[] = {Q(1), Q(-1), Q(2), Q(-2), Q(1, 2), Q(3)};
    const char *names[] = {"A5P", "T", "TT", "A7P"};
    Conic q1 = standard_conic();
    // [t : t^2 : 1] on X^2 - YZ, tangent 2tX - Y - t^2 Z, chord (s+t)X - Y - stZ.
    auto tangent = [](long t) { return LinearForm{FieldElem(2 * t), FieldElem(-1), FieldElem(-t * t)}; };
    auto chord = [](long s, long t) { return LinearForm{FieldElem(s + t), FieldElem(-1), FieldElem(-s * t)}; };
    for (int draw = 0; draw < 500; ++draw) {
        std::array<Conic, 3> conics{q1, q1, q1};
        std::string desc = "Q1 = X^2 - YZ";
        try {
            for (int k = 1; k < 3; ++k) {
                auto kind = static_cast<TangentKind>(small(0, 3));
                long s = small(-3, 3), t = small(-3, 3), u = small(-3, 3);
                FieldElem lambda = lambdas[small(0, 5)];
                TangentData data{tangent(s), std::nullopt};
                if (kind == TangentKind::A5P)
                    data.l2 = chord(s, t);
                else if (kind == TangentKind::T)
                    data.l2 = chord(t, u);
                else if (kind == TangentKind::TT)
                    data.l2 = tangent(t);
                conics[static_cast<std::size_t>(k)] = build_tangent_conic(q1, kind, data, lambda);
                desc += "; Q" + std::to_string(k + 1) + " = " + names[static_cast<int>(kind)] + " with lambda " +
                        lambda.to_string() + " at " + std::to_string(s) + "," + std::to_string(t) + "," +
                        std::to_string(u);
            }
            Arrangement arr = make_arrangement(conics, FieldContext(1));
            weak_combinatorics(arr, seed);
            return {arr, desc};
        } catch (const Error &e) {
            if (e.kind() == ErrorKind::Internal || e.kind() == ErrorKind::GenericityUnreachable)
                throw;
        }
    }
    throw Error(ErrorKind::Internal, "no valid tangent-pencil arrangement in 500 draws");
}

nlohmann::json catalog_manifest() {
    using nlohmann::json;
    json families = json::array(), fixtures = json::array();
    for (const FamilyInfo &e : entries()) {
        json pairs = json::array();
        for (PairType p : e.expected_pairs)
            pairs.push_back(std::string(to_string(p)));
        json item{{"id", std::string(e.key)},
                  {"expected_tuple", e.expected.counts},
                  {"expected_pairs", pairs},
                  {"expected_free", e.expected_free},
                  {"notes", std::string(e.notes)}};
        if (e.is_family) {
            item["label"] = std::string(e.label);
            item["params"] = e.params;
            item["constraint"] = std::string(e.constraint);
            item["solved_param"] = e.solved_param ? json(*e.solved_param) : json(nullptr);
            item["field_discriminant"] = e.solved_param ? -3 : 1;
            item["constructive_route"] = e.id == FamilyId::F1 || e.id == FamilyId::F2;
            json samples = json::array();
            for (const auto &smp : family_samples(e.id, 3))
                samples.push_back({{"D", smp.context.discriminant()}, {"params", format_params_arg(smp.params)}});
            item["samples"] = samples;
            families.push_back(item);
        } else {
            fixtures.push_back(item);
        }
    }
    return {{"families", families}, {"fixtures", fixtures}};
}

} // namespace triconic
