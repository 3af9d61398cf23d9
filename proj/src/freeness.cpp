#include "triconic/freeness.hpp"

#include "triconic/error.hpp"

#include <future>
#include <map>

namespace triconic {

namespace {

// a + b sqrt(D)
struct ZSqrt {
    mpz_class a, b;
    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
};

void mul_into(ZSqrt &out, const ZSqrt &x, const ZSqrt &y, long d, mpz_class &tmp) {
    out.a = x.a * y.a;
    tmp = x.b * y.b;
    out.a += tmp * d;
    out.b = x.a * y.b;
    out.b += x.b * y.a;
}

using ZRow = std::vector<ZSqrt>;

ZRow scale_to_integers(const std::vector<FieldElem> &row) {
    mpz_class l(1);
    for (const FieldElem &x : row) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.r().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.s().get_den_mpz_t());
    }
    ZRow out(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
        out[i].a = row[i].r().get_num() * (l / row[i].r().get_den());
        out[i].b = row[i].s().get_num() * (l / row[i].s().get_den());
    }
    return out;
}

void remove_content(ZRow &row, std::size_t from) {
    mpz_class g(0);
    for (std::size_t i = from; i < row.size(); ++i) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[i].a.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[i].b.get_mpz_t());
        if (g == 1)
            return;
    }
    if (sgn(g) == 0)
        return;
    for (std::size_t i = from; i < row.size(); ++i) {
        mpz_divexact(row[i].a.get_mpz_t(), row[i].a.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(row[i].b.get_mpz_t(), row[i].b.get_mpz_t(), g.get_mpz_t());
    }
}

std::vector<std::vector<FieldElem>> multiplication_rows(const std::array<TernaryForm, 3> &gens, int source_degree,
                                                        MonomialOrder order) {
    std::vector<Exponent> target = monomial_basis(source_degree + gens[0].degree(), order);
    std::map<Exponent, std::size_t> column;
    for (std::size_t i = 0; i < target.size(); ++i)
        column[target[i]] = i;
    std::vector<std::vector<FieldElem>> rows;
    for (const Exponent &m : monomial_basis(source_degree, order)) {
        for (const TernaryForm &g : gens) {
            std::vector<FieldElem> row(target.size());
            for (const auto &[e, c] : g.terms())
                row[column.at({e[0] + m[0], e[1] + m[1], e[2] + m[2]})] = c;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace

namespace {

// x * conj(p) / N(p), exact by construction at every call site.
void divide_exact(ZSqrt &x, const ZSqrt &p, const mpz_class &norm, long d, ZSqrt &scratch, mpz_class &tmp) {
    if (sgn(p.b) == 0) {
        if (p.a != 1) {
            mpz_divexact(x.a.get_mpz_t(), x.a.get_mpz_t(), p.a.get_mpz_t());
            mpz_divexact(x.b.get_mpz_t(), x.b.get_mpz_t(), p.a.get_mpz_t());
        }
        return;
    }
    mul_into(scratch, x, ZSqrt{p.a, -p.b}, d, tmp);
    mpz_divexact(x.a.get_mpz_t(), scratch.a.get_mpz_t(), norm.get_mpz_t());
    mpz_divexact(x.b.get_mpz_t(), scratch.b.get_mpz_t(), norm.get_mpz_t());
}

} // namespace

std::size_t exact_rank(const std::vector<std::vector<FieldElem>> &input, const FieldContext &ctx) {
    long d = ctx.discriminant();
    std::vector<ZRow> rows;
    rows.reserve(input.size());
    for (const auto &r : input) {
        rows.push_back(scale_to_integers(r));
        remove_content(rows.back(), 0);
    }
    std::size_t cols = rows.empty() ? 0 : rows[0].size();

    // Bareiss elimination. Entries of a row brought to step k are k-minors of
    // the scaled input, so dividing by the previous pivot is exact. A row
    // whose pivot-column entry is zero would only be scaled by p_k / p_(k-1);
    // those scalings telescope, so they are applied lazily in one step.
    std::vector<ZSqrt> pivots{ZSqrt{1, 0}};
    std::vector<mpz_class> norms{mpz_class(1)};
    std::vector<std::size_t> level(rows.size(), 0);
    mpz_class tmp;
    ZSqrt t1, t2, scratch;

    auto catch_up = [&](std::size_t i, std::size_t from_col, std::size_t to) {
        std::size_t l = level[i];
        if (l == to)
            return;
        for (std::size_t j = from_col; j < cols; ++j) {
            ZSqrt &x = rows[i][j];
            if (x.is_zero())
                continue;
            mul_into(t1, x, pivots[to], d, tmp);
            divide_exact(t1, pivots[l], norms[l], d, scratch, tmp);
            std::swap(x, t1);
        }
        level[i] = to;
    };

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rows.size();
        std::size_t best = 0;
        for (std::size_t i = rank; i < rows.size(); ++i) {
            const ZSqrt &x = rows[i][c];
            if (x.is_zero())
                continue;
            std::size_t size = mpz_sizeinbase(x.a.get_mpz_t(), 2) + mpz_sizeinbase(x.b.get_mpz_t(), 2);
            if (pivot == rows.size() || size < best) {
                pivot = i;
                best = size;
            }
        }
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[rank]);
        std::swap(level[pivot], level[rank]);
        std::size_t k = pivots.size() - 1; // current step count
        catch_up(rank, c, k);
        const ZRow &p = rows[rank];
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero())
                continue;
            catch_up(i, c, k);
            ZRow &row = rows[i];
            ZSqrt factor = row[c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (row[j].is_zero() && p[j].is_zero())
                    continue;
                mul_into(t1, p[c], row[j], d, tmp);
                if (!p[j].is_zero()) {
                    mul_into(t2, factor, p[j], d, tmp);
                    t1.a -= t2.a;
                    t1.b -= t2.b;
                }
                divide_exact(t1, pivots[k], norms[k], d, scratch, tmp);
                std::swap(row[j], t1);
            }
            row[c] = ZSqrt{};
            level[i] = k + 1;
        }
        pivots.push_back(p[c]);
        norms.push_back(p[c].a * p[c].a - d * p[c].b * p[c].b);
        ++rank;
    }
    return rank;
}

SexticForm sextic_of(const Arrangement &arr) { return {arr.sextic(), arr.context()}; }

std::array<TernaryForm, 3> jacobian_partials(const SexticForm &f) {
    if (f.f.is_zero())
        throw Error(ErrorKind::Precondition, "partials of the zero form");
    return {f.f.partial(0), f.f.partial(1), f.f.partial(2)};
}

int syzygy_kernel_dim(const SexticForm &f, int r, MonomialOrder order) {
    if (r < 0 || r > f.f.degree() - 2)
        throw Error(ErrorKind::Precondition,
                    "syzygy degree " + std::to_string(r) + " outside 0.." + std::to_string(f.f.degree() - 2) +
                        " would count Koszul relations");
    auto rows = multiplication_rows(jacobian_partials(f), r, order);
    return static_cast<int>(rows.size() - exact_rank(rows, f.context));
}

int milnor_algebra_dim(const SexticForm &f, int k, MonomialOrder order) {
    auto partials = jacobian_partials(f);
    int source = k - partials[0].degree();
    if (source < 0)
        return monomial_count(k);
    auto rows = multiplication_rows(partials, source, order);
    return monomial_count(k) - static_cast<int>(exact_rank(rows, f.context));
}

GlobalTau global_tau(const SexticForm &f, MonomialOrder order) {
    std::array<std::future<int>, 4> jobs;
    for (std::size_t i = 0; i < 4; ++i)
        jobs[i] = std::async(std::launch::async, [&f, order, k = kStabilizationDegrees[i]] {
            return milnor_algebra_dim(f, k, order);
        });
    GlobalTau out{};
    for (std::size_t i = 0; i < 4; ++i)
        out.hilbert[i] = jobs[i].get();
    for (int h : out.hilbert)
        if (h != out.hilbert[0])
            throw Error(ErrorKind::Internal, "Hilbert function not stabilized at degrees 12..15: " +
                                                 std::to_string(out.hilbert[0]) + ", " + std::to_string(out.hilbert[1]) +
                                                 ", " + std::to_string(out.hilbert[2]) + ", " +
                                                 std::to_string(out.hilbert[3]));
    out.tau = out.hilbert[0];
    return out;
}

std::optional<int> mdr(const SexticForm &f, MonomialOrder order) {
    for (int r = 1; r <= 2; ++r)
        if (syzygy_kernel_dim(f, r, order) > 0)
            return r;
    return std::nullopt;
}

int dpw_lhs(int d, int d1) { return (d - 1) * (d - 1) - d1 * (d - d1 - 1); }

bool dpw_check(int d, int d1, int tau) {
    if (d1 < 0 || 2 * d1 > d - 1)
        throw Error(ErrorKind::Precondition, "DP-W inapplicable: mdr " + std::to_string(d1) + " exceeds (d - 1)/2");
    return dpw_lhs(d, d1) == tau;
}

FreenessReport freeness_report(const Arrangement &arr, const Classification &local, MonomialOrder order) {
    SexticForm f = sextic_of(arr);
    auto tau_job = std::async(std::launch::async, [&] { return global_tau(f, order); });
    FreenessReport out;
    out.d = f.f.degree();
    out.mdr = mdr(f, order);
    GlobalTau g = tau_job.get();
    out.tau_global = g.tau;
    out.hilbert = g.hilbert;
    out.tau_local = local.tau_local;
    if (out.tau_local != out.tau_global)
        throw Error(ErrorKind::Internal, "local tau " + std::to_string(out.tau_local) + " != global tau " +
                                             std::to_string(out.tau_global));
    if (out.mdr) {
        out.dpw_lhs = dpw_lhs(out.d, *out.mdr);
        out.free = dpw_check(out.d, *out.mdr, out.tau_global);
        if (out.free)
            out.d2 = out.d - 1 - *out.mdr;
    } else {
        out.note = "not free (mdr exceeds free range): a free sextic needs mdr <= 2";
    }
    return out;
}

FreenessReport freeness_report(const Arrangement &arr, std::uint64_t seed, MonomialOrder order) {
    return freeness_report(arr, weak_combinatorics(arr, seed), order);
}

} // namespace triconic
