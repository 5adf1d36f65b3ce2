#include "alcove/expected.hpp"

#include "alcove/combinat.hpp"
#include "alcove/errors.hpp"
#include "alcove/exitprob.hpp"
#include "alcove/quadrature.hpp"
#include "alcove/vecutil.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace alcove {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Everything fixed by (k, x): pair-difference values, the signed partitions
// as lists of difference indices, and the lattice parity.
struct SeriesCtx {
    int k = 0;
    int p = 0;            // pair slots per partition, floor(k/2)
    bool even_lattice = false; // odd k: multi-indices over {0, 2, 4, ...}
    double prefactor = 1.0;    // 2^{2p} / pi^{p+2}
    std::vector<double> diffs; // y_{ij} = x_i - x_j for i < j, lex order
    std::vector<std::vector<int>> part_diff; // [partition][slot] -> diff index
    std::vector<double> part_sign;           // (-1)^{crossings}
};

int diff_index(int k, int i, int j) {
    // lex position of (i, j), 1 <= i < j <= k
    return (i - 1) * (2 * k - i) / 2 + (j - i) - 1;
}

SeriesCtx make_ctx(const std::vector<double>& x, int k) {
    if (k < 2 || k > 8)
        throw invalid_input("expected-exit series supports 2 <= k <= 8");
    if (static_cast<int>(x.size()) != k)
        throw invalid_input("point dimension must equal k");

    SeriesCtx ctx;
    ctx.k = k;
    ctx.p = k / 2;
    ctx.even_lattice = (k % 2 != 0);
    ctx.prefactor = std::pow(4.0 / kPi, ctx.p) / (kPi * kPi);

    ctx.diffs.reserve(static_cast<size_t>(k) * (k - 1) / 2);
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) ctx.diffs.push_back(x[i - 1] - x[j - 1]);

    for (const PairPartition& part : pair_partitions(k)) {
        std::vector<int> slots;
        slots.reserve(part.pairs.size());
        for (const auto& pr : part.pairs)
            slots.push_back(diff_index(k, pr.first, pr.second));
        ctx.part_diff.push_back(std::move(slots));
        ctx.part_sign.push_back(crossing_number(part) % 2 == 0 ? 1.0 : -1.0);
    }
    return ctx;
}

// Lattice values {m0, m0 + 2, ...} up to limit, and the per-difference factor
// tables g[d][i] = sin(pi * vals[i] * y_d) / vals[i], with the l = 0 entry
// (even lattice only) set to pi * y_d / 2.
struct FactorTables {
    std::vector<long long> vals;
    std::vector<std::vector<double>> g; // [diff][value index]
};

FactorTables make_tables(const SeriesCtx& ctx, long long radius_sq) {
    FactorTables t;
    const long long lmax = static_cast<long long>(std::sqrt(static_cast<double>(radius_sq)));
    for (long long v = ctx.even_lattice ? 0 : 1; v * v <= radius_sq && v <= lmax + 1; v += 2)
        t.vals.push_back(v);
    t.g.resize(ctx.diffs.size());
    for (size_t d = 0; d < ctx.diffs.size(); ++d) {
        const double y = ctx.diffs[d];
        t.g[d].resize(t.vals.size());
        for (size_t i = 0; i < t.vals.size(); ++i) {
            const long long l = t.vals[i];
            t.g[d][i] = (l == 0) ? 0.5 * kPi * y
                                 : std::sin(kPi * static_cast<double>(l) * y) /
                                       static_cast<double>(l);
        }
    }
    return t;
}

// Enumerate multi-indices l in O^p with 0 < N(l) <= radius_sq, maintaining
// the per-partition running product across coordinates.  The callback
// receives N(l) and the partition-signed sum of completed products.
template <class Callback>
std::int64_t sum_lattice(const SeriesCtx& ctx, const FactorTables& t,
                         long long radius_sq, Callback&& cb) {
    const int p = ctx.p;
    const size_t nparts = ctx.part_diff.size();
    const size_t nvals = t.vals.size();

    std::vector<std::vector<double>> partial(static_cast<size_t>(p) + 1,
                                             std::vector<double>(nparts, 1.0));
    std::vector<size_t> idx(static_cast<size_t>(p), 0);
    std::vector<long long> sumsq(static_cast<size_t>(p) + 1, 0);
    std::int64_t points = 0;

    int s = 0;
    idx[0] = 0;
    while (s >= 0) {
        const size_t i = idx[static_cast<size_t>(s)];
        if (i >= nvals) { --s; if (s >= 0) ++idx[static_cast<size_t>(s)]; continue; }
        const long long v = t.vals[i];
        const long long nss = sumsq[static_cast<size_t>(s)] + v * v;
        if (nss > radius_sq) { --s; if (s >= 0) ++idx[static_cast<size_t>(s)]; continue; }

        const std::vector<double>& prev = partial[static_cast<size_t>(s)];
        std::vector<double>& cur = partial[static_cast<size_t>(s) + 1];
        for (size_t q = 0; q < nparts; ++q)
            cur[q] = prev[q] * t.g[ctx.part_diff[q][static_cast<size_t>(s)]][i];

        if (s + 1 == p) {
            if (nss > 0) {
                double w = 0.0;
                for (size_t q = 0; q < nparts; ++q) w += ctx.part_sign[q] * cur[q];
                cb(nss, w);
                ++points;
            }
            ++idx[static_cast<size_t>(s)];
        } else {
            sumsq[static_cast<size_t>(s) + 1] = nss;
            ++s;
            idx[static_cast<size_t>(s)] = 0;
        }
    }
    return points;
}

// ---- certified tail bound ------------------------------------------------
//
// Absolute tail of sum_{N(l) > R} (1/N) prod |g|:
// split by the set Z of zero coordinates (even lattice only; each zero
// factor is pi y / 2 <= pi / 2) and, within the q = p - |Z| nonzero
// coordinates, condition on the largest one m*: it satisfies m* >= sqrt(R/q),
// 1/N <= 1/m*^2, its own factor is 1/m*, and each remaining factor is at
// most sum_{m' <= m*} 1/m' <= 1 + ln(m*)/2 over either parity class.

// sum over the parity lattice {m0, m0+2, ...} of m^{-3} (1 + ln(m)/2)^pow
// for m >= lo, summed directly up to a cap and bounded by an integral past
// it (using that (1+ln(u)/2)^pow / sqrt(u) decreases for u >= 55, pow <= 3).
double tail_1d(double lo, int pow_, int m0) {
    long long start = static_cast<long long>(std::ceil(std::max(lo, static_cast<double>(m0))));
    if ((start - m0) % 2 != 0) ++start;
    const long long cap = 200000;
    double s = 0.0;
    for (long long m = start; m <= cap; m += 2) {
        const double md = static_cast<double>(m);
        s += std::pow(1.0 + 0.5 * std::log(md), pow_) / (md * md * md);
    }
    const double c = static_cast<double>(std::max(start, cap + 2));
    const double kc = std::pow(1.0 + 0.5 * std::log(c), pow_) / std::sqrt(c);
    s += kc / 3.0 * std::pow(c - 2.0, -1.5);
    return s;
}

double series_tail_bound(const SeriesCtx& ctx, long long radius_sq) {
    const int m0 = ctx.even_lattice ? 2 : 1;
    const int zmax = ctx.even_lattice ? ctx.p - 1 : 0;
    double total = 0.0;
    double binom = 1.0; // C(p, z)
    for (int z = 0; z <= zmax; ++z) {
        const int q = ctx.p - z;
        const double aq = std::sqrt(static_cast<double>(radius_sq) / q);
        const double tq = q * tail_1d(aq, q - 1, m0);
        total += binom * std::pow(0.5 * kPi, z) * tq;
        binom = binom * (ctx.p - z) / (z + 1);
    }
    return static_cast<double>(ctx.part_sign.size()) * ctx.prefactor * total;
}

void require_in_alcove_A(const std::vector<double>& x, int k) {
    const RootDatum d = make_datum(Family::A, k);
    if (!in_alcove(d, x))
        throw invalid_input("start point is not strictly inside the alcove");
}

} // namespace

ExpectationResult expected_exit_A(const std::vector<double>& x, int k,
                                  const LatticeControl& ctl) {
    SeriesCtx ctx = make_ctx(x, k);
    require_in_alcove_A(x, k);

    ExpectationResult out;
    long long radius_sq = 4096;
    for (;;) {
        FactorTables tables = make_tables(ctx, radius_sq);
        CompensatedSum acc;
        const std::int64_t points =
            sum_lattice(ctx, tables, radius_sq, [&](long long n, double w) {
                acc.add(w / static_cast<double>(n));
            });
        out.value = ctx.prefactor * acc.value();
        out.tail_bound = series_tail_bound(ctx, radius_sq);
        out.terms_used = points;
        if (out.tail_bound <= ctl.tol) break;
        // Estimated growth per doubling: points scale like R^{p/2}.
        const double next = static_cast<double>(points) * std::pow(2.0, 0.5 * ctx.p) + 64.0;
        if (next > static_cast<double>(ctl.max_points)) break;
        radius_sq *= 2;
    }
    return out;
}

double closed_form_expected(const std::vector<double>& x, int k) {
    if (k != 2 && k != 3)
        throw invalid_input("closed-form expected exit exists only for k = 2, 3");
    if (static_cast<int>(x.size()) != k)
        throw invalid_input("point dimension must equal k");
    // Defined on the closed alcove so boundary values can be checked.
    for (int i = 0; i + 1 < k; ++i)
        if (x[static_cast<size_t>(i)] < x[static_cast<size_t>(i) + 1])
            throw invalid_input("coordinates must be non-increasing");
    if (x.front() - x.back() > 1.0)
        throw invalid_input("coordinate spread must be at most 1");
    if (k == 2) {
        const double b = x[0] - x[1];
        return 0.5 * b * (1.0 - b);
    }
    return (x[0] - x[1]) * (x[1] - x[2]) * (1.0 - (x[0] - x[2]));
}

double eigen_level_F(const std::vector<double>& x, int k, int r) {
    SeriesCtx ctx = make_ctx(x, k);
    if (r <= 0) return 0.0;
    FactorTables tables = make_tables(ctx, r);
    CompensatedSum acc;
    sum_lattice(ctx, tables, r, [&](long long n, double w) {
        if (n == r) acc.add(w);
    });
    return std::pow(4.0 / kPi, ctx.p) * acc.value();
}

double survival_eigen_expansion(const std::vector<double>& x, int k, double t,
                                int r_max) {
    SeriesCtx ctx = make_ctx(x, k);
    require_in_alcove_A(x, k);
    if (!(t > 0.0)) throw invalid_input("horizon t must be positive");
    if (r_max < 1) throw invalid_input("r_max must be at least 1");

    std::vector<double> level(static_cast<size_t>(r_max) + 1, 0.0);
    FactorTables tables = make_tables(ctx, r_max);
    sum_lattice(ctx, tables, r_max,
                [&](long long n, double w) { level[static_cast<size_t>(n)] += w; });

    const double scale = std::pow(4.0 / kPi, ctx.p);
    CompensatedSum acc;
    for (int r = 1; r <= r_max; ++r)
        if (level[static_cast<size_t>(r)] != 0.0)
            acc.add(std::exp(-kPi * kPi * r * t) * scale * level[static_cast<size_t>(r)]);
    return acc.value();
}

ExpectationResult expected_via_survival_quadrature(const RootDatum& datum,
                                                   const Vec& x, double tol) {
    if (!(tol > 0.0)) throw invalid_input("tolerance must be positive");
    SeriesControl kernel_ctl;
    kernel_ctl.tol = std::min(1e-12, tol * 1e-4);
    auto surv = [&](double t) {
        SurvivalQuery q;
        q.datum = datum;
        q.x = x;
        q.t = t;
        q.ctl = kernel_ctl;
        return survival(q).value;
    };
    surv(1e-3); // validate the query early (dimension, alcove membership)

    // Horizon: extend until the survival probability is negligible next to
    // the requested tolerance (it decays exponentially for every family).
    double horizon = 0.5;
    double s_end = surv(horizon);
    while (s_end > 1e-4 * tol && horizon < 64.0) {
        horizon *= 1.6;
        s_end = surv(horizon);
    }

    ExpectationResult out;
    const double body = adaptive_simpson(surv, 0.0, horizon, 0.5 * tol);

    // Beyond the horizon, estimate the integral from the measured decay rate
    // and fold the whole estimate into the error bound.
    const double delta = 0.25 * horizon;
    const double s_mid = surv(horizon - delta);
    double tail = 0.0;
    if (s_end > 0.0 && s_mid > s_end) {
        const double rate = std::log(s_mid / s_end) / delta;
        tail = s_end / rate;
    } else if (s_end > 0.0) {
        tail = s_end * horizon; // no measurable decay; crude cap
    }
    out.value = body + tail;
    out.tail_bound = 0.5 * tol + 2.0 * tail + s_end * 1e-6;
    out.terms_used = 0;
    return out;
}

} // namespace alcove
