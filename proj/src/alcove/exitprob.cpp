#include "alcove/exitprob.hpp"

#include "alcove/combinat.hpp"
#include "alcove/errors.hpp"
#include "alcove/imagesum.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace alcove {

namespace {

// Pairwise and singlet factors of the partition sums, with honest error
// tracking: max_tail is the largest truncation bound among the factors.
struct FactorSet {
    int k = 0;
    std::vector<double> pair;    // packed upper triangle, 1-based (i < j)
    std::vector<double> singlet; // per-element factor, used when k is odd
    double max_abs = 1.0;        // max |factor| (for error propagation)
    double max_tail = 0.0;

    double& at(int i, int j) { return pair[static_cast<size_t>(i - 1) * k + (j - 1)]; }
    double get(int i, int j) const {
        return pair[static_cast<size_t>(i - 1) * k + (j - 1)];
    }
};

FactorSet make_factors(int k) {
    FactorSet f;
    f.k = k;
    f.pair.assign(static_cast<size_t>(k) * k, 0.0);
    f.singlet.assign(static_cast<size_t>(k) + 1, 1.0);
    return f;
}

void absorb(FactorSet& f, const KernelValue& v) {
    f.max_tail = std::max(f.max_tail, v.tail_bound);
    f.max_abs = std::max(f.max_abs, std::abs(v.value));
}

double dfact(int n) { // double factorial, n!!
    double r = 1.0;
    for (int m = n; m > 1; m -= 2) r *= m;
    return r;
}

// First-order propagation of per-factor errors through the signed partition
// sum: (number of partitions) x (factors per term) x (product of the other
// factors, bounded by max_abs^(pairs-1)) x (worst factor error).
double propagate_tail(const FactorSet& f) {
    const int k = f.k;
    const int pairs = k / 2;
    const double n_partitions = k % 2 == 0 ? dfact(k - 1) : dfact(k);
    const double others = std::pow(std::max(f.max_abs, 1.0), std::max(pairs - 1, 0));
    return n_partitions * (pairs + 1) * others * f.max_tail;
}

FactorSet factors_A(const SurvivalQuery& q) {
    const int k = q.datum.k;
    FactorSet f = make_factors(k);
    const bool odd = k % 2 == 1;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            const double d = q.x[i - 1] - q.x[j - 1];
            const KernelValue v = odd ? strip_exit_weighted(d, 2.0 * q.t, q.ctl)
                                      : strip_survival(d, 2.0 * q.t, q.ctl);
            f.at(i, j) = v.value;
            absorb(f, v);
        }
    return f; // odd-k singlet factor is 1: the leftover coordinate is free
}

FactorSet factors_chamber_A(const Vec& x, double t) {
    const int k = static_cast<int>(x.size());
    FactorSet f = make_factors(k);
    const double s = 2.0 * std::sqrt(t);
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) f.at(i, j) = std::erf((x[i - 1] - x[j - 1]) / s);
    return f;
}

FactorSet factors_C(const SurvivalQuery& q) {
    const int k = q.datum.k;
    FactorSet f = make_factors(k);
    const double block_tol = std::min(q.ctl.tol, 1e-9);
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            f.at(i, j) = block_survival_C2(q.x[i - 1], q.x[j - 1], q.t, block_tol);
            f.max_tail = std::max(f.max_tail, 2.0 * block_tol);
        }
    if (k % 2 == 1)
        for (int l = 1; l <= k; ++l) {
            // Leftover coordinate must stay inside the strip (0, 1/2).
            const KernelValue v = strip_survival(2.0 * q.x[l - 1], 4.0 * q.t, q.ctl);
            f.singlet[l] = v.value;
            absorb(f, v);
        }
    return f;
}

FactorSet factors_B(const SurvivalQuery& q) {
    const int k = q.datum.k;
    FactorSet f = make_factors(k);
    const double block_tol = std::min(q.ctl.tol, 1e-9);
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            f.at(i, j) = block_survival_B2(q.x[i - 1], q.x[j - 1], q.t, block_tol);
            f.max_tail = std::max(f.max_tail, 2.0 * block_tol);
        }
    if (k % 2 == 1)
        for (int l = 1; l <= k; ++l) {
            // Leftover coordinate must stay inside the strip (0, 1).
            const KernelValue v = strip_survival(q.x[l - 1], q.t, q.ctl);
            f.singlet[l] = v.value;
            absorb(f, v);
        }
    return f;
}

FactorSet factors_D(const SurvivalQuery& q) {
    const int k = q.datum.k;
    FactorSet f = make_factors(k);
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            const KernelValue a =
                strip_survival(q.x[i - 1] - q.x[j - 1], 2.0 * q.t, q.ctl);
            const KernelValue b =
                strip_survival(q.x[i - 1] + q.x[j - 1], 2.0 * q.t, q.ctl);
            f.at(i, j) = a.value * b.value;
            absorb(f, a);
            absorb(f, b);
        }
    return f; // odd-k leftover coordinate is unconstrained: factor 1
}

FactorSet build_factors(const SurvivalQuery& q) {
    switch (q.datum.family) {
    case Family::A: return factors_A(q);
    case Family::B: return factors_B(q);
    case Family::C: return factors_C(q);
    case Family::D: return factors_D(q);
    case Family::G2: break;
    }
    throw invalid_input("partition factors: unsupported family");
}

// Evaluate the signed partition sum over the prepared factors.
double partition_sum_value(const FactorSet& f) {
    CompensatedSum sum;
    for (const auto& part : pair_partitions(f.k)) {
        double term = part.singleton == 0 ? 1.0 : f.singlet[part.singleton];
        for (auto [i, j] : part.pairs) term *= f.get(i, j);
        sum.add(crossing_number(part) % 2 == 0 ? term : -term);
    }
    return sum.value();
}

// Evaluate the same sum through Pfaffians: directly for even k, and as the
// signed singlet expansion sum_l (-1)^(l+1) singlet_l Pf(minor without l)
// for odd k.
double pfaffian_value(const FactorSet& f) {
    const int k = f.k;
    SkewMatrix m(k);
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) m.set(i - 1, j - 1, f.get(i, j));
    if (k % 2 == 0) return pfaffian(m);
    CompensatedSum sum;
    for (int l = 1; l <= k; ++l) {
        std::vector<int> keep;
        keep.reserve(k - 1);
        for (int i = 0; i < k; ++i)
            if (i != l - 1) keep.push_back(i);
        const double minor = pfaffian_submatrix(m, keep);
        sum.add((l % 2 == 1 ? 1.0 : -1.0) * f.singlet[l] * minor);
    }
    return sum.value();
}

SurvivalResult finish(double raw, double tail, std::string method) {
    SurvivalResult r;
    r.raw_value = raw;
    r.value = std::min(1.0, std::max(0.0, raw));
    r.tail_bound = tail;
    r.method = std::move(method);
    return r;
}

SurvivalResult survival_G2(const SurvivalQuery& q) {
    // Signed three-term product over the orthogonal short/long root pairs:
    // the inclusion-exclusion of the triangle through two larger triangles.
    static const std::vector<Vec> shorts = {{1, -1, 0}, {-1, 0, 1}, {0, -1, 1}};
    static const std::vector<Vec> longs = {{-1, -1, 2}, {1, -2, 1}, {-2, 1, 1}};
    static const double signs[3] = {1.0, -1.0, 1.0};
    CompensatedSum sum;
    double tail = 0.0, max_abs = 0.0;
    for (int a = 0; a < 3; ++a) {
        const KernelValue s = strip_survival(dot(q.x, shorts[a]), 2.0 * q.t, q.ctl);
        const KernelValue l = strip_survival(dot(q.x, longs[a]), 6.0 * q.t, q.ctl);
        sum.add(signs[a] * s.value * l.value);
        tail = std::max(tail, std::max(s.tail_bound, l.tail_bound));
        max_abs = std::max({max_abs, std::abs(s.value), std::abs(l.value)});
    }
    return finish(sum.value(), 6.0 * std::max(max_abs, 1.0) * tail, "signed-product");
}

void validate_query(const SurvivalQuery& q) {
    if (static_cast<int>(q.x.size()) != q.datum.ambient)
        throw invalid_input("survival: point has wrong dimension");
    if (!(q.t >= 0.0)) throw invalid_input("survival: t must be >= 0");
    if (!in_alcove(q.datum, q.x))
        throw invalid_input("survival: start point must lie strictly inside the alcove");
}

} // namespace

SurvivalResult survival(const SurvivalQuery& q) {
    validate_query(q);
    if (q.datum.family == Family::G2) return survival_G2(q);
    if (q.t == 0.0) return finish(1.0, 0.0, "pfaffian");
    const FactorSet f = build_factors(q);
    return finish(pfaffian_value(f), propagate_tail(f), "pfaffian");
}

SurvivalResult survival_partition_sum(const SurvivalQuery& q) {
    validate_query(q);
    if (q.datum.family == Family::G2) return survival_G2(q);
    if (q.t == 0.0) return finish(1.0, 0.0, "partition-sum");
    if (q.datum.k > 12)
        throw invalid_input("survival_partition_sum: k must be <= 12");
    const FactorSet f = build_factors(q);
    return finish(partition_sum_value(f), propagate_tail(f), "partition-sum");
}

SurvivalResult chamber_survival_A(const Vec& x, double t, const SeriesControl& ctl) {
    (void)ctl; // the erf factors are closed-form; kept for interface symmetry
    const int k = static_cast<int>(x.size());
    if (k < 2) throw invalid_input("chamber_survival_A: need at least two coordinates");
    for (int i = 0; i + 1 < k; ++i)
        if (!(x[i] > x[i + 1]))
            throw invalid_input("chamber_survival_A: coordinates must strictly decrease");
    if (!(t >= 0.0)) throw invalid_input("chamber_survival_A: t must be >= 0");
    if (t == 0.0) return finish(1.0, 0.0, "pfaffian");
    const FactorSet f = factors_chamber_A(x, t);
    return finish(pfaffian_value(f), propagate_tail(f), "pfaffian");
}

SurvivalResult survival_A_lattice_sum(const SurvivalQuery& q, int max_shell) {
    validate_query(q);
    if (q.datum.family != Family::A || q.datum.k % 2 == 0)
        throw invalid_input("survival_A_lattice_sum: defined for odd-k family A");
    if (max_shell < 1) throw invalid_input("survival_A_lattice_sum: shell must be >= 1");
    if (q.t == 0.0) return finish(1.0, 0.0, "partition-sum");

    const int k = q.datum.k;
    FactorSet f = make_factors(k);
    double trunc_tail = 0.0;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            const double d = q.x[i - 1] - q.x[j - 1];
            // Signed sum over avoidance levels: level n carries sign -1 when
            // n > 0, +1 otherwise, matching the lattice sign convention.
            CompensatedSum s;
            for (int n = -max_shell; n <= max_shell; ++n) {
                const double term = hit_survival(d, static_cast<double>(n), 2.0 * q.t);
                s.add(n > 0 ? -term : term);
            }
            f.at(i, j) = s.value();
            // Levels beyond the shell pair up into erfc-sized differences.
            trunc_tail = std::max(
                trunc_tail, 2.0 * std::erfc((max_shell - d) / (2.0 * std::sqrt(q.t))));
            f.max_abs = std::max(f.max_abs, std::abs(s.value()));
        }
    f.max_tail = std::max(f.max_tail, trunc_tail);
    return finish(partition_sum_value(f), propagate_tail(f), "partition-sum");
}

} // namespace alcove
