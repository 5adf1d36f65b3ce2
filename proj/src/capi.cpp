// C boundary: translates between the public C header and the C++ core.
// Every entry point catches library exceptions and maps them to status
// codes, storing the message in a per-thread slot for alc_last_error().
#include "alcove.h"

#include "alcove/debruijn.hpp"
#include "alcove/eigenfn.hpp"
#include "alcove/errors.hpp"
#include "alcove/exitprob.hpp"
#include "alcove/expected.hpp"
#include "alcove/imagesum.hpp"
#include "alcove/kernels1d.hpp"
#include "alcove/montecarlo.hpp"
#include "alcove/rootsys.hpp"
#include "alcove/vecutil.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

using namespace alcove;

struct alc_datum {
    RootDatum d;
};

namespace {

thread_local std::string g_last_error;

alc_status fail(alc_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

template <typename F>
alc_status wrap(F&& body) {
    try {
        return body();
    } catch (const invalid_input& e) {
        return fail(ALC_INVALID_INPUT, e.what());
    } catch (const unsupported& e) {
        return fail(ALC_UNSUPPORTED, e.what());
    } catch (const std::exception& e) {
        return fail(ALC_INTERNAL_ERROR, e.what());
    } catch (...) {
        return fail(ALC_INTERNAL_ERROR, "unknown error");
    }
}

Vec to_vec(const double* x, int n) {
    return Vec(x, x + n);
}

void put_method(alc_result* out, const char* m) {
    std::snprintf(out->method, sizeof(out->method), "%s", m);
}

alc_status need(bool ok, const char* what) {
    return ok ? ALC_OK : fail(ALC_INVALID_INPUT, what);
}

alc_status check_xn(const alc_datum* d, const double* x, int n) {
    if (d == nullptr) return fail(ALC_INVALID_INPUT, "null datum handle");
    if (x == nullptr) return fail(ALC_INVALID_INPUT, "null coordinate pointer");
    if (n != d->d.ambient)
        return fail(ALC_INVALID_INPUT,
                    "coordinate count does not match the family dimension");
    return ALC_OK;
}

SimConfig to_sim(const alc_mc_config* cfg) {
    SimConfig s;
    if (cfg != nullptr) {
        s.paths = cfg->paths;
        s.dt = cfg->dt;
        s.horizon = cfg->horizon;
        s.seed = cfg->seed;
        s.workers = cfg->workers;
    }
    return s;
}

void fill_mc(alc_result* out, const MCEstimate& e) {
    out->value = e.mean;
    out->error_bound = e.std_error;
    out->exited_fraction = e.exited_fraction;
    out->terms = e.paths;
    put_method(out, "mc");
}

// ---------------------------------------------------------------------------
// Validation suites.

struct CheckList {
    std::string report;
    int total = 0;
    int failures = 0;

    void check(const std::string& name, bool ok, const std::string& detail) {
        ++total;
        if (!ok) ++failures;
        report += (ok ? "PASS " : "FAIL ") + name + ": " + detail + "\n";
    }
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

void suite_kernels(CheckList& c) {
    const double xs[] = {0.1, 0.3, 0.5, 0.7, 0.9};
    const double ts[] = {0.05, 0.25, 1.0};
    double worst_phi = 0.0, worst_psi = 0.0;
    for (double x : xs)
        for (double t : ts) {
            worst_phi = std::max(worst_phi,
                                 std::abs(strip_survival_theta(x, t).value -
                                          strip_survival_images(x, t).value));
            worst_psi = std::max(worst_psi,
                                 std::abs(strip_exit_weighted_theta(x, t).value -
                                          strip_exit_weighted_images(x, t).value));
        }
    c.check("strip survival dual representations", worst_phi < 1e-10,
            "max gap " + num(worst_phi));
    c.check("weighted exit dual representations", worst_psi < 1e-10,
            "max gap " + num(worst_psi));

    double worst_sym = 0.0;
    for (double x : xs)
        worst_sym = std::max(worst_sym, std::abs(strip_survival(x, 0.2).value -
                                                 strip_survival(1 - x, 0.2).value));
    c.check("strip survival reflection symmetry", worst_sym < 1e-12,
            "max gap " + num(worst_sym));

    const bool exact_limits = strip_survival(0.0, 0.3).value == 0.0 &&
                              strip_survival(1.0, 0.3).value == 0.0 &&
                              strip_survival(0.4, 0.0).value == 1.0;
    c.check("strip survival exact limits", exact_limits,
            "walls give 0, zero horizon gives 1");

    const double gap = std::abs(strip_exit_weighted(0.3, 50.0).value -
                                strip_survival(0.3, 50.0).value - 2 * 0.3);
    c.check("late-time weighted exit limit", gap < 1e-10,
            "psi - phi -> 2x, gap " + num(gap));

    bool mono = true;
    double prev = late_upper_exit(0.4, 1e-4).value;
    for (double t2 : {0.01, 0.05, 0.2, 1.0}) {
        const double cur = late_upper_exit(0.4, t2).value;
        mono = mono && cur <= prev + 1e-12;
        prev = cur;
    }
    c.check("late upper exit monotone in the clock", mono,
            "event shrinks as t2 grows");
}

void suite_survival(CheckList& c) {
    struct Point {
        Family fam;
        int k;
        Vec x;
        double t;
    };
    const Point pts[] = {
        {Family::C, 2, {0.35, 0.15}, 0.05},
        {Family::C, 3, {0.4, 0.25, 0.1}, 0.03},
        {Family::B, 3, {0.6, 0.35, 0.15}, 0.04},
        {Family::D, 4, {0.55, 0.35, 0.2, 0.05}, 0.025},
        {Family::A, 4, {0.275, 0.075, -0.125, -0.225}, 0.05},
    };
    double worst = 0.0;
    for (const Point& p : pts) {
        SurvivalQuery q{make_datum(p.fam, p.k), p.x, p.t, {}};
        worst = std::max(worst, std::abs(survival(q).value -
                                         survival_partition_sum(q).value));
    }
    c.check("pfaffian path equals partition sum", worst < 1e-10,
            "max gap " + num(worst) + " over 5 families");

    {
        const RootDatum d = make_datum(Family::A, 3);
        const Vec x{0.26666666666666666, -0.03333333333333333, -0.23333333333333334};
        double w = 0.0;
        for (double t : {0.05, 0.25}) {
            SurvivalQuery q{d, x, t, {}};
            w = std::max(w, std::abs(survival(q).value -
                                     survival_via_images(d, x, t).value));
        }
        c.check("triangle formula vs image oracle", w < 1e-6, "max gap " + num(w));
    }
    {
        const RootDatum d = make_datum(Family::G2, 2);
        const Vec x = alcove_barycenter(d);
        double w = 0.0;
        for (double t : {0.02, 0.1}) {
            SurvivalQuery q{d, x, t, {}};
            w = std::max(w, std::abs(survival(q).value -
                                     survival_via_images(d, x, t).value));
        }
        c.check("hexagonal-family formula vs image oracle", w < 1e-6,
                "max gap " + num(w));
    }
    {
        SurvivalQuery q{make_datum(Family::C, 2), {0.35, 0.15}, 0.0, {}};
        bool mono = survival(q).value == 1.0;
        double prev = 1.0;
        for (double t : {0.02, 0.05, 0.1, 0.2}) {
            q.t = t;
            const double cur = survival(q).value;
            mono = mono && cur <= prev + 1e-12;
            prev = cur;
        }
        c.check("survival starts at 1 and decreases in t", mono, "grid of 5 horizons");
    }
    {
        const double got = chamber_survival_A({0.3, -0.3}, 0.1).value;
        const double want = std::erf(0.6 / (2 * std::sqrt(0.1)));
        c.check("two-walker chamber closed form", std::abs(got - want) < 1e-12,
                "erf of the gap, diff " + num(std::abs(got - want)));
    }
}

void suite_expected(CheckList& c) {
    {
        const ExpectationResult r = expected_exit_A({0.25, -0.25}, 2);
        c.check("interval expectation", std::abs(r.value - 0.125) < 1e-8,
                "series vs 1/8, diff " + num(std::abs(r.value - 0.125)));
    }
    {
        const ExpectationResult r = expected_exit_A({0.6, 0.3, 0.1}, 3);
        c.check("triangle expectation", std::abs(r.value - 0.03) < 1e-8,
                "series vs 3/100, diff " + num(std::abs(r.value - 0.03)));
    }
    {
        uint64_t rng = 424242;
        const RootDatum d = make_datum(Family::A, 3);
        const auto verts = alcove_vertices(d);
        double worst = 0.0;
        for (int i = 0; i < 5; ++i) {
            const Vec x = sample_alcove_interior(d, verts, rng);
            const std::vector<double> xv(x.begin(), x.end());
            worst = std::max(worst, std::abs(expected_exit_A(xv, 3).value -
                                             closed_form_expected(xv, 3)));
        }
        c.check("triangle series vs closed form", worst < 1e-8,
                "5 random starts, max diff " + num(worst));
    }
    {
        const RootDatum d = make_datum(Family::A, 2);
        const ExpectationResult r =
            expected_via_survival_quadrature(d, {0.25, -0.25}, 1e-6);
        c.check("time-integral route", std::abs(r.value - 0.125) < 1e-4,
                "quadrature vs 1/8, diff " + num(std::abs(r.value - 0.125)));
    }
}

void suite_eigen(CheckList& c) {
    struct Case {
        Family fam;
        int k;
        Vec rho;
    };
    const Case cases[] = {
        {Family::A, 3, {1, 0, -1}},
        {Family::C, 2, {2, 1}},
        {Family::G2, 2, {-1, -2, 3}},
    };
    double worst_wall = 0.0;
    for (const Case& cs : cases) {
        const RootDatum d = make_datum(cs.fam, cs.k);
        const WeylGroup w = weyl_group(d);
        const auto verts = alcove_vertices(d);
        uint64_t rng = 777;
        const int nwalls = static_cast<int>(alcove_walls(d).size());
        for (int wall = 0; wall < nwalls; ++wall) {
            const Vec x = sample_alcove_facet(d, verts, wall, rng);
            worst_wall = std::max(worst_wall,
                                  std::abs(dirichlet_real_form(w, cs.rho, x)));
        }
    }
    c.check("principal eigenfunction vanishes on every wall", worst_wall < 1e-10,
            "3 families, max wall value " + num(worst_wall));

    {
        const RootDatum d = make_datum(Family::C, 2);
        const WeylGroup w = weyl_group(d);
        const Vec p{2, 1};
        const Vec x{0.31, 0.17};
        const double h = 1e-3;
        const double f0 = dirichlet_real_form(w, p, x);
        double lap = 0.0;
        for (int i = 0; i < 2; ++i) {
            Vec xp = x, xm = x;
            xp[static_cast<size_t>(i)] += h;
            xm[static_cast<size_t>(i)] -= h;
            lap += dirichlet_real_form(w, p, xp) - 2 * f0 +
                   dirichlet_real_form(w, p, xm);
        }
        lap /= h * h;
        const double lam = eigenvalue_of(d, p);
        const double rel = std::abs(lap / f0 - lam) / std::abs(lam);
        c.check("finite differences reproduce the eigenvalue", rel < 1e-4,
                "relative gap " + num(rel));
    }
    {
        const RootDatum d = make_datum(Family::C, 2);
        const WeylGroup w = weyl_group(d);
        const auto verts = alcove_vertices(d);
        uint64_t rng = 99;
        double lo = 1e300, hi = -1e300;
        for (int i = 0; i < 10; ++i) {
            const Vec x = sample_alcove_interior(d, verts, rng);
            const double r =
                dirichlet_real_form(w, {2, 1}, x) / trig_product_H(d, x);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        c.check("principal eigenfunction proportional to the sine product",
                hi - lo < 1e-9 * std::abs(lo), "ratio spread " + num(hi - lo));
    }
    {
        const RootDatum d = make_datum(Family::C, 2);
        const WeylGroup w = weyl_group(d);
        const HotSpotsReport r = hot_spots_check(w, Vec{1, 0}, 2000, 4242);
        c.check("interior stays below the boundary supremum", r.pass,
                "margin " + num(r.margin));
    }
    {
        const RootDatum d = make_datum(Family::C, 3);
        const WeylGroup w = weyl_group(d);
        uint64_t rng = 5150;
        bool all_real = true;
        for (int i = 0; i < 5; ++i) {
            const Vec p = random_dominant_weight(d, false, 4, rng);
            all_real = all_real && weight_realness(w, p).real;
        }
        c.check("mirror-closed family weights are always real", all_real,
                "5 random dominant weights");
    }
}

void suite_debruijn(CheckList& c) {
    {
        const std::vector<TestFn1D> fs{gaussian_fn(0.0, 1.0), gaussian_fn(0.5, 1.0)};
        const LhsResult l = lhs_alternating_integral(fs, {});
        const double r = rhs_even(fs, {});
        c.check("two-factor gaussian identity", std::abs(l.value - r) < 1e-6,
                "|lhs-rhs| " + num(std::abs(l.value - r)));
    }
    {
        const TestFn1D f = gaussian_fn(-0.2, 0.8);
        const TestFn1D g = indicator_fn(0.1, 0.9);
        const double a = alternating_band_integral(f, g, {});
        const double b = alternating_band_integral(g, f, {});
        const double h1 = tail_corrected_sign_integral(f, g, {});
        const double h2 = tail_corrected_sign_integral(g, f, {});
        c.check("integral kernels are antisymmetric",
                std::abs(a + b) < 1e-12 && std::abs(h1 + h2) < 1e-12,
                "swap gaps " + num(std::abs(a + b)) + ", " + num(std::abs(h1 + h2)));
    }
    {
        const std::vector<TestFn1D> fs{indicator_fn(-0.6, 0.2), indicator_fn(-0.1, 0.8)};
        const double r = rhs_even(fs, {});
        c.check("indicator battery in closed form", std::abs(r + 0.47) < 1e-12,
                "rhs vs -0.47, diff " + num(std::abs(r + 0.47)));
    }
}

void suite_mc(CheckList& c) {
    const RootDatum d = make_datum(Family::C, 2);
    const Vec x{0.35, 0.15};
    {
        SimConfig cfg;
        cfg.paths = 4000;
        cfg.dt = 1e-3;
        cfg.seed = 31;
        cfg.workers = 1;
        const MCEstimate a = mc_survival(d, x, 0.05, cfg);
        cfg.workers = 4;
        const MCEstimate b = mc_survival(d, x, 0.05, cfg);
        c.check("bit-identical across worker counts",
                a.mean == b.mean && a.std_error == b.std_error,
                "1 vs 4 workers, " + num(a.mean));
    }
    {
        SimConfig cfg;
        cfg.paths = 500;
        cfg.dt = 1e-3;
        const MCEstimate e = mc_survival(d, x, 0.0, cfg);
        c.check("zero horizon is certain survival", e.mean == 1.0 && e.std_error == 0.0,
                "mean exactly 1");
    }
    {
        const double ref = strip_survival(0.5, 0.5).value;
        SimConfig cfg;
        cfg.paths = 8000;
        cfg.seed = 2026;
        cfg.dt = 1e-3;
        const double e1 = std::abs(mc_strip_survival(0.5, 0.5, cfg).mean - ref);
        cfg.dt = 1e-4;
        const MCEstimate fine = mc_strip_survival(0.5, 0.5, cfg);
        const double e2 = std::abs(fine.mean - ref);
        c.check("discretization bias shrinks with dt", e2 < e1,
                num(e1) + " at dt=1e-3 vs " + num(e2) + " at dt=1e-4");
        c.check("strip walk agrees with the kernel",
                e2 < 3.0 * fine.std_error + 0.03,
                "gap " + num(e2) + ", stderr " + num(fine.std_error));
    }
}

} // namespace

extern "C" {

const char* alc_version(void) { return "1.0.0"; }

const char* alc_last_error(void) { return g_last_error.c_str(); }

void alc_string_free(char* s) { std::free(s); }

alc_status alc_datum_create(const char* family, int k, alc_datum** out) {
    if (family == nullptr || out == nullptr)
        return fail(ALC_INVALID_INPUT, "null argument");
    *out = nullptr;
    return wrap([&] {
        std::string name(family);
        std::transform(name.begin(), name.end(), name.begin(),
                       [](unsigned char ch) { return std::toupper(ch); });
        auto* h = new alc_datum{make_datum(parse_family(name), k)};
        *out = h;
        return ALC_OK;
    });
}

void alc_datum_free(alc_datum* d) { delete d; }

int alc_datum_dimension(const alc_datum* d) {
    return d == nullptr ? -1 : d->d.ambient;
}

int alc_point_in_alcove(const alc_datum* d, const double* x, int n) {
    if (check_xn(d, x, n) != ALC_OK) return -1;
    return in_alcove(d->d, to_vec(x, n)) ? 1 : 0;
}

alc_mc_config alc_mc_config_default(void) {
    const SimConfig s;
    alc_mc_config c;
    c.paths = s.paths;
    c.dt = s.dt;
    c.horizon = s.horizon;
    c.seed = s.seed;
    c.workers = s.workers;
    return c;
}

alc_status alc_survival(const alc_datum* d, const double* x, int n, double t,
                        double tol, alc_result* out) {
    alc_status s = check_xn(d, x, n);
    if (s != ALC_OK) return s;
    if ((s = need(out != nullptr, "null result pointer")) != ALC_OK) return s;
    return wrap([&] {
        SurvivalQuery q{d->d, to_vec(x, n), t, {}};
        if (tol > 0) q.ctl.tol = tol;
        const SurvivalResult r = survival(q);
        out->value = r.value;
        out->error_bound = r.tail_bound;
        out->exited_fraction = 0.0;
        out->terms = 0;
        put_method(out, r.method.c_str());
        return ALC_OK;
    });
}

alc_status alc_survival_images(const alc_datum* d, const double* x, int n,
                               double t, double tol, alc_result* out) {
    alc_status s = check_xn(d, x, n);
    if (s != ALC_OK) return s;
    if ((s = need(out != nullptr, "null result pointer")) != ALC_OK) return s;
    return wrap([&] {
        ImageControl ctl;
        if (tol > 0) ctl.tol = tol;
        const ImageResult r = survival_via_images(d->d, to_vec(x, n), t, ctl);
        out->value = r.value;
        out->error_bound = r.tail_bound;
        out->exited_fraction = 0.0;
        out->terms = static_cast<long long>(r.images);
        put_method(out, "image-sum");
        return ALC_OK;
    });
}

alc_status alc_survival_mc(const alc_datum* d, const double* x, int n, double t,
                           const alc_mc_config* cfg, alc_result* out) {
    alc_status s = check_xn(d, x, n);
    if (s != ALC_OK) return s;
    if ((s = need(out != nullptr, "null result pointer")) != ALC_OK) return s;
    return wrap([&] {
        fill_mc(out, mc_survival(d->d, to_vec(x, n), t, to_sim(cfg)));
        return ALC_OK;
    });
}

alc_status alc_chamber_survival(int k, const double* x, double t, double tol,
                                alc_result* out) {
    if (x == nullptr || out == nullptr)
        return fail(ALC_INVALID_INPUT, "null argument");
    if (k < 2) return fail(ALC_INVALID_INPUT, "chamber needs at least 2 walkers");
    return wrap([&] {
        SeriesControl ctl;
        if (tol > 0) ctl.tol = tol;
        const SurvivalResult r = chamber_survival_A(to_vec(x, k), t, ctl);
        out->value = r.value;
        out->error_bound = r.tail_bound;
        out->exited_fraction = 0.0;
        out->terms = 0;
        put_method(out, r.method.c_str());
        return ALC_OK;
    });
}

alc_status alc_expected_exit(const alc_datum* d, const double* x, int n,
                             double tol, alc_result* out) {
    alc_status s = check_xn(d, x, n);
    if (s != ALC_OK) return s;
    if ((s = need(out != nullptr, "null result pointer")) != ALC_OK) return s;
    return wrap([&] {
        if (d->d.family == Family::A) {
            LatticeControl ctl;
            if (tol > 0) ctl.tol = tol;
            const ExpectationResult r =
                expected_exit_A(std::vector<double>(x, x + n), n, ctl);
            out->value = r.value;
            out->error_bound = r.tail_bound;
            out->terms = r.terms_used;
            put_method(out, "lattice-series");
        } else {
            const ExpectationResult r = expected_via_survival_quadrature(
                d->d, to_vec(x, n), tol > 0 ? tol : 1e-6);
            out->value = r.value;
            out->error_bound = r.tail_bound;
            out->terms = r.terms_used;
            put_method(out, "survival-quadrature");
        }
        out->exited_fraction = 0.0;
        return ALC_OK;
    });
}

alc_status alc_expected_exit_mc(const alc_datum* d, const double* x, int n,
                                const alc_mc_config* cfg, alc_result* out) {
    alc_status s = check_xn(d, x, n);
    if (s != ALC_OK) return s;
    if ((s = need(out != nullptr, "null result pointer")) != ALC_OK) return s;
    return wrap([&] {
        fill_mc(out, mc_expected_exit(d->d, to_vec(x, n), to_sim(cfg)));
        return ALC_OK;
    });
}

alc_status alc_eigen(const alc_datum* d, const double* p, const double* x, int n,
                     int neumann, double* value_re, double* value_im,
                     double* eigenvalue, int* is_real) {
    alc_status s = check_xn(d, x, n);
    if (s != ALC_OK) return s;
    if ((s = need(p != nullptr, "null weight pointer")) != ALC_OK) return s;
    return wrap([&] {
        const Vec pv = to_vec(p, n);
        const Vec xv = to_vec(x, n);
        const WeylGroup w = weyl_group(d->d);
        const std::complex<double> v =
            neumann ? neumann_g(w, pv, xv) : dirichlet_f(w, pv, xv);
        if (value_re != nullptr) *value_re = v.real();
        if (value_im != nullptr) *value_im = v.imag();
        if (eigenvalue != nullptr) *eigenvalue = eigenvalue_of(d->d, pv);
        if (is_real != nullptr) *is_real = weight_realness(w, pv).real ? 1 : 0;
        return ALC_OK;
    });
}

alc_status alc_debruijn(const alc_debruijn_factor* factors, int k, double tol,
                        int alcove_points, alc_debruijn_result* out) {
    if (factors == nullptr || out == nullptr)
        return fail(ALC_INVALID_INPUT, "null argument");
    return wrap([&] {
        if (k < 2) throw invalid_input("battery needs at least two factors");
        std::vector<TestFn1D> fs;
        fs.reserve(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) {
            const alc_debruijn_factor& f = factors[i];
            TestFn1D fn;
            if (f.kind == 0)
                fn = gaussian_fn(f.p1, f.p2);
            else if (f.kind == 1)
                fn = indicator_fn(f.p1, f.p2);
            else
                throw invalid_input("factor kind must be 0 (gaussian) or 1 (indicator)");
            fs.push_back(scaled_fn(fn, f.amp));
        }
        DeBruijnControl ctl;
        if (tol > 0) ctl.tol = tol;
        if (alcove_points != 0) ctl.alcove_points = alcove_points;
        const LhsResult l = lhs_alternating_integral(fs, ctl);
        out->lhs = l.value;
        out->lhs_bound = l.truncation_bound;
        out->terms = l.terms;
        out->rhs = (k % 2 == 0) ? rhs_even(fs, ctl) : rhs_odd(fs, ctl);
        return ALC_OK;
    });
}

alc_status alc_validate(const char* suite, char** report) {
    if (suite == nullptr || report == nullptr)
        return fail(ALC_INVALID_INPUT, "null argument");
    *report = nullptr;
    const std::string name(suite);
    CheckList c;
    alc_status rc = wrap([&] {
        const bool all = name == "all";
        bool known = all;
        if (all || name == "kernels") suite_kernels(c), known = true;
        if (all || name == "survival") suite_survival(c), known = true;
        if (all || name == "expected") suite_expected(c), known = true;
        if (all || name == "eigen") suite_eigen(c), known = true;
        if (all || name == "debruijn") suite_debruijn(c), known = true;
        if (all || name == "mc") suite_mc(c), known = true;
        if (!known)
            throw invalid_input(
                "unknown suite (use kernels, survival, expected, eigen, "
                "debruijn, mc, or all)");
        return ALC_OK;
    });
    if (rc != ALC_OK) return rc;
    c.report += std::to_string(c.total - c.failures) + "/" +
                std::to_string(c.total) + " checks passed\n";
    char* buf = static_cast<char*>(std::malloc(c.report.size() + 1));
    if (buf == nullptr) return fail(ALC_INTERNAL_ERROR, "out of memory");
    std::memcpy(buf, c.report.c_str(), c.report.size() + 1);
    *report = buf;
    if (c.failures > 0) {
        g_last_error = std::to_string(c.failures) + " check(s) failed";
        return ALC_VALIDATION_FAILED;
    }
    return ALC_OK;
}

} // extern "C"
