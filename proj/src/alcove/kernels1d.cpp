#include "alcove/kernels1d.hpp"

#include "alcove/errors.hpp"
#include "alcove/vecutil.hpp"

#include <cmath>
#include <string>

namespace alcove {

namespace {

constexpr double PI = 3.14159265358979323846264338327950288;

void check_ctl(const SeriesControl& ctl) {
    if (!(ctl.tol > 0.0) || ctl.max_terms < 1 || !(ctl.t_switch > 0.0))
        throw invalid_input("SeriesControl: tol and t_switch must be positive, max_terms >= 1");
}

void check_strip_args(double x, double t) {
    if (!(x >= 0.0 && x <= 1.0))
        throw invalid_input("strip kernel: x must lie in [0,1], got " + std::to_string(x));
    if (!(t >= 0.0)) throw invalid_input("strip kernel: t must be >= 0");
}

KernelValue exact(double v) { return KernelValue{v, 0.0, 0, "exact"}; }

// Sine series sum_{l in L} (4 / (l pi)) exp(-l^2 a) sin(pi l x) over l = start,
// start+2, ... (a = pi^2 t / 2).  The truncation tail after the last included
// l = N is bounded by the first omitted term's envelope times the geometric
// factor 1/(1 - exp(-a (2N + 2))), since successive included magnitudes decay
// at least that fast.
KernelValue sine_series(double x, double a, int start, const SeriesControl& ctl) {
    CompensatedSum acc;
    int terms = 0;
    double tail = HUGE_VAL;
    for (int l = start; terms < ctl.max_terms; l += 2) {
        acc.add(4.0 / (l * PI) * std::exp(-static_cast<double>(l) * l * a) * std::sin(PI * l * x));
        ++terms;
        // Everything after l: first omitted envelope times the geometric
        // factor (magnitudes drop by at least exp(-a(2l+2)) per step).
        const double lp = l + 2.0;
        const double env_next = 4.0 / (lp * PI) * std::exp(-lp * lp * a);
        const double q = std::exp(-a * (2.0 * l + 2.0));
        tail = (q < 1.0) ? env_next / (1.0 - q) : HUGE_VAL;
        if (tail <= ctl.tol) break;
    }
    return KernelValue{acc.value(), tail, terms, "theta"};
}

} // namespace

KernelValue strip_survival_theta(double x, double t, const SeriesControl& ctl) {
    check_ctl(ctl);
    check_strip_args(x, t);
    if (t == 0.0) return exact(x > 0.0 && x < 1.0 ? 1.0 : 0.0);
    if (x == 0.0 || x == 1.0) return exact(0.0);
    return sine_series(x, PI * PI * t / 2.0, 1, ctl);
}

KernelValue strip_exit_weighted_theta(double x, double t, const SeriesControl& ctl) {
    check_ctl(ctl);
    check_strip_args(x, t);
    if (t == 0.0) return exact(x == 0.0 ? 0.0 : (x == 1.0 ? 2.0 : 1.0));
    if (x == 0.0) return exact(0.0);
    if (x == 1.0) return exact(2.0); // all mass has exited upward; series terms vanish
    KernelValue kv = sine_series(x, PI * PI * t / 2.0, 2, ctl);
    kv.value += 2.0 * x; // the l = 0 term of the even-frequency series
    kv.terms += 1;
    return kv;
}

namespace {

// Bound on sum_{n > N} erfc((n - x)/s) via the stepwise decay
// erfc(z + d) <= erfc(z) exp(-d (2 z + d)).
double erfc_tail_bound(int N, double x, double s) {
    const double z = (N + 1.0 - x) / s;
    const double head = std::erfc(z);
    const double q = std::exp(-(2.0 * z / s + 1.0 / (s * s)));
    return (q < 1.0) ? head / (1.0 - q) : HUGE_VAL;
}

} // namespace

KernelValue strip_survival_images(double x, double t, const SeriesControl& ctl) {
    check_ctl(ctl);
    check_strip_args(x, t);
    if (t == 0.0) return exact(x > 0.0 && x < 1.0 ? 1.0 : 0.0);
    if (x == 0.0 || x == 1.0) return exact(0.0);
    const double s = std::sqrt(2.0 * t);
    CompensatedSum acc;
    acc.add(std::erf(x / s));
    int terms = 1;
    double sign = -1.0;
    double tail = 1.0;
    for (int n = 1; terms < ctl.max_terms; ++n, sign = -sign) {
        const double d = std::erf((x + n) / s) - std::erf((n - x) / s);
        acc.add(sign * d);
        ++terms;
        // alternating with decreasing magnitudes: error <= first omitted term
        const double next = std::erf((x + n + 1.0) / s) - std::erf((n + 1.0 - x) / s);
        tail = next;
        if (next <= ctl.tol) break;
    }
    return KernelValue{acc.value(), tail, terms, "images"};
}

KernelValue strip_exit_weighted_images(double x, double t, const SeriesControl& ctl) {
    check_ctl(ctl);
    check_strip_args(x, t);
    if (t == 0.0) return exact(x == 0.0 ? 0.0 : (x == 1.0 ? 2.0 : 1.0));
    if (x == 0.0) return exact(0.0);
    const double s = std::sqrt(2.0 * t);
    CompensatedSum acc;
    acc.add(std::erf(x / s));
    int terms = 1;
    double tail = 1.0;
    for (int n = 1; terms < ctl.max_terms; ++n) {
        acc.add(std::erf((x + n) / s) - std::erf((n - x) / s));
        ++terms;
        tail = erfc_tail_bound(n, x, s);
        if (tail <= ctl.tol) break;
    }
    return KernelValue{acc.value(), tail, terms, "images"};
}

KernelValue strip_survival(double x, double t, const SeriesControl& ctl) {
    check_ctl(ctl);
    check_strip_args(x, t);
    return (t >= ctl.t_switch) ? strip_survival_theta(x, t, ctl)
                               : strip_survival_images(x, t, ctl);
}

KernelValue strip_exit_weighted(double x, double t, const SeriesControl& ctl) {
    check_ctl(ctl);
    check_strip_args(x, t);
    return (t >= ctl.t_switch) ? strip_exit_weighted_theta(x, t, ctl)
                               : strip_exit_weighted_images(x, t, ctl);
}

KernelValue late_upper_exit(double x, double t2, const SeriesControl& ctl) {
    check_ctl(ctl);
    check_strip_args(x, t2);
    if (t2 == 0.0) return exact(x); // P(upper first) for the difference walk
    constexpr double t2_switch = 0.02;
    if (t2 < t2_switch) {
        // Through the strip kernels at their clock (t_strip = 2 t2):
        //   late = x + (survival - weighted)/2,
        // accurate down to t2 -> 0 where both terms approach 1.
        SeriesControl sub = ctl;
        sub.tol = ctl.tol / 2.0;
        const KernelValue sv = strip_survival(x, 2.0 * t2, sub);
        const KernelValue wt = strip_exit_weighted(x, 2.0 * t2, sub);
        return KernelValue{x + 0.5 * (sv.value - wt.value),
                           0.5 * (sv.tail_bound + wt.tail_bound),
                           sv.terms + wt.terms, "images"};
    }
    const double b = PI * PI * t2;
    CompensatedSum acc;
    int terms = 0;
    double tail = 1.0;
    double sign = 1.0;
    for (int n = 1; terms < ctl.max_terms; ++n, sign = -sign) {
        acc.add(sign * 2.0 / (PI * n) * std::exp(-b * n * n) * std::sin(PI * n * x));
        ++terms;
        const double envelope = 2.0 / (PI * (n + 1.0)) * std::exp(-b * (n + 1.0) * (n + 1.0));
        const double q = std::exp(-b * (2.0 * n + 3.0));
        tail = (q < 1.0) ? envelope / (1.0 - q) : HUGE_VAL;
        if (tail <= ctl.tol) break;
    }
    return KernelValue{acc.value(), tail, terms, "theta"};
}

double hit_survival(double x, double level, double t) {
    if (!(t >= 0.0)) throw invalid_input("hit_survival: t must be >= 0");
    const double d = std::abs(x - level);
    if (t == 0.0) return d > 0.0 ? 1.0 : 0.0;
    return std::erf(d / std::sqrt(2.0 * t));
}

KernelValue strip_survival_scaled(double x, double a, double b, double t,
                                  const SeriesControl& ctl) {
    if (!(b > a)) throw invalid_input("strip_survival_scaled: needs b > a");
    const double w = b - a;
    return strip_survival((x - a) / w, t / (w * w), ctl);
}

} // namespace alcove
