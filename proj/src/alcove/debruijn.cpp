#include "alcove/debruijn.hpp"

#include "alcove/combinat.hpp"
#include "alcove/errors.hpp"
#include "alcove/quadrature.hpp"
#include "alcove/vecutil.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace alcove {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrt2Pi = 0.3989422804014326779;
constexpr double kInvSqrt2 = 0.7071067811865475244;

double std_normal_cdf(double z) { return 0.5 * std::erfc(-z * kInvSqrt2); }

} // namespace

TestFn1D gaussian_fn(double mean, double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(mean) || !std::isfinite(sigma))
        throw invalid_input("gaussian test function needs finite mean and sigma > 0");
    TestFn1D f;
    f.kind = TestFn1D::Kind::gaussian;
    f.p1 = mean;
    f.p2 = sigma;
    return f;
}

TestFn1D indicator_fn(double a, double b) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw invalid_input("indicator test function needs finite a < b");
    TestFn1D f;
    f.kind = TestFn1D::Kind::indicator;
    f.p1 = a;
    f.p2 = b;
    return f;
}

TestFn1D scaled_fn(TestFn1D f, double c) {
    if (c == 0.0 || !std::isfinite(c))
        throw invalid_input("scaling constant must be finite and nonzero");
    f.amp *= c;
    return f;
}

double fn_value(const TestFn1D& f, double y) {
    if (f.kind == TestFn1D::Kind::gaussian) {
        const double t = (y - f.p1) / f.p2;
        return f.amp * kInvSqrt2Pi / f.p2 * std::exp(-0.5 * t * t);
    }
    return (y >= f.p1 && y <= f.p2) ? f.amp : 0.0;
}

double fn_cdf(const TestFn1D& f, double y) {
    if (f.kind == TestFn1D::Kind::gaussian)
        return f.amp * std_normal_cdf((y - f.p1) / f.p2);
    return f.amp * std::clamp(y - f.p1, 0.0, f.p2 - f.p1);
}

double fn_mass(const TestFn1D& f) {
    return f.kind == TestFn1D::Kind::gaussian ? f.amp : f.amp * (f.p2 - f.p1);
}

double fn_lo(const TestFn1D& f) {
    return f.kind == TestFn1D::Kind::gaussian ? f.p1 - 8.0 * f.p2 : f.p1;
}

double fn_hi(const TestFn1D& f) {
    return f.kind == TestFn1D::Kind::gaussian ? f.p1 + 8.0 * f.p2 : f.p2;
}

// ---------------------------------------------------------------------------
// Left side: integral over the cylinder {1 + y_k > y_1 > ... > y_k} of the
// alternating sum over permutations and sum-zero integer shifts.
//
// Coordinates: y_j = t + c_j with c_j = d_j + ... + d_{k-1}, c_k = 0; the map
// (d, t) -> y is unit-triangular, so the measure is dd dt with no constant.
// The t-integral of the factor product has a closed form for any mix of
// gaussians and boxes: the gaussian factors multiply into one gaussian in t
// and the boxes intersect into one interval.
// ---------------------------------------------------------------------------

namespace {

struct Battery {
    std::vector<TestFn1D> fs;
    std::vector<double> inv_var; // 1/sigma^2 for gaussians, 0 for boxes
    std::vector<double> lo, hi;  // effective supports
    double amp_prod = 1.0;       // product of the signed prefactors
    double gauss_norm = 1.0;     // product of 1/(sigma sqrt(2 pi))
    double amp_mag = 1.0;        // |amp_prod|, the scale of all tolerances
    bool any_gauss = false;
};

Battery make_battery(const std::vector<TestFn1D>& fs) {
    Battery b;
    b.fs = fs;
    for (const TestFn1D& f : fs) {
        if (f.kind == TestFn1D::Kind::gaussian) {
            if (!(f.p2 > 0.0)) throw invalid_input("gaussian sigma must be positive");
            b.inv_var.push_back(1.0 / (f.p2 * f.p2));
            b.gauss_norm *= kInvSqrt2Pi / f.p2;
            b.any_gauss = true;
        } else {
            if (!(f.p1 < f.p2)) throw invalid_input("indicator needs a < b");
            b.inv_var.push_back(0.0);
        }
        if (f.amp == 0.0 || !std::isfinite(f.amp))
            throw invalid_input("test function prefactor must be finite and nonzero");
        b.amp_prod *= f.amp;
        b.lo.push_back(fn_lo(f));
        b.hi.push_back(fn_hi(f));
    }
    b.amp_mag = std::abs(b.amp_prod);
    return b;
}

// Closed-form integral over t of prod_j f_{perm[j]}(t + c_j + shift[perm[j]]).
double t_slice(const Battery& b, const int* perm, const int* shift,
               const double* c, int k) {
    double A = 0.0, B = 0.0, D = 0.0;
    double slo = -std::numeric_limits<double>::infinity();
    double shi = std::numeric_limits<double>::infinity();
    bool box = false;
    for (int j = 0; j < k; ++j) {
        const int i = perm[j];
        const TestFn1D& f = b.fs[static_cast<size_t>(i)];
        const double a = c[j] + shift[i];
        if (f.kind == TestFn1D::Kind::gaussian) {
            const double iv = b.inv_var[static_cast<size_t>(i)];
            const double m = f.p1 - a;
            A += iv;
            B += m * iv;
            D += m * m * iv;
        } else {
            slo = std::max(slo, f.p1 - a);
            shi = std::min(shi, f.p2 - a);
            box = true;
        }
    }
    if (!b.any_gauss) return b.amp_prod * std::max(0.0, shi - slo);
    const double qmin = std::max(0.0, D - B * B / A);
    double out = b.gauss_norm * std::exp(-0.5 * qmin) * std::sqrt(2.0 * kPi / A);
    if (box) {
        if (!(slo < shi)) return 0.0;
        const double center = B / A;
        const double sqrtA = std::sqrt(A);
        out *= std_normal_cdf((shi - center) * sqrtA) -
               std_normal_cdf((slo - center) * sqrtA);
    }
    return b.amp_prod * out;
}

struct Perm {
    std::array<int, 4> p{};
    double sign = 1.0;
};

std::vector<Perm> permutations_with_sign(int k) {
    std::vector<int> base(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) base[static_cast<size_t>(i)] = i;
    std::vector<Perm> out;
    do {
        Perm perm;
        int inversions = 0;
        for (int a = 0; a < k; ++a) {
            perm.p[static_cast<size_t>(a)] = base[static_cast<size_t>(a)];
            for (int bb = a + 1; bb < k; ++bb)
                if (base[static_cast<size_t>(a)] > base[static_cast<size_t>(bb)])
                    ++inversions;
        }
        perm.sign = (inversions % 2 == 0) ? 1.0 : -1.0;
        out.push_back(perm);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

// Can every coordinate window [lo_i - l_i, hi_i - l_i] meet a common unit
// interval?  Necessary for the term to be nonzero (boxes: exactly; gaussians:
// up to the 8-sigma tail), so failing terms are safe to prune.
bool windows_meet(const Battery& b, const Perm& perm, const int* shift, int k) {
    double worst_lo = -std::numeric_limits<double>::infinity();
    double worst_hi = std::numeric_limits<double>::infinity();
    for (int j = 0; j < k; ++j) {
        const int i = perm.p[static_cast<size_t>(j)];
        worst_lo = std::max(worst_lo, b.lo[static_cast<size_t>(i)] - shift[i]);
        worst_hi = std::min(worst_hi, b.hi[static_cast<size_t>(i)] - shift[i]);
    }
    return worst_lo <= worst_hi + 1.0;
}

// Sum-zero shift vectors with max-norm exactly m.
std::vector<std::array<int, 4>> shift_shell(int k, int m) {
    std::vector<std::array<int, 4>> out;
    const int lo = -m, hi = m;
    std::array<int, 4> l{};
    if (k == 2) {
        for (int l0 = lo; l0 <= hi; ++l0) {
            const int l1 = -l0;
            if (std::abs(l1) > m) continue;
            if (std::max(std::abs(l0), std::abs(l1)) != m) continue;
            l = {l0, l1, 0, 0};
            out.push_back(l);
        }
    } else if (k == 3) {
        for (int l0 = lo; l0 <= hi; ++l0)
            for (int l1 = lo; l1 <= hi; ++l1) {
                const int l2 = -l0 - l1;
                if (std::abs(l2) > m) continue;
                if (std::max({std::abs(l0), std::abs(l1), std::abs(l2)}) != m)
                    continue;
                l = {l0, l1, l2, 0};
                out.push_back(l);
            }
    } else {
        for (int l0 = lo; l0 <= hi; ++l0)
            for (int l1 = lo; l1 <= hi; ++l1)
                for (int l2 = lo; l2 <= hi; ++l2) {
                    const int l3 = -l0 - l1 - l2;
                    if (std::abs(l3) > m) continue;
                    if (std::max({std::abs(l0), std::abs(l1), std::abs(l2),
                                  std::abs(l3)}) != m)
                        continue;
                    l = {l0, l1, l2, l3};
                    out.push_back(l);
                }
    }
    return out;
}

// Upper bound for one pruned term: some factor is evaluated at least eight
// sigmas out everywhere on the cylinder, one factor is integrated in full,
// and the rest are bounded by their sups.
double pruned_term_bound(const Battery& b) {
    if (!b.any_gauss) return 0.0;
    double far = 0.0;
    for (const TestFn1D& f : b.fs)
        if (f.kind == TestFn1D::Kind::gaussian)
            far = std::max(far, std::abs(f.amp) * kInvSqrt2Pi / f.p2);
    far *= std::exp(-32.0);
    double mass = 0.0;
    double sups = 1.0;
    for (const TestFn1D& f : b.fs) {
        const double sup = f.kind == TestFn1D::Kind::gaussian
                               ? std::abs(f.amp) * kInvSqrt2Pi / f.p2
                               : std::abs(f.amp);
        mass = std::max(mass, std::abs(fn_mass(f)));
        sups *= std::max(1.0, sup);
    }
    return far * mass * sups;
}

} // namespace

LhsResult lhs_alternating_integral(const std::vector<TestFn1D>& fs,
                                   const DeBruijnControl& ctl) {
    const int k = static_cast<int>(fs.size());
    if (k < 2) throw invalid_input("need at least two factors");
    if (k > 4) throw unsupported("cylinder quadrature supports at most four factors");
    if (!(ctl.tol > 0.0)) throw invalid_input("tolerance must be positive");
    if (ctl.alcove_points != 8 && ctl.alcove_points != 16)
        throw invalid_input("alcove_points must be 8 or 16");

    const Battery b = make_battery(fs);
    const std::vector<Perm> perms = permutations_with_sign(k);
    const double qtol = 1e-12 * b.amp_mag;

    // Precomputed product nodes over the simplex {d > 0, sum d < 1} (k = 4).
    struct Node4 {
        double d1, d2, d3, w;
    };
    std::vector<Node4> nodes4;
    if (k == 4) {
        for (const auto& [d1, w1] : gl_points(0.0, 1.0, ctl.alcove_points))
            for (const auto& [d2, w2] : gl_points(0.0, 1.0 - d1, ctl.alcove_points))
                for (const auto& [d3, w3] :
                     gl_points(0.0, 1.0 - d1 - d2, ctl.alcove_points))
                    nodes4.push_back({d1, d2, d3, w1 * w2 * w3});
    }

    // A term's support can be a small polytope that the first few sample
    // points of an adaptive rule miss entirely (the error estimate is then
    // an exact zero), so the adaptive rules start from a fixed subdivision
    // fine enough that every term support of nontrivial size is sampled.
    std::vector<Tri> grid3;
    if (k == 3) {
        const int g = 8;
        const double h = 1.0 / g;
        for (int a = 0; a < g; ++a)
            for (int c = 0; a + c < g; ++c) {
                grid3.push_back(Tri{a * h, c * h, (a + 1) * h, c * h, a * h, (c + 1) * h});
                if (a + c + 2 <= g)
                    grid3.push_back(
                        Tri{(a + 1) * h, c * h, (a + 1) * h, (c + 1) * h, a * h, (c + 1) * h});
            }
    }

    auto term_integral = [&](const Perm& perm, const std::array<int, 4>& l) {
        if (k == 2) {
            auto f1 = [&](double d1) {
                const double c[2] = {d1, 0.0};
                return t_slice(b, perm.p.data(), l.data(), c, k);
            };
            CompensatedSum acc;
            const int g = 16;
            for (int p = 0; p < g; ++p)
                acc.add(adaptive_simpson(f1, p / double(g), (p + 1) / double(g), qtol / g));
            return acc.value();
        }
        if (k == 3) {
            auto f2 = [&](double d1, double d2) {
                const double c[3] = {d1 + d2, d2, 0.0};
                return t_slice(b, perm.p.data(), l.data(), c, k);
            };
            CompensatedSum acc;
            for (const Tri& t : grid3)
                acc.add(adaptive_triangle(f2, t, qtol / static_cast<double>(grid3.size())));
            return acc.value();
        }
        CompensatedSum acc;
        for (const Node4& n : nodes4) {
            const double c[4] = {n.d1 + n.d2 + n.d3, n.d2 + n.d3, n.d3, 0.0};
            acc.add(n.w * t_slice(b, perm.p.data(), l.data(), c, k));
        }
        return acc.value();
    };

    LhsResult out;
    CompensatedSum value;
    long long pruned = 0;
    const double shell_stop = 0.25 * ctl.tol * b.amp_mag;
    double prev_shell_abs = std::numeric_limits<double>::infinity();
    double last_shell_abs = std::numeric_limits<double>::infinity();
    bool converged = false;

    for (int m = 0; m <= 64 && !converged; ++m) {
        double shell_abs = 0.0;
        for (const std::array<int, 4>& l : shift_shell(k, m)) {
            for (const Perm& perm : perms) {
                if (!windows_meet(b, perm, l.data(), k)) {
                    ++pruned;
                    continue;
                }
                const double term = term_integral(perm, l);
                value.add(perm.sign * term);
                shell_abs += std::abs(term);
                ++out.terms;
            }
        }
        prev_shell_abs = last_shell_abs;
        last_shell_abs = shell_abs;
        converged = (m >= 2 && prev_shell_abs < shell_stop && last_shell_abs < shell_stop);
    }
    if (!converged)
        throw unsupported("shift series did not converge within the shell cap");

    out.value = value.value();
    out.truncation_bound = prev_shell_abs + last_shell_abs +
                           static_cast<double>(pruned) * pruned_term_bound(b);
    return out;
}

// ---------------------------------------------------------------------------
// Right sides.  Both kernels reduce to one-dimensional integrals of
// f(y) times a window sum of g's antiderivative.
// ---------------------------------------------------------------------------

namespace {

// K(y) = int (-1)^{floor(y - z)} g(z) dz: alternating unit-strip masses.
double band_window_sum(const TestFn1D& g, double y) {
    const int m_lo = static_cast<int>(std::floor(y - fn_hi(g))) - 1;
    const int m_hi = static_cast<int>(std::floor(y - fn_lo(g))) + 1;
    CompensatedSum s;
    for (int m = m_lo; m <= m_hi; ++m) {
        const double strip = fn_cdf(g, y - m) - fn_cdf(g, y - m - 1);
        s.add((m & 1) ? -strip : strip);
    }
    return s.value();
}

// Panels over the support of f, split at `extra` breakpoints and capped at
// width 1/2 so a 16-point rule per panel is exact to machine accuracy.
double paneled_integral(const TestFn1D& f, const std::vector<double>& extra,
                        const std::function<double(double)>& integrand) {
    const double lo = fn_lo(f), hi = fn_hi(f);
    std::vector<double> cuts{lo, hi};
    for (double c : extra)
        if (c > lo && c < hi) cuts.push_back(c);
    std::sort(cuts.begin(), cuts.end());
    CompensatedSum s;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], bnd = cuts[i + 1];
        if (!(bnd > a)) continue;
        const int panels = std::max(1, static_cast<int>(std::ceil((bnd - a) / 0.5)));
        const double h = (bnd - a) / panels;
        for (int p = 0; p < panels; ++p)
            s.add(gauss_legendre(integrand, a + p * h, a + (p + 1) * h, 16));
    }
    return s.value();
}

// Breakpoints of y -> window sums of g: the shifted endpoints of a box g.
std::vector<double> g_breakpoints(const TestFn1D& f, const TestFn1D& g,
                                  double shift_lo, double shift_hi) {
    std::vector<double> cuts;
    if (g.kind != TestFn1D::Kind::indicator) return cuts;
    const int m_min = static_cast<int>(std::floor(fn_lo(f) - g.p2 + shift_lo)) - 1;
    const int m_max = static_cast<int>(std::ceil(fn_hi(f) - g.p1 + shift_hi)) + 1;
    for (int m = m_min; m <= m_max; ++m) {
        cuts.push_back(g.p1 + m);
        cuts.push_back(g.p2 + m);
    }
    return cuts;
}

void validate_ctl(const DeBruijnControl& ctl) {
    if (!(ctl.tol > 0.0)) throw invalid_input("tolerance must be positive");
}

} // namespace

double alternating_band_integral(const TestFn1D& f, const TestFn1D& g,
                                 const DeBruijnControl& ctl) {
    validate_ctl(ctl);
    (void)make_battery({f, g});
    return paneled_integral(f, g_breakpoints(f, g, 0.0, 0.0), [&](double y) {
        return fn_value(f, y) * band_window_sum(g, y);
    });
}

double tail_corrected_sign_integral(const TestFn1D& f, const TestFn1D& g,
                                    const DeBruijnControl& ctl) {
    validate_ctl(ctl);
    (void)make_battery({f, g});
    // mass of {y - z > c} against f(y) g(z)
    auto upper_mass = [&](double c) {
        std::vector<double> cuts;
        if (g.kind == TestFn1D::Kind::indicator) {
            cuts.push_back(g.p1 + c);
            cuts.push_back(g.p2 + c);
        }
        return paneled_integral(
            f, cuts, [&](double y) { return fn_value(f, y) * fn_cdf(g, y - c); });
    };
    const double total = fn_mass(f) * fn_mass(g);
    CompensatedSum h;
    h.add(2.0 * upper_mass(0.0) - total);
    const double eps = 1e-13 * std::max(1.0, std::abs(total));
    int quiet = 0;
    for (int m = 1; m <= 300 && quiet < 2; ++m) {
        const double above = upper_mass(m);
        const double below = total - upper_mass(-m);
        h.add(2.0 * (above - below));
        if (std::abs(above) < eps && std::abs(below) < eps)
            ++quiet;
        else
            quiet = 0;
    }
    return h.value();
}

double rhs_even(const std::vector<TestFn1D>& fs, const DeBruijnControl& ctl) {
    const int k = static_cast<int>(fs.size());
    if (k < 2 || k % 2 != 0) throw invalid_input("even side needs an even factor count");
    if (k > 12) throw invalid_input("even side supports at most 12 factors");
    validate_ctl(ctl);
    (void)make_battery(fs);
    SkewMatrix j(k);
    for (int a = 0; a < k; ++a)
        for (int bb = a + 1; bb < k; ++bb)
            j.set(a, bb,
                  alternating_band_integral(fs[static_cast<size_t>(a)],
                                            fs[static_cast<size_t>(bb)], ctl));
    return pfaffian(j);
}

double rhs_odd(const std::vector<TestFn1D>& fs, const DeBruijnControl& ctl) {
    const int k = static_cast<int>(fs.size());
    if (k < 3 || k % 2 != 1) throw invalid_input("odd side needs an odd factor count >= 3");
    if (k > 13) throw invalid_input("odd side supports at most 13 factors");
    validate_ctl(ctl);
    (void)make_battery(fs);
    SkewMatrix h(k);
    for (int a = 0; a < k; ++a)
        for (int bb = a + 1; bb < k; ++bb)
            h.set(a, bb,
                  tail_corrected_sign_integral(fs[static_cast<size_t>(a)],
                                               fs[static_cast<size_t>(bb)], ctl));
    CompensatedSum acc;
    for (int drop = 0; drop < k; ++drop) {
        std::vector<int> keep;
        keep.reserve(static_cast<size_t>(k) - 1);
        for (int i = 0; i < k; ++i)
            if (i != drop) keep.push_back(i);
        const double sign = (drop % 2 == 0) ? 1.0 : -1.0;
        acc.add(sign * fn_mass(fs[static_cast<size_t>(drop)]) *
                pfaffian_submatrix(h, keep));
    }
    return acc.value();
}

} // namespace alcove
