#pragma once

// Numerical validators for the alternating-sum integral identities on the
// alcove cylinder of k ordered coordinates: the integral over
// {1 + y_k > y_1 > ... > y_k} of the alternating sum, over all permutations
// and sum-zero integer shifts, of a factorized function  prod_i f_i(y_i)
// collapses to Pfaffians of pairwise kernel integrals.  For an even number
// of factors the kernel is (-1)^{floor(y - z)}; for an odd number each
// factor in turn is reduced to its total mass and the rest pair up through
// a tail-corrected sign kernel.  Both sides are computed independently so
// they can be cross-checked.

#include <vector>

namespace alcove {

// One-dimensional test factor with closed-form value, antiderivative, total
// mass, and effective support (8 sigma for the smooth kind, exact for the
// box kind).
struct TestFn1D {
    enum class Kind { gaussian, indicator };
    Kind kind = Kind::gaussian;
    double p1 = 0.0;  // mean / left endpoint
    double p2 = 1.0;  // sigma / right endpoint
    double amp = 1.0; // constant prefactor
};

TestFn1D gaussian_fn(double mean, double sigma); // sigma > 0
TestFn1D indicator_fn(double a, double b);       // a < b
TestFn1D scaled_fn(TestFn1D f, double c);        // c * f, c != 0

double fn_value(const TestFn1D& f, double y);
double fn_cdf(const TestFn1D& f, double y); // integral of f over (-inf, y]
double fn_mass(const TestFn1D& f);          // integral of f over the line
double fn_lo(const TestFn1D& f);            // effective support bounds:
double fn_hi(const TestFn1D& f);            // exact for boxes, 8 sigma else

struct DeBruijnControl {
    // Target for the shift/strip truncations (the quadrature itself is run
    // well below this).
    double tol = 1e-7;
    // Gauss-Legendre nodes per simplex dimension in the k = 4 cylinder
    // integral (8 or 16); lower dimensions use adaptive rules.
    int alcove_points = 16;
};

struct LhsResult {
    double value = 0.0;
    // Conservative bound on the dropped translation terms, combining the
    // final sub-threshold shells with an 8-sigma window bound for the
    // pruned (never-evaluated) terms.  Exact zeros for box-only batteries.
    double truncation_bound = 0.0;
    long long terms = 0; // (permutation, shift) pairs actually integrated
};

// Left side: integral over the alcove cylinder of the alternating sum of
// prod_i f_i applied to permuted, integer-shifted coordinates.  Supports
// 2 <= k <= 4 factors (the quadrature dimension is k - 1).
LhsResult lhs_alternating_integral(const std::vector<TestFn1D>& fs,
                                   const DeBruijnControl& ctl = {});

// Pairwise kernels of the right sides.
// J = iint (-1)^{floor(y - z)} f(y) g(z) dy dz.
double alternating_band_integral(const TestFn1D& f, const TestFn1D& g,
                                 const DeBruijnControl& ctl = {});
// H = iint sgn(y - z) f(y) g(z) dy dz
//     + 2 sum_{m >= 1} iint_{|y - z| > m} sgn(y - z) f(y) g(z) dy dz.
double tail_corrected_sign_integral(const TestFn1D& f, const TestFn1D& g,
                                    const DeBruijnControl& ctl = {});

// Right side, even k: Pf(J_ij).
double rhs_even(const std::vector<TestFn1D>& fs, const DeBruijnControl& ctl = {});

// Right side, odd k: sum_l (-1)^{l+1} mass(f_l) Pf(H_ij over [k] minus {l}).
double rhs_odd(const std::vector<TestFn1D>& fs, const DeBruijnControl& ctl = {});

} // namespace alcove
