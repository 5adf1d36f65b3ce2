#pragma once

// Expected exit times of standard Brownian motion from the alcove of the
// circular (A-type affine) family, via the signed pair-partition lattice
// series, together with the per-level trigonometric components F_r of the
// survival probability's eigen-expansion
//
//   P_x(T > t) = sum_{r > 0} exp(-pi^2 r t) F_r(x),
//   E_x(T)     = sum_{r > 0} F_r(x) / (pi^2 r).
//
// The series runs over multi-indices l in O^p (p = floor(k/2) pair slots)
// where O is the odd integers for even k and the even integers including 0
// for odd k; the all-zero index is excluded (its partition-signed sum
// cancels).  A per-coordinate factor sin(pi l y) / l is taken as pi y / 2 at
// l = 0.  Closed forms are available for k = 2 (interval) and k = 3
// (equilateral triangle), and any supported family can be integrated in time
// against the survival probability as an independent cross-check.

#include "alcove/rootsys.hpp"

#include <cstdint>
#include <vector>

namespace alcove {

// Controls for the lattice-shell summation.  Shell radius doubles until the
// certified tail bound drops below tol or the next round would exceed the
// lattice-point budget; the bound actually achieved is always reported.
struct LatticeControl {
    double tol = 1e-8;
    std::int64_t max_points = 20'000'000;
};

struct ExpectationResult {
    double value = 0.0;
    double tail_bound = 0.0;    // certified bound on the truncation error
    std::int64_t terms_used = 0; // lattice points evaluated in the last round
};

// E_x(T) for the circular family on k coordinates, 2 <= k <= 8, x strictly
// inside the alcove (x1 > ... > xk, x1 - xk < 1; the common mean is
// irrelevant and ignored).  Absolute convergence of the certified bound
// degrades with k: k <= 3 reaches ~1e-9, k <= 5 reaches ~1e-6, larger k
// return honest but loose bounds at the default budget.
ExpectationResult expected_exit_A(const std::vector<double>& x, int k,
                                  const LatticeControl& ctl = {});

// Exact polynomial forms, defined on the closed alcove: k = 2 gives
// x12 (1 - x12) / 2 and k = 3 gives x12 x23 (1 - x13).  Both solve
// (1/2) Laplacian u = -1 and vanish on the boundary.
double closed_form_expected(const std::vector<double>& x, int k);

// The level-r component F_r(x): the partition-signed sum over multi-indices
// with squared norm exactly r of products of c_l sin(pi l y), c_l = 4/(pi l)
// and c_0 sin(pi * 0 * y) := 2y.  Zero when r has no representation in the
// parity lattice for k.  Defined for all real x (trigonometric polynomial).
double eigen_level_F(const std::vector<double>& x, int k, int r);

// Partial eigen-expansion sum_{0 < r <= r_max} exp(-pi^2 r t) F_r(x).
// Converges to the alcove survival probability for t bounded away from 0.
double survival_eigen_expansion(const std::vector<double>& x, int k, double t,
                                int r_max);

// Independent route for any supported family: integrate the survival
// probability over t in [0, infinity), with adaptive quadrature on a finite
// horizon and a measured-rate exponential tail estimate beyond it.
ExpectationResult expected_via_survival_quadrature(const RootDatum& datum,
                                                   const Vec& x,
                                                   double tol = 1e-6);

} // namespace alcove
