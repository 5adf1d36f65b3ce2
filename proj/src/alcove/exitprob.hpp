#pragma once

// Closed-form survival probabilities P_x(T > t) for the first exit time T of
// a standard Brownian motion from the fundamental alcove of each supported
// affine family, and from the order chamber x1 > ... > xk of the finite
// permutation family.  The survival probability is a signed sum over pair
// partitions of products of one- and two-dimensional factors; for even k the
// sum collapses to a Pfaffian, and for odd k to a singlet expansion of
// Pfaffians.  Both evaluation paths are exposed so they can be checked
// against each other term by term.

#include "alcove/kernels1d.hpp"
#include "alcove/rootsys.hpp"
#include "alcove/vecutil.hpp"

#include <string>

namespace alcove {

struct SurvivalQuery {
    RootDatum datum;
    Vec x;                // start point, strictly inside the alcove
    double t = 0.0;       // horizon
    SeriesControl ctl{};  // tolerance/term controls for the 1D/2D factors
};

struct SurvivalResult {
    double value = 0.0;      // clamped to [0,1]
    double raw_value = 0.0;  // before clamping
    double tail_bound = 0.0; // propagated truncation/quadrature error bound
    std::string method;      // "pfaffian" | "partition-sum" | "signed-product"
};

// Survival in the fundamental alcove; Pfaffian fast path (the rank-2
// triangle family uses its three-term signed product instead).
SurvivalResult survival(const SurvivalQuery& q);

// Reference path: explicit signed sum over pair partitions.  Algebraically
// identical to the Pfaffian path; k <= 12.
SurvivalResult survival_partition_sum(const SurvivalQuery& q);

// Survival in the open order chamber x1 > x2 > ... > xk (no upper wall):
// pairwise factors erf((xi - xj) / (2 sqrt(t))).
SurvivalResult chamber_survival_A(const Vec& x, double t, const SeriesControl& ctl = {});

// Debug reference for the odd-k alcove family A: the raw signed sum over the
// pairwise hit lattice, truncated at |shell| <= max_shell.  Each pair factor
// is a signed sum of single-level avoidance probabilities; the factorized
// series path must agree wherever the truncation tail is negligible.
SurvivalResult survival_A_lattice_sum(const SurvivalQuery& q, int max_shell = 6);

} // namespace alcove
