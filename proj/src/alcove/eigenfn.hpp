#pragma once

// Laplacian eigenfunctions on the fundamental alcove, built from the finite
// Weyl group of the datum: the alternating orbit sum
//
//   f_p(x) = sum_{w in W} det(w) exp(2 pi i <x, w p>)   (Dirichlet)
//   g_p(x) = sum_{w in W}        exp(2 pi i <x, w p>)   (Neumann)
//
// for weights p with <coroot(alpha), p> integral for every root.  Both are
// eigenfunctions with eigenvalue -4 pi^2 <p, p>.  An eigenfunction is real
// (up to one global constant) exactly when some group element maps p to -p;
// the witness's determinant selects the sine or cosine real form.  The
// positive-root sine product H is the principal Dirichlet eigenfunction.

#include "alcove/rootsys.hpp"
#include "alcove/vecutil.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace alcove {

// Finite Weyl group as an explicit list of orthogonal matrices on the
// ambient space, generated from the simple reflections by closure.
// elements[0] is the identity; parity[i] is det(elements[i]).
struct WeylGroup {
    RootDatum datum;
    std::vector<Mat> elements;
    std::vector<int> parity;
};

// Breadth-first closure over the simple reflections.  Throws `unsupported`
// when the group order would exceed 100000 (families A with k > 8 and
// B/C/D with k > 6 are out of range).
WeylGroup weyl_group(const RootDatum& d);

// Membership of p in the weight lattice {x in span(roots):
// <coroot(alpha), x> integral for all roots}; for the sum-zero families the
// span condition means the coordinates of p must sum to zero.
bool weight_in_lattice(const RootDatum& d, const Vec& p, double tol = 1e-9);

// Dominance against the simple roots (strict for Dirichlet weights,
// closure for Neumann weights).
bool weight_dominant(const RootDatum& d, const Vec& p, bool strict);

struct Realness {
    bool real = false;    // some group element maps p to -p
    int witness = -1;     // index of one such element, -1 when none exists
    int witness_sign = 0; // its determinant: -1 -> sine form, +1 -> cosine
};

// Orbit search for the realness witness.  Requires a lattice weight in the
// closed dominant chamber.
Realness weight_realness(const WeylGroup& w, const Vec& p);

// Orbit sums.  dirichlet_f requires a strictly dominant lattice weight,
// neumann_g a closure-dominant one.
std::complex<double> dirichlet_f(const WeylGroup& w, const Vec& p, const Vec& x);
std::complex<double> neumann_g(const WeylGroup& w, const Vec& p, const Vec& x);

// Real forms sum_w det(w) cs(2 pi <x, w p>) and sum_w cs(2 pi <x, w p>),
// where cs is sine or cosine according to the witness sign.  Equal to
// f_p / g_p up to the global constant 1 (cosine) or i (sine).  Throw when
// the weight has no realness witness.
double dirichlet_real_form(const WeylGroup& w, const Vec& p, const Vec& x);
double neumann_real_form(const WeylGroup& w, const Vec& p, const Vec& x);

// Eigenvalue of f_p and g_p: -4 pi^2 <p, p>.
double eigenvalue_of(const RootDatum& d, const Vec& p);

// H(x) = prod_{alpha > 0} sin(pi <x, alpha>): the positive-root sine
// product; vanishes on every wall, strictly positive inside the alcove, and
// proportional to f_rho.
double trig_product_H(const RootDatum& d, const Vec& x);

struct HotSpotsReport {
    bool pass = false;
    double interior_sup = 0.0; // largest sampled interior value
    double boundary_sup = 0.0; // largest sampled boundary value
    double margin = 0.0;       // boundary_sup - interior_sup
};

// Sampled Hot-Spots verification for the real Neumann eigenfunction of a
// nonzero weight: every interior sample must lie strictly below the sampled
// boundary supremum.  Boundary facets get ten times the interior sample
// count in total.  Deterministic for a fixed seed.
HotSpotsReport hot_spots_check(const WeylGroup& w, const Vec& p, int samples,
                               uint64_t seed);

// Random dominant lattice weight with small coefficients, for property
// tests and demos; strict requests strict dominance.
Vec random_dominant_weight(const RootDatum& d, bool strict, int max_coeff,
                           uint64_t& rng_state);

} // namespace alcove
