#pragma once

// One-dimensional building blocks: survival of a standard (unit-variance)
// Brownian motion in the unit strip (0,1), a weighted variant that
// additionally double-counts paths that have already left through the upper
// wall, and the probability that the upper wall is hit first but only after
// a given time.  Each kernel has two representations:
//
//   * a sine/heat ("theta") series  sum_l c_l exp(-(l pi)^2 t / 2) sin(pi l x),
//     fast for moderate-to-large t;
//   * a reflection ("image") series of erf terms, fast for small t.
//
// Dispatch between them happens at t_switch (strip clock).  Every value is
// returned together with a rigorous-style truncation bound and the number of
// series terms used.

#include <string>

namespace alcove {

struct SeriesControl {
    double tol = 1e-12;   // requested truncation error
    int max_terms = 10000; // hard cap; if hit, tail_bound reports the shortfall
    double t_switch = 0.25; // theta form at t >= t_switch, image form below
};

struct KernelValue {
    double value = 0.0;
    double tail_bound = 0.0; // bound on the truncation error actually incurred
    int terms = 0;           // series terms summed
    const char* form = "";   // "theta" | "images" | "exact"
};

// P_x( T_{0,1} > t ): probability the walk started at x in [0,1] has not yet
// left the strip.  Deterministic limits: 1 inside at t = 0, 0 on the walls.
KernelValue strip_survival(double x, double t, const SeriesControl& ctl = {});

// P_x( T_{0,1} > t ) + 2 P_x( T_{0,1} <= t and the upper wall was hit first ).
// Equals the non-alternating image sum and the even-frequency sine series
// whose l = 0 term is the linear function 2x.  Ranges over [0, 2].
KernelValue strip_exit_weighted(double x, double t, const SeriesControl& ctl = {});

// Explicit single-representation evaluations (used by the dual-representation
// agreement tests; the dispatching functions above pick one of these).
KernelValue strip_survival_theta(double x, double t, const SeriesControl& ctl = {});
KernelValue strip_survival_images(double x, double t, const SeriesControl& ctl = {});
KernelValue strip_exit_weighted_theta(double x, double t, const SeriesControl& ctl = {});
KernelValue strip_exit_weighted_images(double x, double t, const SeriesControl& ctl = {});

// P[ upper wall hit strictly after time t2, and before the lower wall ] for
// a variance-2 process in the unit strip started at x -- the natural clock of
// a coordinate difference (X_i - X_j).  For a unit-variance strip at time t
// pass t2 = t / 2.  Alternating series 2 sum_n (-1)^{n+1}/(pi n)
// exp(-pi^2 n^2 t2) sin(pi n x); below the clock threshold it is evaluated
// through the strip kernels (t2 -> strip clock 2 t2), which stay accurate as
// t2 -> 0.
KernelValue late_upper_exit(double x, double t2, const SeriesControl& ctl = {});

// P( no hit of `level` up to time t ) = erf(|x - level| / sqrt(2 t)) for a
// standard Brownian motion started at x.  Returns 1 for t = 0 when x != level.
double hit_survival(double x, double level, double t);

// Survival in a general strip (a, b) at unit variance:
// strip_survival((x-a)/(b-a), t/(b-a)^2) by Brownian scaling.
KernelValue strip_survival_scaled(double x, double a, double b, double t,
                                  const SeriesControl& ctl = {});

} // namespace alcove
