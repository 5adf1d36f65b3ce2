#pragma once

// Simulation oracle: first-exit times of an Euler-discretized standard
// Brownian motion from any supported alcove or chamber, with standard
// errors, plus the circle-collision picture of the circular family (k
// points diffusing on R, first time some pairwise difference hits an
// integer).
//
// Plain Euler without boundary-crossing correction: the walk is sampled on
// the grid s*dt and exit is declared at the first grid time outside the
// domain, so survival estimates carry a known O(sqrt(dt)) upward bias that
// callers absorb into their tolerances.
//
// Determinism: every path owns a counter-derived RNG stream keyed by
// (seed, path index), and reductions run over fixed-size path chunks merged
// in chunk order, so results are bit-identical for any worker count.

#include "alcove/rootsys.hpp"
#include "alcove/vecutil.hpp"

#include <cstdint>
#include <vector>

namespace alcove {

struct SimConfig {
    long long paths = 100000;
    double dt = 1e-4;
    double horizon = 1.0; // censoring time for expected-exit runs
    std::uint64_t seed = 0;
    int workers = 0; // <= 0: one thread per hardware core
};

struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0; // sample sd / sqrt(paths)
    long long paths = 0;
    double exited_fraction = 0.0; // fraction of paths that left the domain
};

// Fraction of paths still inside the alcove at time t (exit declared at the
// first grid point outside), with its standard error.  t = 0 returns mean 1
// exactly.  Throws invalid_input for a start outside the open alcove or a
// config violating paths >= 1, 0 < dt < horizon, 0 <= t <= horizon.
MCEstimate mc_survival(const RootDatum& d, const Vec& x, double t,
                       const SimConfig& cfg);

// Same walk run in the image domain w(alcove) from the start w(x), where w
// is an orthogonal matrix on the ambient space (a finite Weyl element).
// The exit law is identical; the sampled increments are not, so this gives
// an independent draw for invariance tests.
MCEstimate mc_survival_frame(const RootDatum& d, const Mat& w, const Vec& x,
                             double t, const SimConfig& cfg);

// Mean recorded exit time; paths still alive at the horizon are counted at
// the horizon (exited_fraction reports how many actually left; choose the
// horizon so it stays near 1).
MCEstimate mc_expected_exit(const RootDatum& d, const Vec& x, const SimConfig& cfg);

// One-dimensional benchmark: survival of a unit-variance walk started at
// u in (0,1) before leaving the strip, the direct discrete analogue of the
// interval kernel.
MCEstimate mc_strip_survival(double u, double t, const SimConfig& cfg);

// k independent unit-variance walks from x_1..x_k; the estimate is the
// probability that no pairwise difference has crossed an integer by time t
// (collision of the circle projections).  Starts must be distinct mod 1.
MCEstimate mc_circle_collision(int k, const std::vector<double>& x, double t,
                               const SimConfig& cfg);

// The alcove point with the same gap pattern as the circle configuration x:
// fractional parts sorted in decreasing order, recentered to sum zero.
// The collision survival of x equals the alcove survival from this point.
Vec circle_alcove_representative(int k, const std::vector<double>& x);

// The per-path RNG stream seed (exposed for tests of stream independence).
std::uint64_t path_stream_seed(std::uint64_t seed, std::uint64_t path);

} // namespace alcove
