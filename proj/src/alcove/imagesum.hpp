#pragma once

// Deterministic survival oracle by the method of images: the probability of
// staying inside a reflection domain equals the alternating sum, over the
// group generated by the wall reflections, of the heat kernel integrated
// over the images of the domain.  Supported domains: the unit strip (closed
// erf forms) and planar triangles (rank-2 systems, adaptive quadrature),
// including the sum-zero-plane triangles of the three-coordinate families
// through an isometric 2D chart.
//
// This module is intentionally independent of the closed-form survival
// formulas; it serves as their cross-check and provides the genuinely
// two-dimensional triangle blocks those formulas consume.

#include "alcove/rootsys.hpp"
#include "alcove/vecutil.hpp"

#include <cstddef>
#include <vector>

namespace alcove {

struct ImageControl {
    double tol = 1e-9;          // absolute error budget for the quadrature part
    double tail_c = 8.0;        // keep images within tail_c * sqrt(t) of the start
    size_t max_elements = 1000000; // hard cap on enumerated group elements
};

struct ImageResult {
    double value = 0.0;
    double tail_bound = 0.0; // quadrature budget + neglected Gaussian mass
    size_t images = 0;       // signed tiles that contributed
};

// A triangular reflection domain in the plane: three walls <alpha,y> = level
// and the three vertices of the triangle they cut out.
struct PlanarAlcove {
    std::vector<AffineRoot> walls;
    std::vector<Vec> vertices;
};

// Isometric coordinates on the sum-zero plane of R^3 (orthonormal chart), so
// Euclidean geometry and root pairings carry over unchanged.
Vec plane_coordinates(const Vec& x3);

// The fundamental alcove of a rank-2 datum as a planar domain.  Families with
// three ambient coordinates (A at k=3, G2) are passed through the sum-zero
// chart; rank != 2 is rejected.
PlanarAlcove planar_alcove(const RootDatum& d);

// Survival probability of a standard planar Brownian motion started at x
// strictly inside the triangle, by breadth-first enumeration of the group
// images within the Gaussian truncation radius.
ImageResult survival_via_images(const PlanarAlcove& a, const Vec& x, double t,
                                const ImageControl& ctl = {});

// Convenience overload: ambient start point, rank-2 datum.
ImageResult survival_via_images(const RootDatum& d, const Vec& x, double t,
                                const ImageControl& ctl = {});

// One-dimensional analogue on the unit strip; each image interval integrates
// in closed form, so the only error is the truncation tail.  Cross-checks the
// series kernels.
ImageResult strip_survival_via_images(double x, double t, const ImageControl& ctl = {});

// Survival of a planar Brownian pair (u, v) in the triangle 1/2 > u > v > 0.
// Precondition: the start satisfies the strict inequalities; t > 0.
double block_survival_C2(double u, double v, double t, double tol = 1e-9);

// Survival in the triangle 1 - v > u > v > 0.
double block_survival_B2(double u, double v, double t, double tol = 1e-9);

} // namespace alcove
