#pragma once

// Shared quadrature small-parts: fixed Gauss-Legendre panels, adaptive
// Simpson on an interval, and symmetric triangle rules of degree 5 and 7
// (pairing the two gives a per-triangle error estimate for adaptive
// subdivision).

#include <array>
#include <functional>
#include <utility>
#include <vector>

namespace alcove {

struct Tri {
    // Flat 2D triangle; columns are the vertices.
    double ax, ay, bx, by, cx, cy;
    double area() const;
};

// Integrate f over [a,b] with an n-point Gauss-Legendre rule (n = 8 or 16).
double gauss_legendre(const std::function<double(double)>& f, double a, double b, int n);

// The (node, weight) pairs of the same rule mapped to [a,b], for callers
// that build product rules over iterated (simplex) limits.
std::vector<std::pair<double, double>> gl_points(double a, double b, int n);

// Composite GL-16 with `panels` equal panels.
double composite_gl(const std::function<double(double)>& f, double a, double b, int panels);

// Classic adaptive Simpson with absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 40);

// Degree-5 (7 point) and degree-7 (13 point) symmetric rules.
double triangle_rule5(const std::function<double(double, double)>& f, const Tri& t);
double triangle_rule7(const std::function<double(double, double)>& f, const Tri& t);

// Adaptive triangle integration: accept a triangle when
// |rule7 - rule5| <= tol * (its area / total area), else split at the edge
// midpoints.  `tol` is an absolute budget for the whole starting triangle.
double adaptive_triangle(const std::function<double(double, double)>& f, const Tri& t,
                         double tol, int max_depth = 16);

} // namespace alcove
