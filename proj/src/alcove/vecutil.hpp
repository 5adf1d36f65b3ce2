#pragma once

// Small dense vector/matrix helpers for ambient dimensions <= 8, plus
// compensated summation.  Everything here is deliberately simple: the
// dimensions are tiny and deterministic behavior matters more than speed.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace alcove {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);          // squared Euclidean norm
double norm(const Vec& a);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, double c);

// Subtract the mean from every coordinate (orthogonal projection onto the
// sum-zero hyperplane).  Leaves coordinate differences unchanged.
Vec project_sum_zero(const Vec& x);

// Neumaier variant of Kahan summation: running sum with a carried
// compensation term.  Result is independent of how values were produced but
// not of their order; callers that need bit-identical results must feed
// values in a fixed order.
class CompensatedSum {
public:
    void add(double v) {
        double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Row-major square matrix of side n acting on Vec.
struct Mat {
    int n = 0;
    std::vector<double> a; // n*n, row-major

    static Mat identity(int n);
    double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
};

Vec matvec(const Mat& m, const Vec& x);
Mat matmul(const Mat& a, const Mat& b);
Mat transpose(const Mat& m);
double det(const Mat& m); // Gaussian elimination with partial pivoting

// Householder-style reflection matrix I - 2 v v^T / <v,v>.
Mat reflection_matrix(const Vec& v);

// Solve the square linear system A x = b (Gaussian elimination, partial
// pivoting).  Throws on (numerically) singular systems.
Vec solve_linear(Mat a, Vec b);

// Orientation-preserving affine map x -> M x + shift with |det M| = 1
// (compositions of reflections and lattice translations).
struct AffineIsometry {
    Mat linear;
    Vec shift;

    static AffineIsometry identity(int n);
    Vec apply(const Vec& x) const;
    AffineIsometry then(const AffineIsometry& outer) const;  // outer ∘ this
    AffineIsometry inverse() const;                          // assumes orthogonal linear part
    double sign() const;                                     // det of the linear part
};

} // namespace alcove
