#include "alcove/vecutil.hpp"

#include "alcove/errors.hpp"

#include <algorithm>
#include <cmath>

namespace alcove {

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vec& a) { return dot(a, a); }

double norm(const Vec& a) { return std::sqrt(norm2(a)); }

Vec add(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Vec& a, double c) {
    Vec r(a);
    for (double& v : r) v *= c;
    return r;
}

Vec project_sum_zero(const Vec& x) {
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(x.size());
    Vec r(x);
    for (double& v : r) v -= mean;
    return r;
}

Mat Mat::identity(int n) {
    Mat m;
    m.n = n;
    m.a.assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

Vec matvec(const Mat& m, const Vec& x) {
    Vec r(static_cast<size_t>(m.n), 0.0);
    for (int i = 0; i < m.n; ++i) {
        double s = 0.0;
        for (int j = 0; j < m.n; ++j) s += m.at(i, j) * x[j];
        r[i] = s;
    }
    return r;
}

Mat matmul(const Mat& a, const Mat& b) {
    Mat r;
    r.n = a.n;
    r.a.assign(static_cast<size_t>(a.n) * a.n, 0.0);
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.n; ++k) {
            double v = a.at(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < a.n; ++j) r.at(i, j) += v * b.at(k, j);
        }
    return r;
}

Mat transpose(const Mat& m) {
    Mat r;
    r.n = m.n;
    r.a.assign(m.a.size(), 0.0);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

double det(const Mat& m) {
    Mat w = m;
    const int n = w.n;
    double d = 1.0;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(w.at(r, c)) > std::abs(w.at(piv, c))) piv = r;
        if (w.at(piv, c) == 0.0) return 0.0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(c, j));
            d = -d;
        }
        d *= w.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            double f = w.at(r, c) / w.at(c, c);
            for (int j = c; j < n; ++j) w.at(r, j) -= f * w.at(c, j);
        }
    }
    return d;
}

Mat reflection_matrix(const Vec& v) {
    const int n = static_cast<int>(v.size());
    Mat m = Mat::identity(n);
    const double vv = norm2(v);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) -= 2.0 * v[i] * v[j] / vv;
    return m;
}

Vec solve_linear(Mat a, Vec b) {
    const int n = a.n;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a.at(r, c)) > std::abs(a.at(piv, c))) piv = r;
        if (std::abs(a.at(piv, c)) < 1e-13)
            throw invalid_input("solve_linear: singular system");
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
            std::swap(b[piv], b[c]);
        }
        for (int r = c + 1; r < n; ++r) {
            double f = a.at(r, c) / a.at(c, c);
            if (f == 0.0) continue;
            for (int j = c; j < n; ++j) a.at(r, j) -= f * a.at(c, j);
            b[r] -= f * b[c];
        }
    }
    Vec x(static_cast<size_t>(n), 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int j = r + 1; j < n; ++j) s -= a.at(r, j) * x[j];
        x[r] = s / a.at(r, r);
    }
    return x;
}

AffineIsometry AffineIsometry::identity(int n) {
    return AffineIsometry{Mat::identity(n), Vec(static_cast<size_t>(n), 0.0)};
}

Vec AffineIsometry::apply(const Vec& x) const { return add(matvec(linear, x), shift); }

AffineIsometry AffineIsometry::then(const AffineIsometry& outer) const {
    // x -> outer(this(x)) = outer.linear * (this.linear x + this.shift) + outer.shift
    AffineIsometry r;
    r.linear = matmul(outer.linear, linear);
    r.shift = add(matvec(outer.linear, shift), outer.shift);
    return r;
}

AffineIsometry AffineIsometry::inverse() const {
    AffineIsometry r;
    r.linear = transpose(linear);
    r.shift = scale(matvec(r.linear, shift), -1.0);
    return r;
}

double AffineIsometry::sign() const { return det(linear); }

} // namespace alcove
