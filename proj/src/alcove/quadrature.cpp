#include "alcove/quadrature.hpp"

#include "alcove/errors.hpp"

#include <cmath>
#include <vector>

namespace alcove {

double Tri::area() const {
    return 0.5 * std::abs((bx - ax) * (cy - ay) - (cx - ax) * (by - ay));
}

namespace {

// Abscissae/weights on [-1,1], positive half only; mirrored at use site.
constexpr double GL8_X[4] = {0.1834346424956498, 0.5255324099163290,
                             0.7966664774136267, 0.9602898564975363};
constexpr double GL8_W[4] = {0.3626837833783620, 0.3137066458778873,
                             0.2223810344533745, 0.1012285362903763};

constexpr double GL16_X[8] = {0.0950125098376374, 0.2816035507792589,
                              0.4580167776572274, 0.6178762444026438,
                              0.7554044083550030, 0.8656312023878318,
                              0.9445750230732326, 0.9894009349916499};
constexpr double GL16_W[8] = {0.1894506104550685, 0.1826034150449236,
                              0.1691565193950025, 0.1495959888165767,
                              0.1246289712555339, 0.0951585116824928,
                              0.0622535239386479, 0.0271524594117541};

} // namespace

double gauss_legendre(const std::function<double(double)>& f, double a, double b, int n) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    if (n == 8) {
        for (int i = 0; i < 4; ++i)
            s += GL8_W[i] * (f(mid - half * GL8_X[i]) + f(mid + half * GL8_X[i]));
    } else if (n == 16) {
        for (int i = 0; i < 8; ++i)
            s += GL16_W[i] * (f(mid - half * GL16_X[i]) + f(mid + half * GL16_X[i]));
    } else {
        throw invalid_input("gauss_legendre: supported sizes are 8 and 16");
    }
    return s * half;
}

std::vector<std::pair<double, double>> gl_points(double a, double b, int n) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::vector<std::pair<double, double>> out;
    if (n == 8) {
        out.reserve(8);
        for (int i = 0; i < 4; ++i) {
            out.emplace_back(mid - half * GL8_X[i], half * GL8_W[i]);
            out.emplace_back(mid + half * GL8_X[i], half * GL8_W[i]);
        }
    } else if (n == 16) {
        out.reserve(16);
        for (int i = 0; i < 8; ++i) {
            out.emplace_back(mid - half * GL16_X[i], half * GL16_W[i]);
            out.emplace_back(mid + half * GL16_X[i], half * GL16_W[i]);
        }
    } else {
        throw invalid_input("gl_points: supported sizes are 8 and 16");
    }
    return out;
}

double composite_gl(const std::function<double(double)>& f, double a, double b, int panels) {
    if (panels < 1) throw invalid_input("composite_gl: need at least one panel");
    const double h = (b - a) / panels;
    double s = 0.0;
    for (int p = 0; p < panels; ++p) s += gauss_legendre(f, a + p * h, a + (p + 1) * h, 16);
    return s;
}

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double fa, double b,
             double fb, double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adapt(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1) +
           adapt(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
    if (!(b >= a)) throw invalid_input("adaptive_simpson: needs b >= a");
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    return adapt(f, a, fa, b, fb, m, fm, simpson(a, fa, b, fb, fm), tol, max_depth);
}

namespace {

struct BaryPoint {
    double l1, l2, l3, w;
};

// Degree 5, 7 points (Strang).
const BaryPoint RULE5[] = {
    {1.0 / 3, 1.0 / 3, 1.0 / 3, 0.225},
    {0.797426985353087, 0.101286507323456, 0.101286507323456, 0.125939180544827},
    {0.101286507323456, 0.797426985353087, 0.101286507323456, 0.125939180544827},
    {0.101286507323456, 0.101286507323456, 0.797426985353087, 0.125939180544827},
    {0.059715871789770, 0.470142064105115, 0.470142064105115, 0.132394152788506},
    {0.470142064105115, 0.059715871789770, 0.470142064105115, 0.132394152788506},
    {0.470142064105115, 0.470142064105115, 0.059715871789770, 0.132394152788506},
};

// Degree 7, 13 points (Strang-Fix; one negative weight).
const double P13_A1 = 0.479308067841923, P13_B1 = 0.260345966079038;
const double P13_A2 = 0.869739794195568, P13_B2 = 0.065130102902216;
const double P13_A3 = 0.638444188569809, P13_B3 = 0.312865496004875, P13_C3 = 0.048690315425316;
const BaryPoint RULE7[] = {
    {1.0 / 3, 1.0 / 3, 1.0 / 3, -0.149570044467670},
    {P13_A1, P13_B1, P13_B1, 0.175615257433204},
    {P13_B1, P13_A1, P13_B1, 0.175615257433204},
    {P13_B1, P13_B1, P13_A1, 0.175615257433204},
    {P13_A2, P13_B2, P13_B2, 0.053347235608839},
    {P13_B2, P13_A2, P13_B2, 0.053347235608839},
    {P13_B2, P13_B2, P13_A2, 0.053347235608839},
    {P13_A3, P13_B3, P13_C3, 0.077113760890257},
    {P13_A3, P13_C3, P13_B3, 0.077113760890257},
    {P13_B3, P13_A3, P13_C3, 0.077113760890257},
    {P13_B3, P13_C3, P13_A3, 0.077113760890257},
    {P13_C3, P13_A3, P13_B3, 0.077113760890257},
    {P13_C3, P13_B3, P13_A3, 0.077113760890257},
};

template <size_t N>
double apply_rule(const std::function<double(double, double)>& f, const Tri& t,
                  const BaryPoint (&rule)[N]) {
    const double area = t.area();
    double s = 0.0;
    for (const auto& p : rule) {
        const double x = p.l1 * t.ax + p.l2 * t.bx + p.l3 * t.cx;
        const double y = p.l1 * t.ay + p.l2 * t.by + p.l3 * t.cy;
        s += p.w * f(x, y);
    }
    return s * area;
}

} // namespace

double triangle_rule5(const std::function<double(double, double)>& f, const Tri& t) {
    return apply_rule(f, t, RULE5);
}

double triangle_rule7(const std::function<double(double, double)>& f, const Tri& t) {
    return apply_rule(f, t, RULE7);
}

double adaptive_triangle(const std::function<double(double, double)>& f, const Tri& t,
                         double tol, int max_depth) {
    struct Item {
        Tri tri;
        int depth;
    };
    const double total_area = t.area();
    std::vector<Item> stack{{t, 0}};
    double sum = 0.0;
    while (!stack.empty()) {
        const Item it = stack.back();
        stack.pop_back();
        const double coarse = triangle_rule5(f, it.tri);
        const double fine = triangle_rule7(f, it.tri);
        const double budget = tol * (it.tri.area() / total_area);
        if (it.depth >= max_depth || std::abs(fine - coarse) <= budget) {
            sum += fine;
            continue;
        }
        const Tri& s = it.tri;
        const double mabx = 0.5 * (s.ax + s.bx), maby = 0.5 * (s.ay + s.by);
        const double mbcx = 0.5 * (s.bx + s.cx), mbcy = 0.5 * (s.by + s.cy);
        const double mcax = 0.5 * (s.cx + s.ax), mcay = 0.5 * (s.cy + s.ay);
        stack.push_back({Tri{s.ax, s.ay, mabx, maby, mcax, mcay}, it.depth + 1});
        stack.push_back({Tri{mabx, maby, s.bx, s.by, mbcx, mbcy}, it.depth + 1});
        stack.push_back({Tri{mcax, mcay, mbcx, mbcy, s.cx, s.cy}, it.depth + 1});
        stack.push_back({Tri{mabx, maby, mbcx, mbcy, mcax, mcay}, it.depth + 1});
    }
    return sum;
}

} // namespace alcove
