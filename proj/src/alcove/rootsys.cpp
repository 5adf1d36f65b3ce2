#include "alcove/rootsys.hpp"

#include "alcove/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace alcove {

namespace {

Vec unit(int dim, int i, double v = 1.0) {
    Vec e(static_cast<size_t>(dim), 0.0);
    e[i] = v;
    return e;
}

Vec e_diff(int dim, int i, int j) { // e_i - e_j, 0-based
    Vec v(static_cast<size_t>(dim), 0.0);
    v[i] = 1.0;
    v[j] = -1.0;
    return v;
}

Vec e_sum(int dim, int i, int j) {
    Vec v(static_cast<size_t>(dim), 0.0);
    v[i] = 1.0;
    v[j] = 1.0;
    return v;
}

} // namespace

Family parse_family(const std::string& name) {
    if (name == "A" || name == "a") return Family::A;
    if (name == "B" || name == "b") return Family::B;
    if (name == "C" || name == "c") return Family::C;
    if (name == "D" || name == "d") return Family::D;
    if (name == "G2" || name == "g2" || name == "G" || name == "g") return Family::G2;
    if (name == "F4" || name == "f4" || name == "F" || name == "f")
        throw unsupported("family F4: no compact pair-correlation formula is available; "
                          "use Monte Carlo externally");
    throw invalid_input("unknown family '" + name + "' (expected A, B, C, D or G2)");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::G2: return "G2";
    }
    return "?";
}

RootDatum make_datum(Family f, int k) {
    RootDatum d;
    d.family = f;
    d.k = k;
    switch (f) {
        case Family::A: {
            if (k < 2) throw invalid_input("family A needs k >= 2 coordinates");
            d.ambient = k;
            d.rank = k - 1;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) d.positive.push_back(e_diff(k, i, j));
            for (int i = 0; i + 1 < k; ++i) d.simple.push_back(e_diff(k, i, i + 1));
            d.highest = e_diff(k, 0, k - 1);
            break;
        }
        case Family::B: {
            if (k < 2) throw invalid_input("family B needs k >= 2");
            d.ambient = k;
            d.rank = k;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) d.positive.push_back(e_diff(k, i, j));
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) d.positive.push_back(e_sum(k, i, j));
            for (int i = 0; i < k; ++i) d.positive.push_back(unit(k, i));
            for (int i = 0; i + 1 < k; ++i) d.simple.push_back(e_diff(k, i, i + 1));
            d.simple.push_back(unit(k, k - 1));
            d.highest = e_sum(k, 0, 1);
            break;
        }
        case Family::C: {
            if (k < 2) throw invalid_input("family C needs k >= 2");
            d.ambient = k;
            d.rank = k;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) d.positive.push_back(e_diff(k, i, j));
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) d.positive.push_back(e_sum(k, i, j));
            for (int i = 0; i < k; ++i) d.positive.push_back(unit(k, i, 2.0));
            for (int i = 0; i + 1 < k; ++i) d.simple.push_back(e_diff(k, i, i + 1));
            d.simple.push_back(unit(k, k - 1, 2.0));
            d.highest = unit(k, 0, 2.0);
            break;
        }
        case Family::D: {
            // k = 2 is excluded: the rank-2 system splits into two orthogonal
            // strips, the alcove is a square rather than a simplex, and the
            // highest root no longer dominates the other positive root.
            if (k < 3) throw invalid_input("family D needs k >= 3");
            d.ambient = k;
            d.rank = k;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) d.positive.push_back(e_diff(k, i, j));
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) d.positive.push_back(e_sum(k, i, j));
            for (int i = 0; i + 1 < k; ++i) d.simple.push_back(e_diff(k, i, i + 1));
            d.simple.push_back(e_sum(k, k - 2, k - 1));
            d.highest = e_sum(k, 0, 1);
            break;
        }
        case Family::G2: {
            if (k != 2) throw invalid_input("family G2 has fixed rank 2 (pass k = 2)");
            d.ambient = 3;
            d.rank = 2;
            // Short roots first, then long; coordinates in the sum-zero plane of R^3.
            const Vec e31{-1.0, 0.0, 1.0};
            const Vec e32{0.0, -1.0, 1.0};
            const Vec e12{1.0, -1.0, 0.0};
            const Vec l1{-2.0, 1.0, 1.0};
            const Vec l2{1.0, -2.0, 1.0};
            const Vec l3{-1.0, -1.0, 2.0};
            d.positive = {e31, e32, e12, l1, l2, l3};
            d.simple = {e12, l1};
            d.highest = l3;
            break;
        }
    }
    return d;
}

std::vector<double> root_pairings(const RootDatum& d, const Vec& x) {
    if (static_cast<int>(x.size()) != d.ambient)
        throw invalid_input("root_pairings: point has wrong dimension");
    std::vector<double> out;
    out.reserve(d.positive.size());
    for (const auto& a : d.positive) out.push_back(dot(a, x));
    return out;
}

Vec coroot(const Vec& alpha) { return scale(alpha, 2.0 / norm2(alpha)); }

bool in_alcove_all_roots(const RootDatum& d, const Vec& x) {
    for (const auto& a : d.positive) {
        const double v = dot(a, x);
        if (!(v > 0.0 && v < 1.0)) return false;
    }
    return true;
}

bool in_alcove(const RootDatum& d, const Vec& x) {
    for (const auto& a : d.simple)
        if (!(dot(a, x) > 0.0)) return false;
    return dot(d.highest, x) < 1.0;
}

bool in_chamber(const RootDatum& d, const Vec& x) {
    for (const auto& a : d.simple)
        if (!(dot(a, x) > 0.0)) return false;
    return true;
}

Vec reflect_affine(const AffineRoot& wall, const Vec& x) {
    const double lam = dot(wall.alpha, x) - wall.level;
    return sub(x, scale(coroot(wall.alpha), lam));
}

std::vector<AffineRoot> alcove_walls(const RootDatum& d) {
    std::vector<AffineRoot> w;
    for (const auto& a : d.simple) w.push_back(AffineRoot{a, 0.0});
    w.push_back(AffineRoot{d.highest, 1.0});
    return w;
}

std::vector<Vec> alcove_vertices(const RootDatum& d) {
    const auto walls = alcove_walls(d);
    const int nw = static_cast<int>(walls.size()); // rank + 1
    const bool plane = d.sum_zero_plane();
    const int extra = plane ? 1 : 0;
    std::vector<Vec> verts;
    for (int drop = 0; drop < nw; ++drop) {
        Mat m;
        m.n = d.ambient;
        m.a.assign(static_cast<size_t>(d.ambient) * d.ambient, 0.0);
        Vec rhs(static_cast<size_t>(d.ambient), 0.0);
        int r = 0;
        for (int wi = 0; wi < nw; ++wi) {
            if (wi == drop) continue;
            for (int j = 0; j < d.ambient; ++j) m.at(r, j) = walls[wi].alpha[j];
            rhs[r] = walls[wi].level;
            ++r;
        }
        if (extra) {
            for (int j = 0; j < d.ambient; ++j) m.at(r, j) = 1.0;
            rhs[r] = 0.0;
            ++r;
        }
        if (r != d.ambient)
            throw invalid_input("alcove_vertices: wall count does not match dimension");
        verts.push_back(solve_linear(m, rhs));
    }
    // verts[j] is opposite wall j (it satisfies every wall equation except
    // wall j's); the origin, which keeps all the level-0 walls, comes last.
    return verts;
}

Vec alcove_barycenter(const RootDatum& d) {
    const auto verts = alcove_vertices(d);
    Vec b(static_cast<size_t>(d.ambient), 0.0);
    for (const auto& v : verts) b = add(b, v);
    return scale(b, 1.0 / static_cast<double>(verts.size()));
}

namespace {

bool near_integer(double v, double tol) { return std::abs(v - std::round(v)) <= tol; }

} // namespace

bool translation_lattice_contains(const RootDatum& d, const Vec& v, double tol) {
    if (static_cast<int>(v.size()) != d.ambient) return false;
    switch (d.family) {
        case Family::A: {
            double s = 0.0;
            for (double c : v) {
                if (!near_integer(c, tol)) return false;
                s += c;
            }
            return std::abs(s) <= tol * static_cast<double>(v.size());
        }
        case Family::C: {
            for (double c : v)
                if (!near_integer(c, tol)) return false;
            return true;
        }
        case Family::B:
        case Family::D: {
            long long s = 0;
            for (double c : v) {
                if (!near_integer(c, tol)) return false;
                s += static_cast<long long>(std::llround(c));
            }
            return (s % 2) == 0;
        }
        case Family::G2: {
            double s = 0.0;
            for (double c : v) {
                if (!near_integer(3.0 * c, tol)) return false;
                s += c;
            }
            return std::abs(s) <= tol * 3.0;
        }
    }
    return false;
}

long long lattice_shell_signed_count(const std::vector<Vec>& roots, int shell) {
    const int p = static_cast<int>(roots.size());
    if (p < 1 || p > 6) throw invalid_input("lattice_shell_signed_count: |A| must be 1..6");
    if (shell < 1) throw invalid_input("lattice_shell_signed_count: shell must be >= 1");
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (std::abs(dot(roots[i], roots[j])) > 1e-12)
                throw invalid_input("lattice_shell_signed_count: roots must be pairwise orthogonal");

    // Enumerate integer pairing vectors m with |m|_inf = shell.
    long long total = 0;
    std::vector<int> m(static_cast<size_t>(p), -shell);
    while (true) {
        int linf = 0;
        int pos = 0;
        for (int i = 0; i < p; ++i) {
            linf = std::max(linf, std::abs(m[i]));
            if (m[i] > 0) ++pos;
        }
        if (linf == shell) total += (pos % 2 == 0) ? 1 : -1;
        int c = 0;
        while (c < p && m[c] == shell) m[c++] = -shell;
        if (c == p) break;
        ++m[c];
    }
    return total;
}

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double uniform01(uint64_t& state) {
    return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

Vec sample_alcove_interior(const RootDatum& d, const std::vector<Vec>& vertices, uint64_t& rng_state) {
    // Dirichlet(1,...,1) barycentric weights: exponential spacings normalized.
    std::vector<double> w(vertices.size());
    double s = 0.0;
    for (double& wi : w) {
        double u = uniform01(rng_state);
        u = std::max(u, 1e-300);
        wi = -std::log(u);
        s += wi;
    }
    Vec x(static_cast<size_t>(d.ambient), 0.0);
    for (size_t v = 0; v < vertices.size(); ++v) x = add(x, scale(vertices[v], w[v] / s));
    return x;
}

Vec sample_alcove_facet(const RootDatum& d, const std::vector<Vec>& vertices, int wall, uint64_t& rng_state) {
    if (wall < 0 || static_cast<size_t>(wall) >= vertices.size())
        throw invalid_input("facet index out of range");
    std::vector<double> w(vertices.size(), 0.0);
    double s = 0.0;
    for (size_t v = 0; v < vertices.size(); ++v) {
        if (static_cast<int>(v) == wall) continue;
        double u = uniform01(rng_state);
        u = std::max(u, 1e-300);
        w[v] = -std::log(u);
        s += w[v];
    }
    Vec x(static_cast<size_t>(d.ambient), 0.0);
    for (size_t v = 0; v < vertices.size(); ++v)
        if (w[v] != 0.0) x = add(x, scale(vertices[v], w[v] / s));
    return x;
}

} // namespace alcove
