#include "alcove/eigenfn.hpp"

#include "alcove/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <stdexcept>

namespace alcove {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Entries of every supported group element are integer multiples of 1/3
// (signed permutation entries for the coordinate families, thirds for the
// hexagonal family), so a scaled round is an exact dedup key.
std::vector<long long> quantize_mat(const Mat& m) {
    std::vector<long long> key;
    key.reserve(m.a.size());
    for (double v : m.a) key.push_back(std::llround(v * 3.0));
    return key;
}

double predicted_order(const RootDatum& d) {
    double f = 1.0;
    switch (d.family) {
        case Family::A:
            for (int i = 2; i <= d.k; ++i) f *= i;
            return f;
        case Family::B:
        case Family::C:
            for (int i = 2; i <= d.k; ++i) f *= i;
            return f * std::pow(2.0, d.k);
        case Family::D:
            for (int i = 2; i <= d.k; ++i) f *= i;
            return f * std::pow(2.0, d.k - 1);
        case Family::G2:
            return 12.0;
    }
    throw invalid_input("unknown family");
}

Vec coroot_of(const Vec& alpha) {
    return scale(alpha, 2.0 / norm2(alpha));
}

void require_weight(const RootDatum& d, const Vec& p, bool strict_dominant,
                    bool need_dominant) {
    if (static_cast<int>(p.size()) != d.ambient)
        throw invalid_input("weight dimension must match the ambient space");
    if (!weight_in_lattice(d, p))
        throw invalid_input("weight is not in the weight lattice");
    if (need_dominant && !weight_dominant(d, p, strict_dominant))
        throw invalid_input(strict_dominant
                                ? "weight must be strictly dominant"
                                : "weight must be dominant (closed chamber)");
}

} // namespace

WeylGroup weyl_group(const RootDatum& d) {
    const double order = predicted_order(d);
    if (order > 100000.0)
        throw unsupported("Weyl group order exceeds the 100000-element cap");

    WeylGroup g;
    g.datum = d;

    std::vector<Mat> gens;
    gens.reserve(d.simple.size());
    for (const Vec& alpha : d.simple) gens.push_back(reflection_matrix(alpha));

    std::set<std::vector<long long>> seen;
    std::deque<size_t> queue;
    g.elements.push_back(Mat::identity(d.ambient));
    g.parity.push_back(1);
    seen.insert(quantize_mat(g.elements[0]));
    queue.push_back(0);

    while (!queue.empty()) {
        const size_t at = queue.front();
        queue.pop_front();
        for (const Mat& s : gens) {
            Mat next = matmul(s, g.elements[at]);
            auto key = quantize_mat(next);
            if (!seen.insert(std::move(key)).second) continue;
            g.elements.push_back(std::move(next));
            g.parity.push_back(-g.parity[at]);
            queue.push_back(g.elements.size() - 1);
            if (g.elements.size() > 100000)
                throw unsupported("Weyl group closure exceeded the element cap");
        }
    }
    if (static_cast<double>(g.elements.size()) != order)
        throw std::runtime_error("Weyl group closure size does not match the family order");
    return g;
}

bool weight_in_lattice(const RootDatum& d, const Vec& p, double tol) {
    if (static_cast<int>(p.size()) != d.ambient) return false;
    if (d.sum_zero_plane()) {
        double s = 0.0;
        for (double v : p) s += v;
        if (std::abs(s) > tol) return false;
    }
    for (const Vec& alpha : d.positive) {
        const double v = dot(coroot_of(alpha), p);
        if (std::abs(v - std::llround(v)) > tol) return false;
    }
    return true;
}

bool weight_dominant(const RootDatum& d, const Vec& p, bool strict) {
    if (static_cast<int>(p.size()) != d.ambient) return false;
    for (const Vec& alpha : d.simple) {
        const double v = dot(alpha, p);
        if (strict ? (v <= 1e-9) : (v < -1e-9)) return false;
    }
    return true;
}

Realness weight_realness(const WeylGroup& w, const Vec& p) {
    require_weight(w.datum, p, /*strict=*/false, /*need_dominant=*/true);
    std::vector<long long> target;
    target.reserve(p.size());
    for (double v : p) target.push_back(std::llround(-v * 1e9));

    Realness r;
    for (size_t i = 0; i < w.elements.size(); ++i) {
        const Vec wp = matvec(w.elements[i], p);
        bool match = true;
        for (size_t j = 0; j < wp.size(); ++j)
            if (std::llround(wp[j] * 1e9) != target[j]) { match = false; break; }
        if (match) {
            r.real = true;
            r.witness = static_cast<int>(i);
            r.witness_sign = w.parity[i];
            return r;
        }
    }
    return r;
}

namespace {

std::complex<double> orbit_sum(const WeylGroup& w, const Vec& p, const Vec& x,
                               bool alternating) {
    if (static_cast<int>(x.size()) != w.datum.ambient)
        throw invalid_input("evaluation point dimension must match the ambient space");
    CompensatedSum re, im;
    for (size_t i = 0; i < w.elements.size(); ++i) {
        const Vec wp = matvec(w.elements[i], p);
        const double theta = 2.0 * kPi * dot(x, wp);
        const double sgn = alternating ? static_cast<double>(w.parity[i]) : 1.0;
        re.add(sgn * std::cos(theta));
        im.add(sgn * std::sin(theta));
    }
    return {re.value(), im.value()};
}

double real_orbit_sum(const WeylGroup& w, const Vec& p, const Vec& x,
                      bool alternating) {
    const Realness r = weight_realness(w, p);
    if (!r.real)
        throw invalid_input("eigenfunction has no real form: no group element maps p to -p");
    // Terms pair up as wp with (w1 w)p = -wp.  Without the sign character the
    // pair always sums to 2 cos; with it, the pair is 2 cos when the witness
    // is even and 2i sin when odd.  (Strict dominance makes the witness sign
    // unambiguous; for boundary-dominant weights only the cosine case below
    // is reachable.)
    const bool use_sin = alternating && (r.witness_sign < 0);
    if (static_cast<int>(x.size()) != w.datum.ambient)
        throw invalid_input("evaluation point dimension must match the ambient space");
    CompensatedSum acc;
    for (size_t i = 0; i < w.elements.size(); ++i) {
        const Vec wp = matvec(w.elements[i], p);
        const double theta = 2.0 * kPi * dot(x, wp);
        const double sgn = alternating ? static_cast<double>(w.parity[i]) : 1.0;
        acc.add(sgn * (use_sin ? std::sin(theta) : std::cos(theta)));
    }
    return acc.value();
}

} // namespace

std::complex<double> dirichlet_f(const WeylGroup& w, const Vec& p, const Vec& x) {
    require_weight(w.datum, p, /*strict=*/true, /*need_dominant=*/true);
    return orbit_sum(w, p, x, /*alternating=*/true);
}

std::complex<double> neumann_g(const WeylGroup& w, const Vec& p, const Vec& x) {
    require_weight(w.datum, p, /*strict=*/false, /*need_dominant=*/true);
    return orbit_sum(w, p, x, /*alternating=*/false);
}

double dirichlet_real_form(const WeylGroup& w, const Vec& p, const Vec& x) {
    require_weight(w.datum, p, /*strict=*/true, /*need_dominant=*/true);
    return real_orbit_sum(w, p, x, /*alternating=*/true);
}

double neumann_real_form(const WeylGroup& w, const Vec& p, const Vec& x) {
    require_weight(w.datum, p, /*strict=*/false, /*need_dominant=*/true);
    return real_orbit_sum(w, p, x, /*alternating=*/false);
}

double eigenvalue_of(const RootDatum& d, const Vec& p) {
    if (static_cast<int>(p.size()) != d.ambient)
        throw invalid_input("weight dimension must match the ambient space");
    return -4.0 * kPi * kPi * norm2(p);
}

double trig_product_H(const RootDatum& d, const Vec& x) {
    if (static_cast<int>(x.size()) != d.ambient)
        throw invalid_input("point dimension must match the ambient space");
    double prod = 1.0;
    for (const Vec& alpha : d.positive) prod *= std::sin(kPi * dot(x, alpha));
    return prod;
}

HotSpotsReport hot_spots_check(const WeylGroup& w, const Vec& p, int samples,
                               uint64_t seed) {
    if (samples < 1) throw invalid_input("sample count must be positive");
    if (norm2(p) <= 1e-18)
        throw invalid_input("hot-spots check needs a nonzero weight (p = 0 is constant)");
    const Realness r = weight_realness(w, p);
    if (!r.real)
        throw invalid_input("hot-spots check needs a real Neumann eigenfunction");

    const RootDatum& d = w.datum;
    const std::vector<Vec> verts = alcove_vertices(d);
    uint64_t rng = seed;

    HotSpotsReport rep;
    rep.interior_sup = -1e300;
    rep.boundary_sup = -1e300;
    for (int i = 0; i < samples; ++i) {
        const Vec x = sample_alcove_interior(d, verts, rng);
        rep.interior_sup = std::max(rep.interior_sup, neumann_real_form(w, p, x));
    }
    const int nfacets = static_cast<int>(verts.size());
    const int per_facet = (10 * samples + nfacets - 1) / nfacets;
    for (int facet = 0; facet < nfacets; ++facet) {
        for (int i = 0; i < per_facet; ++i) {
            const Vec x = sample_alcove_facet(d, verts, facet, rng);
            rep.boundary_sup = std::max(rep.boundary_sup, neumann_real_form(w, p, x));
        }
    }
    rep.margin = rep.boundary_sup - rep.interior_sup;
    rep.pass = rep.interior_sup < rep.boundary_sup;
    return rep;
}

Vec random_dominant_weight(const RootDatum& d, bool strict, int max_coeff,
                           uint64_t& rng_state) {
    if (max_coeff < 1) throw invalid_input("max_coeff must be positive");
    auto draw_int = [&](int lo, int hi) {
        return lo + static_cast<int>(splitmix64(rng_state) %
                                     static_cast<uint64_t>(hi - lo + 1));
    };

    switch (d.family) {
        case Family::A: {
            std::vector<double> m(static_cast<size_t>(d.k));
            for (double& v : m) v = draw_int(0, max_coeff);
            std::sort(m.begin(), m.end(), std::greater<double>());
            if (strict)
                for (int i = 0; i < d.k; ++i) m[static_cast<size_t>(i)] += d.k - 1 - i;
            return project_sum_zero(m);
        }
        case Family::B:
        case Family::C:
        case Family::D: {
            // half-integer class allowed for the families whose lattice has it
            const bool halves =
                (d.family != Family::C) && (splitmix64(rng_state) & 1u);
            std::vector<double> m(static_cast<size_t>(d.k));
            for (double& v : m) v = draw_int(0, max_coeff);
            std::sort(m.begin(), m.end(), std::greater<double>());
            if (strict)
                for (int i = 0; i < d.k; ++i) m[static_cast<size_t>(i)] += d.k - 1 - i;
            if (halves)
                for (double& v : m) v += 0.5;
            else if (strict && m.back() == 0.0 && d.family != Family::D)
                for (double& v : m) v += 1.0; // B/C strictness needs p_k > 0
            if (d.family == Family::D && !strict && (splitmix64(rng_state) & 1u))
                m.back() = -m.back(); // last-coordinate sign is free for D
            return m;
        }
        case Family::G2: {
            const int lo = strict ? 1 : 0;
            const double c1 = draw_int(lo, max_coeff);
            const double c2 = draw_int(lo, max_coeff);
            // fundamental weights (0,-1,1) and (-1,-1,2)
            return {-c2, -c1 - c2, c1 + 2 * c2};
        }
    }
    throw invalid_input("unknown family");
}

} // namespace alcove
