#include "alcove/imagesum.hpp"

#include "alcove/errors.hpp"
#include "alcove/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <utility>

namespace alcove {

namespace {

constexpr double TWO_PI = 6.28318530717958647692528676655900577;

// Quantized fingerprint of an affine isometry for exact-enough deduplication.
std::vector<long long> quantize(const AffineIsometry& w) {
    std::vector<long long> key;
    key.reserve(w.linear.a.size() + w.shift.size());
    for (double v : w.linear.a) key.push_back(llround(v * 1e9));
    for (double v : w.shift) key.push_back(llround(v * 1e9));
    return key;
}

AffineIsometry wall_reflection(const AffineRoot& wall) {
    AffineIsometry r;
    r.linear = reflection_matrix(wall.alpha);
    r.shift = scale(coroot(wall.alpha), wall.level);
    return r;
}

double point_segment_dist2(const Vec& p, const Vec& a, const Vec& b) {
    const Vec ab = sub(b, a);
    const double den = norm2(ab);
    double s = den > 0.0 ? dot(sub(p, a), ab) / den : 0.0;
    s = std::min(1.0, std::max(0.0, s));
    Vec closest = add(a, scale(ab, s));
    return norm2(sub(p, closest));
}

bool point_in_triangle(const Vec& p, const std::vector<Vec>& v) {
    double s1 = 0, s2 = 0, s3 = 0;
    auto cross = [](const Vec& o, const Vec& a, const Vec& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    s1 = cross(v[0], v[1], p);
    s2 = cross(v[1], v[2], p);
    s3 = cross(v[2], v[0], p);
    const bool has_neg = (s1 < 0) || (s2 < 0) || (s3 < 0);
    const bool has_pos = (s1 > 0) || (s2 > 0) || (s3 > 0);
    return !(has_neg && has_pos);
}

// Distance from x to a tile given by its transformed vertices: an interval
// (two 1D vertices) or a triangle (three 2D vertices).
double tile_distance(const Vec& x, const std::vector<Vec>& verts) {
    if (verts.size() == 2) {
        const double lo = std::min(verts[0][0], verts[1][0]);
        const double hi = std::max(verts[0][0], verts[1][0]);
        if (x[0] < lo) return lo - x[0];
        if (x[0] > hi) return x[0] - hi;
        return 0.0;
    }
    if (point_in_triangle(x, verts)) return 0.0;
    double d2 = point_segment_dist2(x, verts[0], verts[1]);
    d2 = std::min(d2, point_segment_dist2(x, verts[1], verts[2]));
    d2 = std::min(d2, point_segment_dist2(x, verts[2], verts[0]));
    return std::sqrt(d2);
}

struct Tile {
    int sign = 1;
    std::vector<Vec> verts;
};

// Breadth-first closure of the wall reflections.  Right-composition with a
// generator moves to the tile adjacent across the corresponding facet, so the
// traversal walks the tiling by adjacency; any tile whose distance to x is at
// most r_keep is reachable through tiles within r_expand (a straight path of
// tiles stays within r_keep plus one tile diameter).
std::vector<Tile> enumerate_tiles(const std::vector<AffineRoot>& walls,
                                  const std::vector<Vec>& base_verts, const Vec& x,
                                  double r_keep, double r_expand, size_t max_elements) {
    std::vector<AffineIsometry> gens;
    gens.reserve(walls.size());
    for (const auto& w : walls) gens.push_back(wall_reflection(w));

    const int dim = static_cast<int>(x.size());
    std::set<std::vector<long long>> seen;
    std::deque<std::pair<AffineIsometry, int>> queue;
    queue.emplace_back(AffineIsometry::identity(dim), 1);
    seen.insert(quantize(queue.front().first));

    std::vector<Tile> kept;
    while (!queue.empty()) {
        auto [w, sign] = std::move(queue.front());
        queue.pop_front();

        std::vector<Vec> verts;
        verts.reserve(base_verts.size());
        for (const auto& v : base_verts) verts.push_back(w.apply(v));
        const double dist = tile_distance(x, verts);
        if (dist <= r_keep) kept.push_back({sign, verts});
        if (dist > r_expand) continue;

        for (const auto& g : gens) {
            AffineIsometry next = g.then(w); // w after g: adjacent tile
            auto key = quantize(next);
            if (!seen.insert(std::move(key)).second) continue;
            if (seen.size() > max_elements)
                throw unsupported("image sum: group closure exceeded the element cap; "
                                  "reduce t or loosen the tolerance");
            queue.emplace_back(std::move(next), -sign);
        }
    }
    return kept;
}

void check_time(double t) {
    if (!(t > 0.0)) throw invalid_input("image sum: t must be positive");
}

} // namespace

Vec plane_coordinates(const Vec& x3) {
    if (x3.size() != 3) throw invalid_input("plane_coordinates: expects 3 coordinates");
    static const double inv_sqrt2 = 0.70710678118654752440084436210485;
    static const double inv_sqrt6 = 0.40824829046386301636621401245098;
    return {(x3[0] - x3[1]) * inv_sqrt2, (x3[0] + x3[1] - 2.0 * x3[2]) * inv_sqrt6};
}

PlanarAlcove planar_alcove(const RootDatum& d) {
    if (d.rank != 2)
        throw unsupported("planar_alcove: image sums support rank-2 systems only");
    PlanarAlcove a;
    const auto walls = alcove_walls(d);
    const auto verts = alcove_vertices(d);
    if (d.ambient == 2) {
        a.walls = walls;
        a.vertices = verts;
        return a;
    }
    for (const auto& w : walls) a.walls.push_back({plane_coordinates(w.alpha), w.level});
    for (const auto& v : verts) a.vertices.push_back(plane_coordinates(v));
    return a;
}

ImageResult survival_via_images(const PlanarAlcove& a, const Vec& x, double t,
                                const ImageControl& ctl) {
    check_time(t);
    if (a.walls.size() != 3 || a.vertices.size() != 3)
        throw invalid_input("survival_via_images: domain must be a triangle");
    if (x.size() != 2) throw invalid_input("survival_via_images: start must be planar");
    // Strict interior check via signed areas against each edge.
    {
        const auto& v = a.vertices;
        auto side = [&](const Vec& p, const Vec& q) {
            return (q[0] - p[0]) * (x[1] - p[1]) - (q[1] - p[1]) * (x[0] - p[0]);
        };
        const double s1 = side(v[0], v[1]), s2 = side(v[1], v[2]), s3 = side(v[2], v[0]);
        const bool all_pos = s1 > 0 && s2 > 0 && s3 > 0;
        const bool all_neg = s1 < 0 && s2 < 0 && s3 < 0;
        if (!all_pos && !all_neg)
            throw invalid_input("survival_via_images: start must lie strictly inside");
    }

    double diam = 0.0;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j)
            diam = std::max(diam, norm(sub(a.vertices[i], a.vertices[j])));
    const double r_keep = ctl.tail_c * std::sqrt(t);
    const double r_expand = r_keep + 2.5 * diam;

    const auto tiles =
        enumerate_tiles(a.walls, a.vertices, x, r_keep, r_expand, ctl.max_elements);

    const double inv_norm = 1.0 / (TWO_PI * t);
    const double inv_2t = 1.0 / (2.0 * t);
    const double px = x[0], py = x[1];
    auto kernel = [&](double y0, double y1) {
        const double dx = y0 - px, dy = y1 - py;
        return inv_norm * std::exp(-(dx * dx + dy * dy) * inv_2t);
    };

    const double per_tile = ctl.tol / static_cast<double>(tiles.size());
    CompensatedSum sum;
    for (const auto& tile : tiles) {
        const auto& v = tile.verts;
        const Tri tri{v[0][0], v[0][1], v[1][0], v[1][1], v[2][0], v[2][1]};
        sum.add(tile.sign * adaptive_triangle(kernel, tri, per_tile));
    }

    ImageResult r;
    r.value = sum.value();
    // Neglected tiles lie entirely outside the ball of radius r_keep; the
    // images tile the plane, so their total mass is the planar Gaussian tail.
    r.tail_bound = ctl.tol + std::exp(-r_keep * r_keep * inv_2t);
    r.images = tiles.size();
    return r;
}

ImageResult survival_via_images(const RootDatum& d, const Vec& x, double t,
                                const ImageControl& ctl) {
    const PlanarAlcove a = planar_alcove(d);
    if (static_cast<int>(x.size()) != d.ambient)
        throw invalid_input("survival_via_images: point has wrong dimension");
    const Vec x2 =
        d.ambient == 3 ? plane_coordinates(project_sum_zero(x)) : x;
    return survival_via_images(a, x2, t, ctl);
}

ImageResult strip_survival_via_images(double x, double t, const ImageControl& ctl) {
    check_time(t);
    if (!(x > 0.0 && x < 1.0))
        throw invalid_input("strip_survival_via_images: x must lie strictly inside (0,1)");

    const std::vector<AffineRoot> walls = {{Vec{1.0}, 0.0}, {Vec{1.0}, 1.0}};
    const std::vector<Vec> base = {Vec{0.0}, Vec{1.0}};
    const double r_keep = ctl.tail_c * std::sqrt(t);
    const auto tiles =
        enumerate_tiles(walls, base, Vec{x}, r_keep, r_keep + 2.5, ctl.max_elements);

    const double s = std::sqrt(2.0 * t);
    CompensatedSum sum;
    for (const auto& tile : tiles) {
        const double a = std::min(tile.verts[0][0], tile.verts[1][0]);
        const double b = std::max(tile.verts[0][0], tile.verts[1][0]);
        sum.add(tile.sign * 0.5 * (std::erf((b - x) / s) - std::erf((a - x) / s)));
    }

    ImageResult r;
    r.value = sum.value();
    r.tail_bound = std::erfc(r_keep / s); // one-dimensional Gaussian tail
    r.images = tiles.size();
    return r;
}

double block_survival_C2(double u, double v, double t, double tol) {
    if (!(0.5 > u && u > v && v > 0.0))
        throw invalid_input("block_survival_C2: needs 1/2 > u > v > 0");
    static const RootDatum datum = make_datum(Family::C, 2);
    ImageControl ctl;
    ctl.tol = tol;
    return survival_via_images(datum, Vec{u, v}, t, ctl).value;
}

double block_survival_B2(double u, double v, double t, double tol) {
    if (!(1.0 - v > u && u > v && v > 0.0))
        throw invalid_input("block_survival_B2: needs 1 - v > u > v > 0");
    static const RootDatum datum = make_datum(Family::B, 2);
    ImageControl ctl;
    ctl.tol = tol;
    return survival_via_images(datum, Vec{u, v}, t, ctl).value;
}

} // namespace alcove
