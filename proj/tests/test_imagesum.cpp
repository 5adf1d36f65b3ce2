#include "doctest.h"

#include "alcove/errors.hpp"
#include "alcove/exitprob.hpp"
#include "alcove/imagesum.hpp"
#include "alcove/kernels1d.hpp"
#include "alcove/rootsys.hpp"
#include "alcove/vecutil.hpp"

#include <cmath>
#include <vector>

using namespace alcove;

TEST_CASE("sum-zero plane chart is an isometry") {
    uint64_t state = 17;
    for (int rep = 0; rep < 50; ++rep) {
        Vec u(3), v(3);
        for (int i = 0; i < 3; ++i) {
            u[i] = uniform01(state) - 0.5;
            v[i] = uniform01(state) - 0.5;
        }
        u = project_sum_zero(u);
        v = project_sum_zero(v);
        const Vec cu = plane_coordinates(u), cv = plane_coordinates(v);
        CHECK(dot(cu, cv) == doctest::Approx(dot(u, v)).epsilon(1e-12));
        CHECK(norm(cu) == doctest::Approx(norm(u)).epsilon(1e-12));
    }
}

TEST_CASE("planar alcove construction") {
    for (auto d : {make_datum(Family::A, 3), make_datum(Family::B, 2),
                   make_datum(Family::C, 2), make_datum(Family::G2, 2)}) {
        const auto a = planar_alcove(d);
        REQUIRE(a.walls.size() == 3);
        REQUIRE(a.vertices.size() == 3);
        // Each vertex is planar and pairings with wall normals are consistent
        // with a nondegenerate triangle.
        double area2 = (a.vertices[1][0] - a.vertices[0][0]) *
                           (a.vertices[2][1] - a.vertices[0][1]) -
                       (a.vertices[1][1] - a.vertices[0][1]) *
                           (a.vertices[2][0] - a.vertices[0][0]);
        CHECK(std::abs(area2) > 1e-6);
    }
    CHECK_THROWS_AS(planar_alcove(make_datum(Family::A, 4)), unsupported);
    CHECK_THROWS_AS(planar_alcove(make_datum(Family::C, 3)), unsupported);
}

TEST_CASE("strip image enumeration reproduces the series kernel") {
    for (double t : {0.05, 0.2, 1.0})
        for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            const auto im = strip_survival_via_images(x, t);
            const auto se = strip_survival(x, t);
            CHECK(std::abs(im.value - se.value) <= 1e-10);
            CHECK(im.images >= 1);
        }
    CHECK_THROWS_AS(strip_survival_via_images(0.0, 0.1), invalid_input);
    CHECK_THROWS_AS(strip_survival_via_images(0.5, 0.0), invalid_input);
}

TEST_CASE("triangle image sums match the closed-form survival") {
    SUBCASE("three-coordinate simplex family") {
        const auto d = make_datum(Family::A, 3);
        const Vec x = {0.6, 0.3, 0.1};
        for (double t : {0.02, 0.1, 0.25}) {
            const auto im = survival_via_images(d, x, t);
            const auto cf = survival({d, x, t, {}});
            CHECK(std::abs(im.value - cf.value) <= 1e-6); // advertised tolerance
            CHECK(std::abs(im.value - cf.value) <= im.tail_bound + cf.tail_bound);
        }
    }
    SUBCASE("triangle family with two root lengths") {
        const auto d = make_datum(Family::G2, 2);
        const Vec x = alcove_barycenter(d);
        for (double t : {0.005, 0.02, 0.05}) {
            const auto im = survival_via_images(d, x, t);
            const auto cf = survival({d, x, t, {}});
            CHECK(std::abs(im.value - cf.value) <= 1e-6);
            CHECK(std::abs(im.value - cf.value) <= im.tail_bound + cf.tail_bound);
        }
    }
}

TEST_CASE("truncation radius variations stay within the reported bounds") {
    const auto d = make_datum(Family::A, 3);
    const Vec x = {0.55, 0.3, 0.15};
    ImageControl loose;
    loose.tail_c = 4.5;
    ImageControl tight;
    tight.tail_c = 8.0;
    for (double t : {0.05, 0.2}) {
        const auto a = survival_via_images(d, x, t, loose);
        const auto b = survival_via_images(d, x, t, tight);
        CHECK(std::abs(a.value - b.value) <= a.tail_bound + b.tail_bound);
        CHECK(a.images < b.images); // smaller radius keeps fewer tiles
    }
}

TEST_CASE("group signs are multiplicative") {
    const auto a = planar_alcove(make_datum(Family::G2, 2));
    std::vector<AffineIsometry> refl;
    for (const auto& w : a.walls) {
        AffineIsometry r;
        r.linear = reflection_matrix(w.alpha);
        r.shift = scale(coroot(w.alpha), w.level);
        refl.push_back(r);
    }
    uint64_t state = 404;
    for (int rep = 0; rep < 100; ++rep) {
        auto word = [&](int len) {
            AffineIsometry w = AffineIsometry::identity(2);
            int parity = 1;
            for (int i = 0; i < len; ++i) {
                const auto& g = refl[splitmix64(state) % refl.size()];
                w = g.then(w);
                parity = -parity;
            }
            return std::make_pair(w, parity);
        };
        const auto [w1, p1] = word(1 + static_cast<int>(splitmix64(state) % 5));
        const auto [w2, p2] = word(1 + static_cast<int>(splitmix64(state) % 5));
        CHECK(w1.sign() == doctest::Approx(p1));
        CHECK(w2.sign() == doctest::Approx(p2));
        const AffineIsometry prod = w1.then(w2); // w2 composed after w1
        CHECK(prod.sign() == doctest::Approx(p1 * p2));
    }
}

TEST_CASE("pair-block survival values") {
    // Frozen from this module's own deterministic quadrature; independently
    // confirmed against Monte Carlo in the acceptance checks.
    CHECK(std::abs(block_survival_C2(0.35, 0.15, 0.02) - 0.22976979189859) <= 1e-8);
    CHECK(std::abs(block_survival_B2(0.6, 0.2, 0.02) - 0.500753418021105) <= 1e-8);
    // Short horizon from a well-centered start: survival near one.
    CHECK(block_survival_C2(0.3, 0.15, 1e-4) > 1.0 - 1e-8);
    // Start near the diagonal wall: survival is nearly gone.
    CHECK(block_survival_C2(0.2500001, 0.25, 0.01) < 0.05);
    // Monotone decay in t.
    CHECK(block_survival_B2(0.5, 0.2, 0.01) > block_survival_B2(0.5, 0.2, 0.05));
    CHECK_THROWS_AS(block_survival_C2(0.15, 0.35, 0.01), invalid_input);
    CHECK_THROWS_AS(block_survival_C2(0.6, 0.1, 0.01), invalid_input);
    CHECK_THROWS_AS(block_survival_B2(0.9, 0.2, 0.01), invalid_input);
}

TEST_CASE("image sum input validation") {
    const auto d = make_datum(Family::A, 3);
    CHECK_THROWS_AS(survival_via_images(d, {0.3, 0.6, 0.1}, 0.1), invalid_input);
    CHECK_THROWS_AS(survival_via_images(d, {0.6, 0.3, 0.1}, 0.0), invalid_input);
    CHECK_THROWS_AS(survival_via_images(d, {0.6, 0.3}, 0.1), invalid_input);
    ImageControl tiny;
    tiny.max_elements = 10;
    CHECK_THROWS_AS(survival_via_images(d, {0.6, 0.3, 0.1}, 0.25, tiny), unsupported);
}
