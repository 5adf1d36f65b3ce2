#include "doctest.h"

#include "alcove/errors.hpp"
#include "alcove/kernels1d.hpp"
#include "alcove/quadrature.hpp"

#include <cmath>
#include <cstring>
#include <vector>

using namespace alcove;

namespace {

const std::vector<double> X_GRID = {0.05, 0.2, 0.35, 0.5, 0.65, 0.8, 0.9, 0.97, 0.99};
const std::vector<double> T_GRID = {0.02, 0.1, 0.25, 0.5, 1.0, 2.0};

} // namespace

TEST_CASE("strip survival: exact limits and symmetry") {
    CHECK(strip_survival(0.3, 0.0).value == 1.0);
    CHECK(strip_survival(0.0, 0.7).value == 0.0);
    CHECK(strip_survival(1.0, 0.7).value == 0.0);
    CHECK(std::strcmp(strip_survival(0.3, 0.0).form, "exact") == 0);
    for (double t : {0.03, 0.4, 1.7})
        for (double x : {0.1, 0.25, 0.45}) {
            CHECK(strip_survival(x, t).value ==
                  doctest::Approx(strip_survival(1.0 - x, t).value).epsilon(1e-12));
        }
    // Monotone decay in t.
    CHECK(strip_survival(0.3, 0.1).value > strip_survival(0.3, 0.5).value);
    CHECK(strip_survival(0.3, 0.5).value > strip_survival(0.3, 2.0).value);
    // Values are probabilities.
    for (double t : T_GRID)
        for (double x : X_GRID) {
            const double v = strip_survival(x, t).value;
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
}

TEST_CASE("strip survival: theta and image representations agree") {
    for (double t : T_GRID)
        for (double x : X_GRID) {
            const auto a = strip_survival_theta(x, t);
            const auto b = strip_survival_images(x, t);
            CHECK(std::abs(a.value - b.value) <= 1e-10);
        }
}

TEST_CASE("weighted exit kernel: limits, dual representations") {
    CHECK(strip_exit_weighted(0.4, 0.0).value == 1.0);
    CHECK(strip_exit_weighted(0.0, 0.3).value == 0.0);
    CHECK(strip_exit_weighted(1.0, 0.3).value == 2.0);
    for (double t : T_GRID)
        for (double x : X_GRID) {
            const auto a = strip_exit_weighted_theta(x, t);
            const auto b = strip_exit_weighted_images(x, t);
            CHECK(std::abs(a.value - b.value) <= 1e-10);
            CHECK(a.value >= 0.0);
            CHECK(a.value <= 2.0);
        }
    // Long-time limit: survival dies, the weighted kernel tends to 2x
    // (prob. of ever exiting upward from x is x).
    for (double x : {0.2, 0.5, 0.8})
        CHECK(strip_exit_weighted(x, 50.0).value == doctest::Approx(2 * x).epsilon(1e-12));
}

TEST_CASE("dispatch picks the representation by clock") {
    CHECK(std::strcmp(strip_survival(0.5, 0.1).form, "images") == 0);
    CHECK(std::strcmp(strip_survival(0.5, 0.7).form, "theta") == 0);
    SeriesControl ctl;
    ctl.t_switch = 0.05;
    CHECK(std::strcmp(strip_survival(0.5, 0.1, ctl).form, "theta") == 0);
}

TEST_CASE("weighted kernel decomposes into survival plus twice the early upper exits") {
    // weighted(x,t) = survival(x,t) + 2 * P(exited up by t)
    //              = survival(x,t) + 2 * (x - P(up-exit after t)).
    for (double t : {0.05, 0.2, 0.6, 1.5})
        for (double x : X_GRID) {
            const double w = strip_exit_weighted(x, t).value;
            const double s = strip_survival(x, t).value;
            const double late = late_upper_exit(x, t / 2).value;
            CHECK(w == doctest::Approx(s + 2.0 * (x - late)).epsilon(1e-9));
        }
}

TEST_CASE("late upper exit: limits and frozen integral") {
    // At t2 = 0 this is the plain gambler's-ruin probability x.
    CHECK(late_upper_exit(0.37, 0.0).value == 0.37);
    // Decreasing in t2 and vanishing at infinity.
    CHECK(late_upper_exit(0.5, 0.1).value > late_upper_exit(0.5, 0.5).value);
    CHECK(late_upper_exit(0.5, 6.0).value < 1e-20);
    // No jump across the internal clock switch: the difference between the
    // two branch evaluations is bounded by slope * gap (a branch-mismatch
    // bug would show up orders of magnitude above this).
    const double lo = late_upper_exit(0.3, 0.0199999).value;
    const double hi = late_upper_exit(0.3, 0.0200001).value;
    CHECK(std::abs(lo - hi) < 1e-6);

    // The time integral has the closed form x(1-x^2)/6.
    for (double x : {0.2, 0.5, 0.8}) {
        const double integral = adaptive_simpson(
            [x](double t2) { return late_upper_exit(x, t2).value; }, 0.0, 6.0, 1e-11);
        CHECK(integral == doctest::Approx(x * (1.0 - x * x) / 6.0).epsilon(1e-8));
    }
}

TEST_CASE("single-wall survival is an erf") {
    CHECK(hit_survival(1.0, 0.0, 0.5) == doctest::Approx(0.84270079294971487).epsilon(1e-15));
    CHECK(hit_survival(0.0, 1.0, 0.5) == doctest::Approx(0.84270079294971487).epsilon(1e-15));
    CHECK(hit_survival(0.3, 0.3, 0.1) == 0.0);
    CHECK(hit_survival(0.7, 0.0, 0.0) == 1.0);
    // Monotone in distance and in time.
    CHECK(hit_survival(2.0, 0.0, 1.0) > hit_survival(1.0, 0.0, 1.0));
    CHECK(hit_survival(1.0, 0.0, 0.5) > hit_survival(1.0, 0.0, 2.0));
}

TEST_CASE("general strip reduces by Brownian scaling") {
    // (a, b) = (-1, 3), x = 0.3  ->  unit coordinates ((x-a)/(b-a), t/(b-a)^2).
    const auto scaled = strip_survival_scaled(0.3, -1.0, 3.0, 0.8);
    const auto unit = strip_survival(1.3 / 4.0, 0.8 / 16.0);
    CHECK(scaled.value == doctest::Approx(unit.value).epsilon(1e-14));
    CHECK(strip_survival_scaled(0.55, 0.0, 1.0, 0.37).value ==
          doctest::Approx(strip_survival(0.55, 0.37).value).epsilon(1e-15));
}

TEST_CASE("reported tail bounds are honest under a term cap") {
    SeriesControl tight; // defaults: tol 1e-12
    SeriesControl capped;
    capped.max_terms = 3;
    for (double x : {0.3, 0.5, 0.8}) {
        for (double t : {0.3, 0.6}) {
            const auto ref = strip_survival_theta(x, t, tight);
            const auto rough = strip_survival_theta(x, t, capped);
            REQUIRE(ref.tail_bound <= 1e-12);
            CHECK(rough.terms <= 3);
            CHECK(std::abs(rough.value - ref.value) <= rough.tail_bound + 1e-12);
        }
        const auto ref = strip_survival_images(x, 0.04, tight);
        const auto rough = strip_survival_images(x, 0.04, capped);
        CHECK(std::abs(rough.value - ref.value) <= rough.tail_bound + 1e-12);
    }
}

TEST_CASE("requested tolerance is reflected in the bound") {
    SeriesControl ctl;
    ctl.tol = 1e-6;
    for (double t : {0.05, 0.5}) {
        const auto v = strip_survival(0.4, t, ctl);
        CHECK(v.tail_bound <= 1e-6);
        CHECK(v.terms >= 1);
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(strip_survival(-0.1, 1.0), invalid_input);
    CHECK_THROWS_AS(strip_survival(1.1, 1.0), invalid_input);
    CHECK_THROWS_AS(strip_survival(0.5, -1.0), invalid_input);
    CHECK_THROWS_AS(hit_survival(0.5, 0.0, -0.5), invalid_input);
    CHECK_THROWS_AS(strip_survival_scaled(0.5, 1.0, 0.0, 0.1), invalid_input);
    SeriesControl bad;
    bad.tol = 0.0;
    CHECK_THROWS_AS(strip_survival(0.5, 1.0, bad), invalid_input);
    bad = SeriesControl{};
    bad.max_terms = 0;
    CHECK_THROWS_AS(strip_survival(0.5, 1.0, bad), invalid_input);
}
