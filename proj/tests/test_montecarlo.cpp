// Simulation oracle tests: determinism across worker counts, agreement with
// the closed-form survival/expectation modules within the known
// discretization bias, the sqrt(dt) bias trend, the circle-collision
// picture, and Weyl-frame invariance.  All seeds are frozen, so every
// assertion is deterministic.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "alcove/eigenfn.hpp"
#include "alcove/errors.hpp"
#include "alcove/exitprob.hpp"
#include "alcove/kernels1d.hpp"
#include "alcove/montecarlo.hpp"

#include <cmath>
#include <vector>

using namespace alcove;

namespace {

Vec proj0(std::initializer_list<double> v) {
    Vec x(v);
    double m = 0;
    for (double a : x) m += a;
    m /= static_cast<double>(x.size());
    for (double& a : x) a -= m;
    return x;
}

double formula_survival(const RootDatum& d, const Vec& x, double t) {
    SurvivalQuery q{d, x, t, {}};
    return survival(q).value;
}

} // namespace

TEST_CASE("config and start validation") {
    const RootDatum d = make_datum(Family::C, 2);
    const Vec x{0.35, 0.15};
    SimConfig cfg;
    cfg.paths = 100;
    cfg.dt = 1e-3;

    SimConfig bad = cfg;
    bad.paths = 0;
    CHECK_THROWS_AS((void)mc_survival(d, x, 0.01, bad), invalid_input);
    bad = cfg;
    bad.dt = 0.0;
    CHECK_THROWS_AS((void)mc_survival(d, x, 0.01, bad), invalid_input);
    bad = cfg;
    bad.dt = 2.0; // >= horizon
    CHECK_THROWS_AS((void)mc_survival(d, x, 0.01, bad), invalid_input);
    CHECK_THROWS_AS((void)mc_survival(d, x, -0.01, cfg), invalid_input);
    CHECK_THROWS_AS((void)mc_survival(d, x, 2.0, cfg), invalid_input); // > horizon
    CHECK_THROWS_AS((void)mc_survival(d, Vec{0.6, 0.1}, 0.01, cfg), invalid_input);
    CHECK_THROWS_AS((void)mc_expected_exit(d, Vec{0.15, 0.35}, cfg), invalid_input);
    CHECK_THROWS_AS((void)mc_strip_survival(0.0, 0.1, cfg), invalid_input);
    CHECK_THROWS_AS((void)mc_strip_survival(1.0, 0.1, cfg), invalid_input);
    CHECK_THROWS_AS((void)mc_circle_collision(1, {0.3}, 0.1, cfg), invalid_input);
    CHECK_THROWS_AS((void)mc_circle_collision(3, {0.3, 0.5}, 0.1, cfg), invalid_input);
    // coincident mod 1
    CHECK_THROWS_AS((void)mc_circle_collision(2, {0.2, 1.2}, 0.1, cfg), invalid_input);
    // frame dimension mismatch
    CHECK_THROWS_AS((void)mc_survival_frame(d, Mat::identity(3), x, 0.01, cfg),
                    invalid_input);
}

TEST_CASE("zero horizon returns certainty exactly") {
    const RootDatum d = make_datum(Family::C, 2);
    SimConfig cfg;
    cfg.paths = 1000;
    cfg.dt = 1e-3;
    cfg.seed = 5;
    const MCEstimate e = mc_survival(d, Vec{0.35, 0.15}, 0.0, cfg);
    CHECK(e.mean == 1.0);
    CHECK(e.std_error == 0.0);
    CHECK(e.exited_fraction == 0.0);
    CHECK(e.paths == 1000);
}

TEST_CASE("bit-identical results for any worker count") {
    const RootDatum d = make_datum(Family::C, 2);
    const Vec x{0.35, 0.15};
    SimConfig cfg;
    cfg.paths = 20000;
    cfg.dt = 1e-3;
    cfg.seed = 77;

    cfg.workers = 1;
    const MCEstimate s1 = mc_survival(d, x, 0.05, cfg);
    cfg.workers = 4;
    const MCEstimate s4 = mc_survival(d, x, 0.05, cfg);
    CHECK(s1.mean == s4.mean);
    CHECK(s1.std_error == s4.std_error);
    CHECK(s1.exited_fraction == s4.exited_fraction);

    cfg.paths = 8000;
    cfg.workers = 1;
    const MCEstimate e1 = mc_expected_exit(d, x, cfg);
    cfg.workers = 4;
    const MCEstimate e4 = mc_expected_exit(d, x, cfg);
    CHECK(e1.mean == e4.mean);
    CHECK(e1.std_error == e4.std_error);
    CHECK(e1.exited_fraction == e4.exited_fraction);

    // identity frame reproduces the plain walk bit for bit
    cfg.paths = 20000;
    cfg.workers = 2;
    const MCEstimate sf = mc_survival_frame(d, Mat::identity(2), x, 0.05, cfg);
    cfg.workers = 3;
    const MCEstimate sp = mc_survival(d, x, 0.05, cfg);
    CHECK(sf.mean == sp.mean);
    CHECK(sf.std_error == sp.std_error);
}

TEST_CASE("per-path streams are decorrelated") {
    CHECK(path_stream_seed(0, 0) != path_stream_seed(0, 1));
    CHECK(path_stream_seed(0, 0) != path_stream_seed(1, 0));
    CHECK(path_stream_seed(42, 7) == path_stream_seed(42, 7));
}

TEST_CASE("strip walk matches the interval kernel") {
    const double ref = strip_survival(0.5, 0.5).value;
    SimConfig cfg;
    cfg.paths = 30000;
    cfg.dt = 1e-3;
    cfg.seed = 2026;
    const MCEstimate e = mc_strip_survival(0.5, 0.5, cfg);
    // plain Euler over-survives by O(sqrt(dt)); at dt=1e-3 that is ~0.02
    CHECK(std::abs(e.mean - ref) < 3.0 * e.std_error + 0.03);
    CHECK(e.mean > ref); // the bias direction is upward
}

TEST_CASE("discretization bias shrinks with dt") {
    const double ref = strip_survival(0.5, 0.5).value;
    SimConfig cfg;
    cfg.paths = 20000;
    cfg.seed = 2026;
    std::vector<double> errs;
    for (double dt : {1e-3, 1e-4, 1e-5}) {
        cfg.dt = dt;
        errs.push_back(std::abs(mc_strip_survival(0.5, 0.5, cfg).mean - ref));
    }
    CHECK(errs[1] < errs[0]);
    CHECK(errs[2] < errs[1]);
}

TEST_CASE("alcove walks match the closed forms within bias allowance") {
    SimConfig cfg;
    cfg.paths = 30000;

    const RootDatum a2 = make_datum(Family::A, 2);
    const Vec x2{0.25, -0.25};
    cfg.dt = 1e-4;
    cfg.seed = 11;
    const MCEstimate e2 = mc_survival(a2, x2, 0.25, cfg);
    CHECK(std::abs(e2.mean - formula_survival(a2, x2, 0.25)) <
          3.0 * e2.std_error + 0.015);

    const RootDatum a3 = make_datum(Family::A, 3);
    const Vec x3 = proj0({0.6, 0.3, 0.1});
    cfg.seed = 12;
    const MCEstimate e3 = mc_survival(a3, x3, 0.1, cfg);
    CHECK(std::abs(e3.mean - formula_survival(a3, x3, 0.1)) <
          3.0 * e3.std_error + 0.01);

    const RootDatum c2 = make_datum(Family::C, 2);
    const Vec xc{0.35, 0.15};
    cfg.dt = 1e-5;
    cfg.seed = 13;
    const MCEstimate ec = mc_survival(c2, xc, 0.02, cfg);
    CHECK(std::abs(ec.mean - formula_survival(c2, xc, 0.02)) <
          3.0 * ec.std_error + 0.015);
}

TEST_CASE("expected exit times hit the closed-form targets") {
    SimConfig cfg;
    cfg.paths = 30000;
    cfg.dt = 1e-4;
    cfg.horizon = 1.5;
    cfg.seed = 14;

    const RootDatum a2 = make_datum(Family::A, 2);
    const MCEstimate e2 = mc_expected_exit(a2, Vec{0.25, -0.25}, cfg);
    CHECK(std::abs(e2.mean - 0.125) < 3.0 * e2.std_error + 0.0075);
    CHECK(e2.exited_fraction > 0.999);

    const RootDatum a3 = make_datum(Family::A, 3);
    cfg.seed = 15;
    cfg.horizon = 1.0;
    const MCEstimate e3 = mc_expected_exit(a3, proj0({0.6, 0.3, 0.1}), cfg);
    CHECK(std::abs(e3.mean - 0.03) < 3.0 * e3.std_error + 0.005);
    CHECK(e3.exited_fraction > 0.999);

    // near-wall start: positive but clearly smaller than the center start
    cfg.seed = 16;
    const MCEstimate enw = mc_expected_exit(a2, Vec{0.05, -0.05}, cfg);
    CHECK(enw.mean > 0.0);
    CHECK(enw.mean < e2.mean);
    CHECK(std::abs(enw.mean - 0.1 * 0.9 / 2.0) < 3.0 * enw.std_error + 0.0075);
}

TEST_CASE("circle collisions reproduce the alcove representative's law") {
    const std::vector<double> x{0.05, 0.35, 0.75};
    const Vec rep = circle_alcove_representative(3, x);
    CHECK(rep[0] == doctest::Approx(0.75 - 0.3833333333333333).epsilon(1e-12));
    CHECK(rep[1] == doctest::Approx(0.35 - 0.3833333333333333).epsilon(1e-12));
    CHECK(rep[2] == doctest::Approx(0.05 - 0.3833333333333333).epsilon(1e-12));
    CHECK(rep[0] + rep[1] + rep[2] == doctest::Approx(0.0).epsilon(1e-15));

    const RootDatum a3 = make_datum(Family::A, 3);
    CHECK(in_alcove(a3, rep));
    const double ref = formula_survival(a3, rep, 0.15);

    SimConfig cfg;
    cfg.paths = 30000;
    cfg.dt = 1e-4;
    cfg.seed = 17;
    const MCEstimate e = mc_circle_collision(3, x, 0.15, cfg);
    CHECK(std::abs(e.mean - ref) < 3.0 * e.std_error + 0.005);

    // t = 0: no collision can have happened yet
    const MCEstimate z = mc_circle_collision(3, x, 0.0, cfg);
    CHECK(z.mean == 1.0);
}

TEST_CASE("Weyl-frame runs agree within statistics") {
    const RootDatum d = make_datum(Family::C, 2);
    const WeylGroup w = weyl_group(d);
    int rot = -1, refl = -1;
    for (size_t i = 1; i < w.elements.size() && (rot < 0 || refl < 0); ++i)
        (w.parity[i] > 0 ? rot : refl) = static_cast<int>(i);
    REQUIRE(rot > 0);
    REQUIRE(refl > 0);

    const Vec x{0.35, 0.15};
    SimConfig cfg;
    cfg.paths = 40000;
    cfg.dt = 1e-3;
    cfg.seed = 21;
    const MCEstimate base = mc_survival(d, x, 0.05, cfg);
    cfg.seed = 22;
    const MCEstimate er = mc_survival_frame(d, w.elements[static_cast<size_t>(rot)], x, 0.05, cfg);
    cfg.seed = 23;
    const MCEstimate ef = mc_survival_frame(d, w.elements[static_cast<size_t>(refl)], x, 0.05, cfg);

    auto z = [](const MCEstimate& a, const MCEstimate& b) {
        return std::abs(a.mean - b.mean) /
               std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error);
    };
    CHECK(z(base, er) < 4.0);
    CHECK(z(base, ef) < 4.0);
}
