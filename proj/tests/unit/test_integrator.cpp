#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fractoda/gamma.hpp"
#include "fractoda/integrator.hpp"
#include "fractoda/systems.hpp"
#include "helpers.hpp"

using namespace fractoda;

TEST_CASE("gamma function") {
    SUBCASE("factorial identities are exact") {
        CHECK(gamma_fn(1.0) == 1.0);
        CHECK(gamma_fn(2.0) == 1.0);
        CHECK(gamma_fn(5.0) == 24.0);
        CHECK(gamma_fn(11.0) == 3628800.0);
    }
    SUBCASE("reference values") {
        // high-precision references computed ahead of the build
        CHECK(gamma_fn(0.5) == doctest::Approx(1.7724538509055160273).epsilon(1e-12));
        CHECK(gamma_fn(1.5) == doctest::Approx(0.88622692545275801365).epsilon(1e-12));
        CHECK(gamma_fn(1.8) == doctest::Approx(0.93138377098024269891).epsilon(1e-12));
        CHECK(gamma_fn(2.5) == doctest::Approx(1.3293403881791370205).epsilon(1e-12));
    }
    SUBCASE("reflection branch below one half") {
        CHECK(gamma_fn(0.25) == doctest::Approx(3.6256099082219083119).epsilon(1e-12));
        CHECK(gamma_fn(0.1) == doctest::Approx(9.5135076986687318363).epsilon(1e-12));
    }
    SUBCASE("domain") {
        CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
        CHECK_THROWS_AS(gamma_fn(-1.5), std::domain_error);
        CHECK_THROWS_AS(gamma_fn(std::nan("")), std::domain_error);
    }
}

TEST_CASE("scheme coefficient") {
    SUBCASE("classical limit collapses to h exactly") {
        CHECK(fem_coefficient(0.01, 1.0) == 0.01);
        CHECK(fem_coefficient(0.25, 1.0) == 0.25);
    }
    SUBCASE("fractional value") {
        CHECK(fem_coefficient(0.01, 0.8) ==
              doctest::Approx(0.026969403051396570).epsilon(1e-14));
    }
    SUBCASE("domain") {
        CHECK_THROWS_AS(fem_coefficient(0.0, 0.8), std::invalid_argument);
        CHECK_THROWS_AS(fem_coefficient(0.01, 0.0), OrderOutOfRange);
        CHECK_THROWS_AS(fem_coefficient(0.01, 1.5), OrderOutOfRange);
    }
}

TEST_CASE("single scheme step") {
    SUBCASE("decay field, one step, frozen value") {
        // 1 - 0.01^0.8 / gamma(1.8)
        const auto decay = [](const State5& s) { return State5{-s.x1, 0, 0, 0, 0}; };
        const State5 x1 = fem_step(State5{1, 0, 0, 0, 0}, decay, 0.01, 0.8);
        CHECK(x1.x1 == doctest::Approx(0.97303059694860343049).epsilon(1e-15));
    }
    SUBCASE("zero field is a fixed point") {
        const auto zero = [](const State5&) { return State5{}; };
        const State5 x{0.1, -0.2, 0.3, -0.4, 0.5};
        CHECK(fem_step(x, zero, 0.01, 0.8) == x);
        CHECK(fem_step(x, zero, 0.5, 1.0) == x);
    }
}

TEST_CASE("scalar-linear closed form is reproduced bit for bit") {
    // independent oracle with the same pinned operation order
    for (double lambda : {-1.0, -0.1, 0.2}) {
        for (double q : {0.5, 0.8, 1.0}) {
            const double h = 0.01;
            const double kappa = std::pow(h, q) / gamma_fn(q + 1.0);
            const auto field = [lambda](const State5& s) {
                return State5{lambda * s.x1, 0, 0, 0, 0};
            };
            double oracle = 1.0;
            State5 x{1, 0, 0, 0, 0};
            for (int j = 0; j < 1000; ++j) {
                oracle = oracle + kappa * (lambda * oracle);
                x = fem_step(x, field, kappa);
                REQUIRE(x.x1 == oracle);
            }
        }
    }
}

TEST_CASE("order one trajectory equals classical forward Euler bit for bit") {
    ParamSet p{-0.9, 0.08, -0.4, -0.22, -0.06, 1.0};
    const Equilibrium xe{0.0, -1.0};
    const IntegratorConfig cfg{0.01, 1000, 0.01};
    const Trajectory tr = integrate(p, xe, cfg, true);
    REQUIRE(tr.states.size() == 1001);
    CHECK(tr.kappa == cfg.h);

    State5 x = xe.to_state() + State5{0.01, 0.01, 0.01, 0.01, 0.01};
    for (std::size_t j = 0; j < tr.states.size(); ++j) {
        REQUIRE(tr.states[j] == x);
        const State5 f = eval_controlled(x, p, xe);
        x = {x.x1 + cfg.h * f.x1, x.x2 + cfg.h * f.x2, x.x3 + cfg.h * f.x3,
             x.x4 + cfg.h * f.x4, x.x5 + cfg.h * f.x5};
    }
}

TEST_CASE("trajectory bookkeeping") {
    const ParamSet p{-0.45, 1.0, -0.2, -0.15, 1.01, 0.8};
    const Equilibrium xe{1.0, 0.6};
    const IntegratorConfig cfg{0.01, 100, 0.01};
    const Trajectory tr = integrate(p, xe, cfg, true);

    REQUIRE(tr.states.size() == 101);
    REQUIRE(tr.times.size() == 101);
    CHECK(tr.states.front() == State5{0.01, 1.01, 0.61, 0.01, 0.01});
    for (std::size_t j = 0; j < tr.times.size(); ++j) {
        CHECK(tr.times[j] == double(j) * cfg.h);
        if (j) CHECK(tr.times[j] > tr.times[j - 1]);
    }
    CHECK_FALSE(tr.diverged_at.has_value());
}

TEST_CASE("zero perturbation pins the trajectory to the equilibrium") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 10; ++i) {
        const ParamSet p = testutil::draw_params(rng);
        const Equilibrium xe{testutil::draw_uniform(rng, -2, 2), testutil::draw_uniform(rng, -2, 2)};
        const Trajectory tr = integrate(p, xe, {0.01, 200, 0.0}, true);
        REQUIRE(tr.states.size() == 201);
        for (const State5& s : tr.states) CHECK(s == xe.to_state());

        const ConvergenceReport rep = convergence_metrics(tr, xe);
        for (double d : rep.distances) CHECK(d == 0.0);
        CHECK(rep.final_over_initial == 0.0);
        CHECK(rep.monotone_tail);
    }
}

TEST_CASE("custom perturbation vector replaces the uniform offset") {
    const ParamSet p{-0.9, 0.08, -0.4, -0.22, -0.06, 0.8};
    const Equilibrium xe{0.0, -1.0};
    const State5 offset{0.2, 0.0, 0.0, 0.0, 0.0};
    const Trajectory tr = integrate(p, xe, {0.01, 10, 0.01}, true, offset);
    CHECK(tr.states.front() == xe.to_state() + offset);
}

TEST_CASE("converging reference run") {
    const ParamSet p{-0.9, 0.08, -0.4, -0.22, -0.06, 0.8};
    const Equilibrium xe{0.0, -1.0};
    const Trajectory tr = integrate(p, xe, {0.01, 5000, 0.01}, true);
    REQUIRE_FALSE(tr.diverged_at.has_value());

    const ConvergenceReport rep = convergence_metrics(tr, xe);
    CHECK(rep.distances.back() < 5e-3);
    CHECK(rep.final_over_initial < 0.05);
    CHECK(rep.monotone_tail);

    SUBCASE("halving the step changes the final distance by less than 4x") {
        const Trajectory half = integrate(p, xe, {0.005, 10000, 0.01}, true);
        const double d_full = rep.distances.back();
        const double d_half = convergence_metrics(half, xe).distances.back();
        CHECK(d_half < 4.0 * d_full);
        CHECK(d_full < 4.0 * d_half);
    }
}

TEST_CASE("escape run leaves the equilibrium neighborhood") {
    // positive gain on the x5 mode pushes the state away from the origin;
    // the quadratic lattice terms then hold it on a bounded excursion
    const ParamSet p{-0.8, 0.2, -0.03, -0.02, -0.001, 0.8};
    const Trajectory tr = integrate(p, Equilibrium{}, {0.01, 2000, 0.01}, true);
    REQUIRE_FALSE(tr.diverged_at.has_value());

    const ConvergenceReport rep = convergence_metrics(tr, Equilibrium{});
    CHECK(rep.distances.back() > 0.1);
    CHECK(rep.final_over_initial > 5.0);
    CHECK_FALSE(rep.monotone_tail);
}

TEST_CASE("diverging run stops at the bound with the step recorded") {
    const ParamSet p{2.0, -0.2, -0.03, -0.02, -0.001, 0.8};
    const Trajectory tr = integrate(p, Equilibrium{}, {0.01, 2000, 0.01}, true);
    REQUIRE(tr.diverged_at.has_value());
    CHECK(*tr.diverged_at < 2000);
    CHECK(tr.states.size() == *tr.diverged_at + 1);
    for (const State5& s : tr.states) CHECK(s.finite());
    CHECK(max_abs(tr.states.back()) > kDivergenceBound);
}

TEST_CASE("identical inputs give bit-identical trajectories") {
    const ParamSet p{-0.45, 1.0, -0.2, -0.15, 1.01, 0.8};
    const Equilibrium xe{1.0, 0.6};
    const Trajectory a = integrate(p, xe, {0.01, 500, 0.01}, true);
    const Trajectory b = integrate(p, xe, {0.01, 500, 0.01}, true);
    REQUIRE(a.states.size() == b.states.size());
    for (std::size_t j = 0; j < a.states.size(); ++j) REQUIRE(a.states[j] == b.states[j]);
}

TEST_CASE("convergence metrics reject empty input") {
    Trajectory tr;
    CHECK_THROWS_AS(convergence_metrics(tr, Equilibrium{}), std::invalid_argument);
}
