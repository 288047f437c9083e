#include <doctest.h>

#include <cmath>
#include <limits>

#include "fractoda/systems.hpp"
#include "fractoda/types.hpp"
#include "helpers.hpp"

using namespace fractoda;

TEST_CASE("equilibrium embeds as (0, k, m, 0, 0)") {
    CHECK(Equilibrium{0.0, 0.0}.to_state() == State5{0, 0, 0, 0, 0});
    CHECK(Equilibrium{1.0, 0.6}.to_state() == State5{0, 1.0, 0.6, 0, 0});
    CHECK(Equilibrium{-1.0, 2.0}.to_state() == State5{0, -1.0, 2.0, 0, 0});
    CHECK(Equilibrium{0.0, 0.0}.is_origin());
    CHECK_FALSE(Equilibrium{0.0, 0.1}.is_origin());
}

TEST_CASE("embedding is injective and lands in the zero set of the field") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Equilibrium e{testutil::draw_uniform(rng, -10, 10),
                            testutil::draw_uniform(rng, -10, 10)};
        const ParamSet p = testutil::draw_params(rng);
        const State5 s = e.to_state();
        CHECK(s.x2 == e.k);
        CHECK(s.x3 == e.m);
        // exact zero, not merely small
        CHECK(is_equilibrium(s, p, 0.0));
    }
}

TEST_CASE("parameter validation") {
    ParamSet ok{-0.8, -0.2, -0.03, -0.02, -0.001, 0.8};
    CHECK_FALSE(validate_params(ok).has_value());

    SUBCASE("zero gain is rejected with the field name") {
        ParamSet p = ok;
        p.a = 0.0;
        auto issue = validate_params(p);
        REQUIRE(issue.has_value());
        CHECK(issue->kind == ParamIssue::Kind::ZeroParameter);
        CHECK(issue->field == "a");
        CHECK_THROWS_AS(require_valid(p), std::invalid_argument);
    }
    SUBCASE("each gain is checked") {
        for (const char* field : {"b", "c1", "c2", "c3"}) {
            ParamSet p = ok;
            if (field[0] == 'b') p.b = 0.0;
            else if (field[1] == '1') p.c1 = 0.0;
            else if (field[1] == '2') p.c2 = 0.0;
            else p.c3 = 0.0;
            auto issue = validate_params(p);
            REQUIRE(issue.has_value());
            CHECK(issue->field == field);
        }
    }
    SUBCASE("order out of range") {
        ParamSet p = ok;
        p.q = 1.2;
        auto issue = validate_params(p);
        REQUIRE(issue.has_value());
        CHECK(issue->kind == ParamIssue::Kind::OrderOutOfRange);
        p.q = 0.0;
        CHECK(validate_params(p).has_value());
        p.q = -0.1;
        CHECK(validate_params(p).has_value());
    }
    SUBCASE("q = 1 is admitted as the classical limit") {
        ParamSet p = ok;
        p.q = 1.0;
        CHECK_FALSE(validate_params(p).has_value());
    }
    SUBCASE("non-finite values are rejected") {
        ParamSet p = ok;
        p.b = std::numeric_limits<double>::quiet_NaN();
        auto issue = validate_params(p);
        REQUIRE(issue.has_value());
        CHECK(issue->kind == ParamIssue::Kind::NonFiniteParameter);
    }
}

TEST_CASE("state indexing, norms, finiteness") {
    State5 s{1, 2, 3, 4, 5};
    for (std::size_t i = 0; i < 5; ++i) CHECK(s[i] == double(i + 1));
    s[4] = -5;
    CHECK(s.x5 == -5);
    CHECK(norm(State5{3, 4, 0, 0, 0}) == doctest::Approx(5.0));
    CHECK(distance(State5{1, 0, 0, 0, 0}, State5{0, 0, 0, 0, 0}) == doctest::Approx(1.0));
    CHECK(max_abs(s) == 5.0);

    CHECK(s.finite());
    s.x2 = std::numeric_limits<double>::infinity();
    CHECK_FALSE(s.finite());
    CHECK_THROWS_AS(require_finite(s, "test"), NonFiniteState);
    CHECK_THROWS_AS((void)s[5], std::out_of_range);
}

TEST_CASE("eigen set derives the critical order") {
    using C = std::complex<double>;
    SUBCASE("all negative reals give exactly 2") {
        auto e = EigenSet::from({C(-1), C(-2), C(-3), C(-4), C(-5)});
        REQUIRE(e.q_tilde.has_value());
        CHECK(*e.q_tilde == 2.0);
    }
    SUBCASE("complex pair at 45 degrees gives exactly 1/2") {
        auto e = EigenSet::from({C(1, 1), C(1, -1), C(-1), C(-1), C(-1)});
        REQUIRE(e.q_tilde.has_value());
        CHECK(*e.q_tilde == 0.5);
    }
    SUBCASE("zero eigenvalue raises the marker") {
        auto e = EigenSet::from({C(0), C(-1), C(-1), C(-1), C(-1)});
        CHECK_FALSE(e.q_tilde.has_value());
        auto tiny = EigenSet::from({C(5e-13), C(-1), C(-1), C(-1), C(-1)});
        CHECK_FALSE(tiny.q_tilde.has_value());
    }
    SUBCASE("positive real pins the order to 0") {
        auto e = EigenSet::from({C(2), C(-1), C(-1), C(-1), C(-1)});
        REQUIRE(e.q_tilde.has_value());
        CHECK(*e.q_tilde == 0.0);
    }
}

TEST_CASE("integrator configuration invariants") {
    IntegratorConfig ok{0.01, 100, 0.01};
    CHECK_FALSE(validate_integrator_config(ok).has_value());
    CHECK(ok.horizon() == doctest::Approx(1.0));

    CHECK(validate_integrator_config({0.0, 100, 0.01}).has_value());
    CHECK(validate_integrator_config({-0.1, 100, 0.01}).has_value());
    CHECK(validate_integrator_config({0.01, 0, 0.01}).has_value());
    CHECK(validate_integrator_config({0.01, 100, std::numeric_limits<double>::infinity()})
              .has_value());
}
