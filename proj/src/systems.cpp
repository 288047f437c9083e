#include "fractoda/systems.hpp"

#include <cmath>
#include <string>

namespace fractoda {

TodaLatticeState eval_toda_lattice(const TodaLatticeState& s) {
    const std::size_t n = s.x.size();
    if (n < 2) {
        throw DimensionMismatch("eval_toda_lattice: need at least 2 sites, got " +
                                std::to_string(n));
    }
    if (s.y.size() != n - 1) {
        throw DimensionMismatch("eval_toda_lattice: expected " + std::to_string(n - 1) +
                                " coupling variables, got " + std::to_string(s.y.size()));
    }
    for (double v : s.x) {
        if (!std::isfinite(v)) throw NonFiniteState("eval_toda_lattice: non-finite site variable");
    }
    for (double v : s.y) {
        if (!std::isfinite(v)) throw NonFiniteState("eval_toda_lattice: non-finite coupling variable");
    }

    TodaLatticeState d;
    d.x.resize(n);
    d.y.resize(n - 1);
    auto y_at = [&](std::size_t j) -> double {
        // boundary: y_0 = y_n = 0 (1-based j)
        return (j == 0 || j == n) ? 0.0 : s.y[j - 1];
    };
    for (std::size_t i = 1; i <= n; ++i) {
        const double yi = y_at(i);
        const double yim1 = y_at(i - 1);
        d.x[i - 1] = 2.0 * (yi * yi - yim1 * yim1);
    }
    for (std::size_t j = 1; j <= n - 1; ++j) {
        d.y[j - 1] = s.y[j - 1] * (s.x[j] - s.x[j - 1]);
    }
    return d;
}

Mat5 quad_coupling_x4() {
    return Mat5{{{0, 0, 0, 2, 0},
                 {0, 0, 0, -2, 0},
                 {0, 0, 0, 0, 0},
                 {-1, 1, 0, 0, 0},
                 {0, 0, 0, 0, 0}}};
}

Mat5 quad_coupling_x5() {
    return Mat5{{{0, 0, 0, 0, 0},
                 {0, 0, 0, 0, 2},
                 {0, 0, 0, 0, -2},
                 {0, 0, 0, 0, 0},
                 {0, -1, 1, 0, 0}}};
}

Mat5 linear_part(double a, double b) {
    Mat5 m{};
    m[0][0] = a;
    m[4][4] = b;
    return m;
}

State5 eval_uncontrolled(const State5& s, const ParamSet& p) {
    require_valid(p);
    require_finite(s, "eval_uncontrolled");
    return {
        2.0 * s.x4 * s.x4 + p.a * s.x1,
        2.0 * (s.x5 * s.x5 - s.x4 * s.x4),
        -2.0 * s.x5 * s.x5,
        s.x4 * (s.x2 - s.x1),
        s.x5 * (s.x3 - s.x2) + p.b * s.x5,
    };
}

State5 eval_matrix_form(const State5& s, const ParamSet& p) {
    require_valid(p);
    require_finite(s, "eval_matrix_form");
    const State5 q4 = mat_vec(quad_coupling_x4(), s);
    const State5 q5 = mat_vec(quad_coupling_x5(), s);
    const State5 lin = mat_vec(linear_part(p.a, p.b), s);
    return (s.x4 * q4) + (s.x5 * q5) + lin;
}

State5 control_feedback(const State5& s, const ParamSet& p, const Equilibrium& xe) {
    return {
        0.0,
        p.c1 * (s.x2 - xe.k),
        p.c2 * (s.x3 - xe.m),
        p.c3 * (s.x4 - 0.0),
        0.0,
    };
}

State5 eval_controlled(const State5& s, const ParamSet& p, const Equilibrium& xe) {
    return eval_uncontrolled(s, p) + control_feedback(s, p, xe);
}

Mat5 jacobian_uncontrolled(const State5& s, const ParamSet& p) {
    return Mat5{{{p.a, 0, 0, 4.0 * s.x4, 0},
                 {0, 0, 0, -4.0 * s.x4, 4.0 * s.x5},
                 {0, 0, 0, 0, -4.0 * s.x5},
                 {-s.x4, s.x4, 0, s.x2 - s.x1, 0},
                 {0, -s.x5, s.x5, 0, s.x3 - s.x2 + p.b}}};
}

Mat5 jacobian_controlled(const State5& s, const ParamSet& p, const Equilibrium& xe) {
    (void)xe;  // the feedback Jacobian does not depend on the target point
    Mat5 j = jacobian_uncontrolled(s, p);
    j[1][1] += p.c1;
    j[2][2] += p.c2;
    j[3][3] += p.c3;
    return j;
}

bool is_equilibrium(const State5& s, const ParamSet& p, double tol) {
    if (!(tol >= 0.0)) {
        throw std::invalid_argument("is_equilibrium: tolerance must be >= 0");
    }
    return max_abs(eval_uncontrolled(s, p)) <= tol;
}

double lipschitz_bound(double x0_norm, double delta, const ParamSet& p) {
    if (!(delta > 0.0)) {
        throw std::invalid_argument("lipschitz_bound: delta must be positive");
    }
    if (!(x0_norm >= 0.0)) {
        throw std::invalid_argument("lipschitz_bound: x0_norm must be nonnegative");
    }
    return 2.0 * std::sqrt(10.0) + std::sqrt(p.a * p.a + p.b * p.b) +
           3.0 * (x0_norm + delta);
}

}  // namespace fractoda
