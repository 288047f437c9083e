#pragma once

// Vector fields and Jacobians of the 5-state lattice system, with and
// without linear feedback, plus the generic n-site lattice field, the
// equilibrium predicate and the Lipschitz existence bound.

#include <vector>

#include "fractoda/types.hpp"

namespace fractoda {

// ---------------------------------------------------------------------------
// Generic n-site lattice
// ---------------------------------------------------------------------------

/// State of the n-site lattice: n site variables x and n-1 coupling
/// variables y, with the implicit boundary y[0] = y[n] = 0.
struct TodaLatticeState {
    std::vector<double> x;
    std::vector<double> y;

    [[nodiscard]] std::size_t sites() const { return x.size(); }
};

/// Lattice field: Dx_i = 2(y_i^2 - y_{i-1}^2), Dy_j = y_j (x_{j+1} - x_j),
/// boundary y_0 = y_n = 0.  Requires n >= 2 and |y| = |x| - 1.
TodaLatticeState eval_toda_lattice(const TodaLatticeState& s);

// ---------------------------------------------------------------------------
// Constant matrices of the bilinear form
// ---------------------------------------------------------------------------

/// The field decomposes as x4*Q4*x + x5*Q5*x + L(a,b)*x.
Mat5 quad_coupling_x4();
Mat5 quad_coupling_x5();
Mat5 linear_part(double a, double b);

// ---------------------------------------------------------------------------
// 5-state fields
// ---------------------------------------------------------------------------

/// Componentwise field without feedback:
///   (2 x4^2 + a x1, 2(x5^2 - x4^2), -2 x5^2, x4 (x2 - x1), x5 (x3 - x2) + b x5).
State5 eval_uncontrolled(const State5& s, const ParamSet& p);

/// Same field assembled as x4*Q4*x + x5*Q5*x + L*x; agrees with
/// eval_uncontrolled componentwise to round-off.
State5 eval_matrix_form(const State5& s, const ParamSet& p);

/// Feedback terms (0, c1 (x2 - k), c2 (x3 - m), c3 x4, 0) steering toward
/// the equilibrium (0, k, m, 0, 0).  Components 1 and 5 carry no control.
State5 control_feedback(const State5& s, const ParamSet& p, const Equilibrium& xe);

/// Field with feedback: eval_uncontrolled + control_feedback, added
/// componentwise in exactly that order.
State5 eval_controlled(const State5& s, const ParamSet& p, const Equilibrium& xe);

// ---------------------------------------------------------------------------
// Jacobians
// ---------------------------------------------------------------------------

Mat5 jacobian_uncontrolled(const State5& s, const ParamSet& p);

/// Adds c1, c2 to diagonal entries (2,2), (3,3) and c3 to (4,4).
Mat5 jacobian_controlled(const State5& s, const ParamSet& p, const Equilibrium& xe);

// ---------------------------------------------------------------------------
// Predicates and bounds
// ---------------------------------------------------------------------------

/// True iff max_i |f_i(s)| <= tol for the uncontrolled field.  tol >= 0.
bool is_equilibrium(const State5& s, const ParamSet& p, double tol);

/// Lipschitz constant certifying existence/uniqueness on the box of
/// radius delta around the initial state:
///   L = 2*sqrt(10) + sqrt(a^2 + b^2) + 3*(x0_norm + delta).
double lipschitz_bound(double x0_norm, double delta, const ParamSet& p);

}  // namespace fractoda
