#pragma once

// Eigenvalue computation (closed form at equilibria, Hessenberg + shifted
// QR for general matrices), the fractional-order stability test, the
// critical order, and the closed-form parameter-region rules with a
// cross-check between the two routes.

#include "fractoda/types.hpp"

namespace fractoda {

// ---------------------------------------------------------------------------
// Eigenvalues
// ---------------------------------------------------------------------------

/// Closed-form spectrum of the Jacobian at the equilibrium (0, k, m, 0, 0).
/// Controlled: (a, c1, c2, c3 + k, b - k + m).
/// Uncontrolled: (a, 0, 0, k, m - k + b), zero with algebraic multiplicity 2.
EigenSet eigvals_equilibrium(const Equilibrium& xe, const ParamSet& p, bool controlled);

/// All five eigenvalues of a general real 5x5 matrix via Hessenberg
/// reduction and shifted QR iteration (Wilkinson shift, iteration budget
/// 100 * n).  Matrices that are already triangular within 1e-14 short-cut
/// to their diagonal.  Throws NoConvergence (with partial results) if the
/// budget is exhausted.
EigenSet eigvals_general(const Mat5& m);

// ---------------------------------------------------------------------------
// Stability tests
// ---------------------------------------------------------------------------

/// Fractional-order linear stability test at order q in (0, 1]:
///  - UnstableZeroEigenvalue when any |lambda| <= kZeroEigenTol,
///  - Unstable when some nonzero lambda has |arg lambda| < q*pi/2 (beyond
///    the critical band),
///  - CriticallyStable when the minimal |arg lambda| lies within
///    kCriticalArgTol of q*pi/2 and the critical eigenvalue is simple,
///  - AsymptoticallyStable otherwise.
/// arg uses the principal value in (-pi, pi], so |arg| of a negative real
/// is pi.  Throws OrderOutOfRange for q outside (0, 1].
StabilityVerdict matignon(const EigenSet& e, double q);

/// Critical order q_tilde = min over nonzero lambda of (2/pi)|arg lambda|,
/// clamped to [0, 2].  Empty when the spectrum contains a zero eigenvalue.
/// The test above is AsymptoticallyStable for q < q_tilde and not
/// asymptotically stable for q > q_tilde.
std::optional<double> critical_order(const EigenSet& e);

// ---------------------------------------------------------------------------
// Closed-form region rules
// ---------------------------------------------------------------------------

/// Identifier of a closed-form classification rule.  Each rule covers one
/// equilibrium family of the controlled system:
///   P31 - origin (k = m = 0)
///   P32 - general (k, m) != (0, 0)
///   C31 - m = 0, k != 0
///   C32 - k = 0, m != 0
///   C33 - k = m != 0
enum class RegionRule { P31, P32, C31, C32, C33 };

const char* to_string(RegionRule r);

/// Most specific rule whose family contains the equilibrium.
RegionRule rule_for(const Equilibrium& xe);

/// Evaluates the rule's sign and interval conditions literally.  Strict
/// inequalities only: parameter combinations on a clause boundary (and
/// corners no clause covers) return Undetermined rather than a guess.
/// Throws RuleFamilyMismatch when the equilibrium is outside the rule's
/// family.
StabilityVerdict classify_closed_form(RegionRule rule, const Equilibrium& xe, const ParamSet& p);

// ---------------------------------------------------------------------------
// Route cross-check
// ---------------------------------------------------------------------------

enum class Agreement { Agree, Disagree, ClosedFormUndetermined };

struct CrossCheck {
    RegionRule rule;
    StabilityVerdict closed_form;
    StabilityVerdict eigen_route;
    EigenSet eigs;
    Agreement agreement;
};

/// Runs both the applicable closed-form rule and the eigenvalue route on
/// the controlled system and reports both verdicts plus an agreement flag.
/// Disagreements are reported, never silently resolved.
CrossCheck cross_check(const Equilibrium& xe, const ParamSet& p, double q);

}  // namespace fractoda
