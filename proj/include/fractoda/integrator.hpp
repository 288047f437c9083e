#pragma once

// Fixed-step fractional Euler scheme
//   x_{j+1} = x_j + (h^q / Gamma(q+1)) * f(x_j),
// trajectories of the (controlled) 5-state system and convergence
// diagnostics toward a target equilibrium.
//
// The scheme is memoryless by construction (no convolution term); at
// q = 1 the coefficient collapses to h and the scheme is the classical
// forward Euler method, bit for bit.

#include <functional>
#include <vector>

#include "fractoda/types.hpp"

namespace fractoda {

/// Any coordinate beyond this magnitude stops the run with a Diverged
/// marker instead of letting the state overflow to infinity.
inline constexpr double kDivergenceBound = 1e12;

/// Per-run step coefficient kappa = h^q / Gamma(q+1), computed once.
double fem_coefficient(double h, double q);

/// One scheme step with a precomputed coefficient.  The update order is
/// pinned: evaluate the field, scale each component by kappa, add.
template <typename Field>
State5 fem_step(const State5& x, Field&& field, double kappa) {
    const State5 f = field(x);
    return {x.x1 + kappa * f.x1, x.x2 + kappa * f.x2, x.x3 + kappa * f.x3,
            x.x4 + kappa * f.x4, x.x5 + kappa * f.x5};
}

/// Convenience overload computing the coefficient from (h, q).
template <typename Field>
State5 fem_step(const State5& x, Field&& field, double h, double q) {
    return fem_step(x, std::forward<Field>(field), fem_coefficient(h, q));
}

/// Time-indexed trajectory with the inputs that produced it.
struct Trajectory {
    std::vector<double> times;   // t_j = j*h, j = 0..N (or up to the stop index)
    std::vector<State5> states;  // same length as times
    ParamSet params;
    Equilibrium target;
    IntegratorConfig config;
    bool controlled = true;
    double kappa = 0.0;
    /// Index of the first recorded state past kDivergenceBound, if any.
    std::optional<std::size_t> diverged_at;
};

/// Integrates from x(0) = target + epsilon*(1,1,1,1,1) (or the given
/// perturbation vector) for N steps, recording all N+1 states.  Stops
/// early with the Diverged marker when a coordinate leaves
/// [-kDivergenceBound, kDivergenceBound].
Trajectory integrate(const ParamSet& p, const Equilibrium& xe, const IntegratorConfig& cfg,
                     bool controlled, const std::optional<State5>& perturbation = std::nullopt);

/// Distance diagnostics of a trajectory against a target equilibrium.
struct ConvergenceReport {
    std::vector<double> distances;  // d_j = |x_j - xe|
    double final_over_initial = 0.0;  // 0 when the initial distance is 0
    bool monotone_tail = false;       // d_j nonincreasing over the last half
};

ConvergenceReport convergence_metrics(const Trajectory& tr, const Equilibrium& xe);

}  // namespace fractoda
