#include "fractoda/integrator.hpp"

#include <cmath>
#include <stdexcept>

#include "fractoda/gamma.hpp"
#include "fractoda/systems.hpp"

namespace fractoda {

double fem_coefficient(double h, double q) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw std::invalid_argument("fem_coefficient: step size h must be positive");
    }
    if (!(q > 0.0) || q > 1.0) {
        throw OrderOutOfRange("fem_coefficient: order q must lie in (0, 1]");
    }
    return std::pow(h, q) / gamma_fn(q + 1.0);
}

Trajectory integrate(const ParamSet& p, const Equilibrium& xe, const IntegratorConfig& cfg,
                     bool controlled, const std::optional<State5>& perturbation) {
    require_valid(p);
    if (auto issue = validate_integrator_config(cfg)) {
        throw std::invalid_argument("integrate: " + *issue);
    }

    Trajectory tr;
    tr.params = p;
    tr.target = xe;
    tr.config = cfg;
    tr.controlled = controlled;
    tr.kappa = fem_coefficient(cfg.h, p.q);

    const State5 offset =
        perturbation ? *perturbation
                     : State5{cfg.epsilon, cfg.epsilon, cfg.epsilon, cfg.epsilon, cfg.epsilon};
    require_finite(offset, "integrate: perturbation");

    State5 x = xe.to_state() + offset;
    const std::size_t total = static_cast<std::size_t>(cfg.steps);
    tr.times.reserve(total + 1);
    tr.states.reserve(total + 1);
    tr.times.push_back(0.0);
    tr.states.push_back(x);

    auto field = [&](const State5& s) {
        return controlled ? eval_controlled(s, p, xe) : eval_uncontrolled(s, p);
    };
    for (std::size_t j = 1; j <= total; ++j) {
        x = fem_step(x, field, tr.kappa);
        tr.times.push_back(static_cast<double>(j) * cfg.h);
        tr.states.push_back(x);
        if (!x.finite() || max_abs(x) > kDivergenceBound) {
            tr.diverged_at = j;
            break;
        }
    }
    return tr;
}

ConvergenceReport convergence_metrics(const Trajectory& tr, const Equilibrium& xe) {
    if (tr.states.empty()) {
        throw std::invalid_argument("convergence_metrics: empty trajectory");
    }
    ConvergenceReport rep;
    const State5 target = xe.to_state();
    rep.distances.reserve(tr.states.size());
    for (const State5& s : tr.states) rep.distances.push_back(distance(s, target));

    const double d0 = rep.distances.front();
    const double dN = rep.distances.back();
    rep.final_over_initial = (d0 == 0.0) ? 0.0 : dN / d0;

    const std::size_t start = rep.distances.size() / 2;
    rep.monotone_tail = true;
    for (std::size_t j = start; j + 1 < rep.distances.size(); ++j) {
        if (rep.distances[j + 1] > rep.distances[j]) {
            rep.monotone_tail = false;
            break;
        }
    }
    return rep;
}

}  // namespace fractoda
