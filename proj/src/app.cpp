#include "fractoda/app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "fractoda/systems.hpp"

namespace fractoda::app {

namespace {

std::string g10(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

std::string format_eigenvalue(const std::complex<double>& z) {
    if (std::fabs(z.imag()) <= 1e-12) return g10(z.real());
    return g10(z.real()) + (z.imag() < 0 ? "-" : "+") + g10(std::fabs(z.imag())) + "i";
}

std::array<std::complex<double>, 5> sorted_spectrum(const EigenSet& e) {
    std::array<std::complex<double>, 5> s = e.lambdas;
    std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return s;
}

AnalyzeReport run_analyze(const AnalyzeRequest& req) {
    require_valid(req.params);

    AnalyzeReport rep;
    rep.closed_form = eigvals_equilibrium(req.target, req.params, req.controlled);

    const State5 at = req.target.to_state();
    const Mat5 jac = req.controlled
                         ? jacobian_controlled(at, req.params, req.target)
                         : jacobian_uncontrolled(at, req.params);
    rep.general = eigvals_general(jac);

    const auto lhs = sorted_spectrum(rep.closed_form);
    const auto rhs = sorted_spectrum(rep.general);
    for (std::size_t i = 0; i < 5; ++i) {
        rep.route_gap = std::max(rep.route_gap, std::abs(lhs[i] - rhs[i]));
    }

    rep.q_tilde = critical_order(rep.closed_form);
    rep.verdict = matignon(rep.closed_form, req.params.q);
    if (req.controlled) {
        rep.rules = cross_check(req.target, req.params, req.params.q);
    }
    return rep;
}

void print_analyze(std::ostream& out, const AnalyzeRequest& req, const AnalyzeReport& rep) {
    const ParamSet& p = req.params;
    out << "system      : " << (req.controlled ? "controlled" : "uncontrolled") << "\n";
    out << "equilibrium : (0, " << g10(req.target.k) << ", " << g10(req.target.m)
        << ", 0, 0)\n";
    out << "parameters  : a=" << g10(p.a) << " b=" << g10(p.b) << " c1=" << g10(p.c1)
        << " c2=" << g10(p.c2) << " c3=" << g10(p.c3) << " q=" << g10(p.q) << "\n";
    if (p.q == 1.0) {
        out << "warning     : q = 1 is the classical limit; the stability theory assumes q in (0, 1)\n";
    }

    auto print_spectrum = [&](const char* label, const EigenSet& e) {
        out << label;
        for (std::size_t i = 0; i < 5; ++i) {
            out << (i ? ", " : "") << format_eigenvalue(e.lambdas[i]);
        }
        out << "\n";
    };
    print_spectrum("eigenvalues (closed form): ", rep.closed_form);
    print_spectrum("eigenvalues (qr solver)  : ", rep.general);
    out << "route gap   : " << g10(rep.route_gap) << "\n";

    out << "q_tilde     : ";
    if (rep.q_tilde) out << g10(*rep.q_tilde) << "\n";
    else out << "zero-eigenvalue\n";

    out << "verdict     : " << to_string(rep.verdict.kind) << " (witness "
        << format_eigenvalue(rep.verdict.witness) << ") at q=" << g10(p.q) << "\n";

    if (rep.rules) {
        const CrossCheck& cc = *rep.rules;
        out << "region rule : " << to_string(cc.rule) << " -> " << to_string(cc.closed_form.kind)
            << "\n";
        out << "cross check : ";
        switch (cc.agreement) {
            case Agreement::Agree: out << "routes agree\n"; break;
            case Agreement::Disagree:
                out << "ROUTES DISAGREE (closed form " << to_string(cc.closed_form.kind)
                    << ", eigenvalues " << to_string(cc.eigen_route.kind) << ")\n";
                break;
            case Agreement::ClosedFormUndetermined:
                out << "closed form undetermined for these parameters\n";
                break;
        }
    }
}

SimulateOutcome run_simulate(const RunConfig& cfg, const std::optional<std::string>& svg_prefix,
                             const std::optional<State5>& perturbation) {
    require_valid(cfg.params);
    if (auto issue = validate_integrator_config(cfg.integ)) {
        throw ConfigError("simulate: " + *issue);
    }

    SimulateOutcome out;
    out.trajectory = integrate(cfg.params, cfg.target, cfg.integ, cfg.controlled, perturbation);
    out.diverged = out.trajectory.diverged_at.has_value();
    out.csv_path = cfg.out;
    write_trajectory_csv_file(out.csv_path, out.trajectory);
    if (svg_prefix) {
        out.svg_paths = write_orbit_svgs(out.trajectory, *svg_prefix);
    }
    return out;
}

bool is_sweep_field(const std::string& name) {
    static const char* const kFields[] = {"a", "b", "c1", "c2", "c3", "k", "m", "q"};
    return std::any_of(std::begin(kFields), std::end(kFields),
                       [&](const char* f) { return name == f; });
}

std::vector<double> axis_values(const SweepAxis& axis) {
    if (axis.count < 1) throw ConfigError("sweep axis '" + axis.field + "': count must be >= 1");
    if (!std::isfinite(axis.lo) || !std::isfinite(axis.hi)) {
        throw ConfigError("sweep axis '" + axis.field + "': bounds must be finite");
    }
    if (axis.lo > axis.hi) {
        throw ConfigError("sweep axis '" + axis.field + "': lower bound above upper bound");
    }
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(axis.count));
    if (axis.count == 1) {
        values.push_back(axis.lo);
        return values;
    }
    const double step = (axis.hi - axis.lo) / static_cast<double>(axis.count - 1);
    for (int i = 0; i < axis.count; ++i) {
        values.push_back(axis.lo + step * static_cast<double>(i));
    }
    return values;
}

SweepAxis parse_sweep_axis(const std::string& text) {
    SweepAxis axis;
    std::array<std::string, 4> parts;
    std::size_t start = 0;
    for (int i = 0; i < 4; ++i) {
        const auto colon = text.find(':', start);
        const bool last = (i == 3);
        if ((colon == std::string::npos) != last) {
            throw ConfigError("sweep axis '" + text + "': expected field:lo:hi:count");
        }
        parts[i] = text.substr(start, last ? std::string::npos : colon - start);
        start = colon + 1;
    }
    axis.field = parts[0];
    if (!is_sweep_field(axis.field)) {
        throw ConfigError("sweep axis field '" + axis.field +
                          "' is not one of a,b,c1,c2,c3,k,m,q");
    }
    try {
        axis.lo = std::stod(parts[1]);
        axis.hi = std::stod(parts[2]);
        axis.count = std::stoi(parts[3]);
    } catch (const std::exception&) {
        throw ConfigError("sweep axis '" + text + "': malformed number");
    }
    return axis;
}

namespace {

void apply_field(RunConfig& cfg, const std::string& field, double value) {
    if (field == "a") cfg.params.a = value;
    else if (field == "b") cfg.params.b = value;
    else if (field == "c1") cfg.params.c1 = value;
    else if (field == "c2") cfg.params.c2 = value;
    else if (field == "c3") cfg.params.c3 = value;
    else if (field == "k") cfg.target.k = value;
    else if (field == "m") cfg.target.m = value;
    else if (field == "q") cfg.params.q = value;
}

SweepRow eval_cell(const RunConfig& base, const SweepAxis& a1, const SweepAxis& a2, double v1,
                   double v2) {
    SweepRow row;
    row.v1 = v1;
    row.v2 = v2;
    RunConfig cfg = base;
    apply_field(cfg, a1.field, v1);
    apply_field(cfg, a2.field, v2);
    if (validate_params(cfg.params)) {
        row.verdict = kSkippedCellCode;  // zero gain or q out of range in this cell
        return row;
    }
    const EigenSet eigs = eigvals_equilibrium(cfg.target, cfg.params, cfg.controlled);
    row.verdict = verdict_code(matignon(eigs, cfg.params.q).kind);
    row.q_tilde = critical_order(eigs);
    return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const RunConfig& base, const SweepAxis& a1, const SweepAxis& a2,
                                unsigned threads) {
    if (a1.field == a2.field) {
        throw ConfigError("sweep: the two axes must use different fields");
    }
    const std::vector<double> v1 = axis_values(a1);
    const std::vector<double> v2 = axis_values(a2);
    const std::size_t total = v1.size() * v2.size();
    std::vector<SweepRow> rows(total);

    const unsigned workers =
        std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total)));
    std::mutex failure_mutex;
    std::exception_ptr failure;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < total; i += workers) {
                    const std::size_t r = i / v2.size();
                    const std::size_t c = i % v2.size();
                    rows[i] = eval_cell(base, a1, a2, v1[r], v2[c]);
                }
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

unsigned sweep_threads() {
    if (const char* env = std::getenv("FRACTODA_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

ReproduceOutcome run_reproduce(const std::string& id) {
    const ReferenceCase* found = nullptr;
    for (const ReferenceCase& c : reference_cases()) {
        if (c.id == id) {
            found = &c;
            break;
        }
    }
    if (!found) {
        throw UnknownExample("unknown reference case '" + id +
                             "'; known ids: 3.1.1 3.1.2 3.2.1 3.2.2 3.3.1 3.3.2 3.4.1 3.4.2 "
                             "3.5.1 3.5.2 4.1");
    }

    ReproduceOutcome out;
    out.ref = *found;
    out.analysis = run_analyze({found->params, found->target, /*controlled=*/true});
    out.match = out.analysis.verdict.kind == found->claimed;

    if (found->run_integration) {
        RunConfig cfg;
        cfg.params = found->params;
        cfg.target = found->target;
        cfg.integ = found->integ;
        cfg.controlled = true;
        cfg.out = "reproduce_" + found->id + ".csv";
        out.simulation = run_simulate(cfg, "reproduce_" + found->id);
    }
    return out;
}

void print_reproduce(std::ostream& out, const ReproduceOutcome& o) {
    const ReferenceCase& c = o.ref;
    out << "case " << c.id << ": equilibrium (k=" << g10(c.target.k) << ", m=" << g10(c.target.m)
        << "), q=" << g10(c.params.q) << "\n";
    out << "  parameters : a=" << g10(c.params.a) << " b=" << g10(c.params.b)
        << " c1=" << g10(c.params.c1) << " c2=" << g10(c.params.c2) << " c3=" << g10(c.params.c3)
        << "\n";
    out << "  claimed    : " << c.claim << "\n";
    out << "  computed   : " << to_string(o.analysis.verdict.kind) << " (witness "
        << format_eigenvalue(o.analysis.verdict.witness) << ")\n";
    out << "  eigenvalues: ";
    for (std::size_t i = 0; i < 5; ++i) {
        out << (i ? ", " : "") << format_eigenvalue(o.analysis.closed_form.lambdas[i]);
    }
    out << "\n";
    if (o.simulation) {
        const Trajectory& tr = o.simulation->trajectory;
        out << "  integration: " << tr.states.size() << " points"
            << (o.simulation->diverged ? " (diverged)" : "") << " -> " << o.simulation->csv_path;
        for (const std::string& p : o.simulation->svg_paths) out << ", " << p;
        out << "\n";
        out << "  final dist : "
            << g10(distance(tr.states.back(), c.target.to_state())) << "\n";
    }
    out << "  result     : " << (o.match ? "MATCH" : "MISMATCH") << "\n";
}

}  // namespace fractoda::app
