#pragma once

// Command drivers behind the CLI subcommands (simulate / analyze / sweep /
// reproduce).  The CLI binary is a thin argument-parsing shell around
// these, so tests exercise the same code paths.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fractoda/integrator.hpp"
#include "fractoda/output.hpp"
#include "fractoda/run_config.hpp"
#include "fractoda/stability.hpp"
#include "fractoda/types.hpp"

namespace fractoda::app {

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

struct AnalyzeRequest {
    ParamSet params{};
    Equilibrium target{};
    bool controlled = true;
};

struct AnalyzeReport {
    EigenSet closed_form;  // diagonal route
    EigenSet general;      // QR route on the Jacobian at the equilibrium
    double route_gap = 0.0;  // max distance between the sorted spectra
    std::optional<double> q_tilde;
    StabilityVerdict verdict;            // test at params.q (closed-form spectrum)
    std::optional<CrossCheck> rules;     // closed-form region rule; controlled only
};

AnalyzeReport run_analyze(const AnalyzeRequest& req);
void print_analyze(std::ostream& out, const AnalyzeRequest& req, const AnalyzeReport& rep);

/// "re" for (near-)real values, "re+imi" otherwise.
std::string format_eigenvalue(const std::complex<double>& z);

/// Spectrum sorted by (re, im); used to pair the two routes.
std::array<std::complex<double>, 5> sorted_spectrum(const EigenSet& e);

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimulateOutcome {
    Trajectory trajectory;
    std::string csv_path;
    std::vector<std::string> svg_paths;
    bool diverged = false;
};

/// Integrates per the config, writes the trajectory CSV to cfg.out and,
/// when svg_prefix is given, the five per-coordinate orbit SVGs.
/// A diverged run still writes the partial CSV.  `perturbation` replaces
/// the default epsilon*(1,1,1,1,1) initial offset.
SimulateOutcome run_simulate(const RunConfig& cfg, const std::optional<std::string>& svg_prefix,
                             const std::optional<State5>& perturbation = std::nullopt);

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepAxis {
    std::string field;  // one of a, b, c1, c2, c3, k, m, q
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;
};

bool is_sweep_field(const std::string& name);

/// Grid points of one axis: count >= 2 spaces lo..hi evenly; count == 1
/// degenerates to the single value lo.
std::vector<double> axis_values(const SweepAxis& axis);

/// Parses "field:lo:hi:count".  Throws ConfigError on malformed axes.
SweepAxis parse_sweep_axis(const std::string& text);

/// Evaluates the equilibrium eigenvalue route over the grid, row-major
/// (axis1 outer, axis2 inner).  Cells whose parameter set is invalid
/// (zero gain from a sign-crossing grid, q outside (0,1]) are marked
/// skipped, not errored.  Cells evaluate concurrently on up to `threads`
/// workers; the row order of the result is deterministic regardless.
std::vector<SweepRow> run_sweep(const RunConfig& base, const SweepAxis& a1, const SweepAxis& a2,
                                unsigned threads);

/// FRACTODA_THREADS when set (minimum 1), machine parallelism otherwise.
unsigned sweep_threads();

// ---------------------------------------------------------------------------
// reproduce
// ---------------------------------------------------------------------------

/// One published reference case: parameters, the claimed behavior and the
/// sample point at which the claim is evaluated.
struct ReferenceCase {
    std::string id;
    ParamSet params{};       // params.q is the order the verdict is tested at
    Equilibrium target{};
    Stability claimed = Stability::Undetermined;
    std::string claim;       // textual claim, including the sampled point
    bool run_integration = false;
    IntegratorConfig integ{};
};

/// The fixture table, in id order.
const std::vector<ReferenceCase>& reference_cases();

struct ReproduceOutcome {
    ReferenceCase ref;
    AnalyzeReport analysis;
    bool match = false;  // computed verdict kind equals the claimed kind
    std::optional<SimulateOutcome> simulation;
};

/// Runs one case through the analyzer (and the integrator when the case
/// asks for it, writing reproduce_<id>.csv plus orbit SVGs).
/// Throws UnknownExample for ids outside the table.
ReproduceOutcome run_reproduce(const std::string& id);
void print_reproduce(std::ostream& out, const ReproduceOutcome& outcome);

}  // namespace fractoda::app
