#pragma once

// Core value types shared by every module: the 5-component state, the
// parameter set (system gains a, b, feedback gains c1..c3, fractional
// order q), the equilibrium family, eigenvalue sets and stability
// verdicts.  All types are immutable value objects and safe to share
// across threads.

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace fractoda {

inline constexpr double kPi = 3.14159265358979323846;

/// Absolute tolerance below which an eigenvalue is treated as zero.
inline constexpr double kZeroEigenTol = 1e-12;

/// Half-width of the critical band around |arg(lambda)| = q*pi/2.
inline constexpr double kCriticalArgTol = 1e-9;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// A state component is NaN or infinite where a finite value is required.
struct NonFiniteState : std::domain_error {
    using std::domain_error::domain_error;
};

/// Lattice state vectors have inconsistent lengths.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Fractional order outside the admissible interval.
struct OrderOutOfRange : std::domain_error {
    using std::domain_error::domain_error;
};

/// A closed-form region rule was applied to an equilibrium outside its family.
struct RuleFamilyMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Unknown reference-case id passed to the reproduce command.
struct UnknownExample : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed configuration file or option set.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// State
// ---------------------------------------------------------------------------

/// State vector (x1, x2, x3, x4, x5).  x4 and x5 carry the lattice
/// off-diagonal variables; x1..x3 the site variables.
struct State5 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
    double x4 = 0.0;
    double x5 = 0.0;

    double operator[](std::size_t i) const;
    double& operator[](std::size_t i);

    [[nodiscard]] bool finite() const;
    [[nodiscard]] std::array<double, 5> to_array() const { return {x1, x2, x3, x4, x5}; }

    bool operator==(const State5&) const = default;
};

State5 operator+(const State5& lhs, const State5& rhs);
State5 operator-(const State5& lhs, const State5& rhs);
State5 operator*(double s, const State5& v);

/// Euclidean distance between two states.
double distance(const State5& lhs, const State5& rhs);

/// Euclidean norm.
double norm(const State5& v);

/// Largest absolute component.
double max_abs(const State5& v);

/// Throws NonFiniteState unless every component of `s` is finite.
void require_finite(const State5& s, const char* where);

using Mat5 = std::array<std::array<double, 5>, 5>;

State5 mat_vec(const Mat5& m, const State5& x);

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

/// System parameters a, b, feedback gains c1..c3 (all nonzero) and the
/// fractional order q in (0, 1].  q = 1 is admitted only as the classical
/// one-step-Euler limit of the integrator; the stability theory assumes
/// q strictly inside (0, 1).
struct ParamSet {
    double a = -1.0;
    double b = -1.0;
    double c1 = -1.0;
    double c2 = -1.0;
    double c3 = -1.0;
    double q = 0.8;

    bool operator==(const ParamSet&) const = default;
};

struct ParamIssue {
    enum class Kind { ZeroParameter, NonFiniteParameter, OrderOutOfRange };
    Kind kind;
    std::string field;

    [[nodiscard]] std::string message() const;
};

/// Checks every ParamSet invariant.  Nonzero tests are exact comparisons
/// with 0: parameters are user-entered, never computed.
std::optional<ParamIssue> validate_params(const ParamSet& p);

/// Throws std::invalid_argument with the issue message when invalid.
void require_valid(const ParamSet& p);

// ---------------------------------------------------------------------------
// Equilibria
// ---------------------------------------------------------------------------

/// A point of the equilibrium family (0, k, m, 0, 0).  k = m = 0 encodes
/// the origin.  Every such point zeroes the uncontrolled vector field for
/// all parameter values.
struct Equilibrium {
    double k = 0.0;
    double m = 0.0;

    [[nodiscard]] State5 to_state() const { return {0.0, k, m, 0.0, 0.0}; }
    [[nodiscard]] bool is_origin() const { return k == 0.0 && m == 0.0; }

    bool operator==(const Equilibrium&) const = default;
};

// ---------------------------------------------------------------------------
// Spectra and verdicts
// ---------------------------------------------------------------------------

/// The five eigenvalues of a linearization together with the critical
/// order q_tilde = min over nonzero lambda of (2/pi)|arg lambda|.
/// q_tilde is empty exactly when some |lambda| <= kZeroEigenTol.
struct EigenSet {
    std::array<std::complex<double>, 5> lambdas{};
    std::optional<double> q_tilde;

    /// Builds the set and derives q_tilde (clamped to [0, 2]).
    static EigenSet from(const std::array<std::complex<double>, 5>& values);
};

/// Eigenvalue computation did not settle within the iteration budget.
/// `partial` carries the current diagonal estimates.
struct NoConvergence : std::runtime_error {
    std::array<std::complex<double>, 5> partial{};

    NoConvergence(const std::string& what, const std::array<std::complex<double>, 5>& p)
        : std::runtime_error(what), partial(p) {}
};

enum class Stability {
    AsymptoticallyStable = 0,
    CriticallyStable = 1,
    Unstable = 2,
    UnstableZeroEigenvalue = 3,
    Undetermined = 4,
};

const char* to_string(Stability s);

/// Code used in sweep CSV output; 5 (skipped cell) has no Stability value.
inline int verdict_code(Stability s) { return static_cast<int>(s); }
inline constexpr int kSkippedCellCode = 5;

/// Outcome of a stability test together with the eigenvalue that decided it.
struct StabilityVerdict {
    Stability kind = Stability::Undetermined;
    std::complex<double> witness{0.0, 0.0};
};

// ---------------------------------------------------------------------------
// Integrator configuration
// ---------------------------------------------------------------------------

/// Fixed-step scheme configuration: step size h, step count N (so the
/// horizon is T = N*h) and the initial perturbation magnitude epsilon.
struct IntegratorConfig {
    double h = 0.01;
    long long steps = 100;
    double epsilon = 0.01;

    [[nodiscard]] double horizon() const { return h * static_cast<double>(steps); }

    bool operator==(const IntegratorConfig&) const = default;
};

/// Empty when valid, otherwise a description of the violated invariant.
std::optional<std::string> validate_integrator_config(const IntegratorConfig& c);

}  // namespace fractoda
