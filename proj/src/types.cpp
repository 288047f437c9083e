#include "fractoda/types.hpp"

#include <cmath>

namespace fractoda {

double State5::operator[](std::size_t i) const {
    switch (i) {
        case 0: return x1;
        case 1: return x2;
        case 2: return x3;
        case 3: return x4;
        case 4: return x5;
        default: throw std::out_of_range("State5 index out of range");
    }
}

double& State5::operator[](std::size_t i) {
    switch (i) {
        case 0: return x1;
        case 1: return x2;
        case 2: return x3;
        case 3: return x4;
        case 4: return x5;
        default: throw std::out_of_range("State5 index out of range");
    }
}

bool State5::finite() const {
    return std::isfinite(x1) && std::isfinite(x2) && std::isfinite(x3) &&
           std::isfinite(x4) && std::isfinite(x5);
}

State5 operator+(const State5& lhs, const State5& rhs) {
    return {lhs.x1 + rhs.x1, lhs.x2 + rhs.x2, lhs.x3 + rhs.x3, lhs.x4 + rhs.x4, lhs.x5 + rhs.x5};
}

State5 operator-(const State5& lhs, const State5& rhs) {
    return {lhs.x1 - rhs.x1, lhs.x2 - rhs.x2, lhs.x3 - rhs.x3, lhs.x4 - rhs.x4, lhs.x5 - rhs.x5};
}

State5 operator*(double s, const State5& v) {
    return {s * v.x1, s * v.x2, s * v.x3, s * v.x4, s * v.x5};
}

double distance(const State5& lhs, const State5& rhs) { return norm(lhs - rhs); }

double norm(const State5& v) {
    return std::sqrt(v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3 + v.x4 * v.x4 + v.x5 * v.x5);
}

double max_abs(const State5& v) {
    double m = std::fabs(v.x1);
    m = std::max(m, std::fabs(v.x2));
    m = std::max(m, std::fabs(v.x3));
    m = std::max(m, std::fabs(v.x4));
    m = std::max(m, std::fabs(v.x5));
    return m;
}

void require_finite(const State5& s, const char* where) {
    if (!s.finite()) {
        throw NonFiniteState(std::string(where) + ": state has a non-finite component");
    }
}

State5 mat_vec(const Mat5& m, const State5& x) {
    State5 out{};
    for (std::size_t r = 0; r < 5; ++r) {
        double sum = 0.0;
        for (std::size_t c = 0; c < 5; ++c) sum += m[r][c] * x[c];
        out[r] = sum;
    }
    return out;
}

std::string ParamIssue::message() const {
    switch (kind) {
        case Kind::ZeroParameter:
            return "ZeroParameter: '" + field + "' must be nonzero";
        case Kind::NonFiniteParameter:
            return "NonFiniteParameter: '" + field + "' must be finite";
        case Kind::OrderOutOfRange:
            return "OrderOutOfRange: q must lie in (0, 1], got " + field;
    }
    return "unknown parameter issue";
}

std::optional<ParamIssue> validate_params(const ParamSet& p) {
    const std::pair<const char*, double> gains[] = {
        {"a", p.a}, {"b", p.b}, {"c1", p.c1}, {"c2", p.c2}, {"c3", p.c3}};
    for (const auto& [name, value] : gains) {
        if (!std::isfinite(value)) {
            return ParamIssue{ParamIssue::Kind::NonFiniteParameter, name};
        }
        if (value == 0.0) {
            return ParamIssue{ParamIssue::Kind::ZeroParameter, name};
        }
    }
    if (!std::isfinite(p.q) || p.q <= 0.0 || p.q > 1.0) {
        return ParamIssue{ParamIssue::Kind::OrderOutOfRange, std::to_string(p.q)};
    }
    return std::nullopt;
}

void require_valid(const ParamSet& p) {
    if (auto issue = validate_params(p)) {
        throw std::invalid_argument(issue->message());
    }
}

EigenSet EigenSet::from(const std::array<std::complex<double>, 5>& values) {
    EigenSet e;
    e.lambdas = values;
    double min_arg = kPi;  // |arg| is at most pi with the principal branch
    bool zero = false;
    for (const auto& lam : values) {
        if (std::abs(lam) <= kZeroEigenTol) {
            zero = true;
        } else {
            min_arg = std::min(min_arg, std::fabs(std::arg(lam)));
        }
    }
    if (zero) {
        e.q_tilde = std::nullopt;
    } else {
        double qt = (2.0 * min_arg) / kPi;
        e.q_tilde = std::min(std::max(qt, 0.0), 2.0);
    }
    return e;
}

const char* to_string(Stability s) {
    switch (s) {
        case Stability::AsymptoticallyStable: return "AsymptoticallyStable";
        case Stability::CriticallyStable: return "CriticallyStable";
        case Stability::Unstable: return "Unstable";
        case Stability::UnstableZeroEigenvalue: return "UnstableZeroEigenvalue";
        case Stability::Undetermined: return "Undetermined";
    }
    return "?";
}

std::optional<std::string> validate_integrator_config(const IntegratorConfig& c) {
    if (!std::isfinite(c.h) || c.h <= 0.0) return "step size h must be positive and finite";
    if (c.steps < 1) return "step count N must be at least 1";
    if (!std::isfinite(c.epsilon)) return "perturbation epsilon must be finite";
    return std::nullopt;
}

}  // namespace fractoda
